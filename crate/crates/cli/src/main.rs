//! `covertcap`: sweep covert-rate bounds over blocklength, report the
//! peak-rate operating point, and run the verification battery.

mod config;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use covertcap::bounds::sweep;
use covertcap::verify::{run_battery, BatteryOptions, BatteryReport, Scope};
use covertcap::Error;
use serde::Serialize;

use config::{parse_range, resolve, ChannelArgs, FileConfig, GridSpec, RunConfig};
use output::{json_points, operating_text, sig6, to_json, write_csv, JsonOperating, RunDocument};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Verification(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Verification(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "covertcap", version, about = "Finite-blocklength covert communication bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScopeArg {
    Fast,
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Achievable covert bits at each blocklength of a grid.
    Bound {
        #[command(flatten)]
        channel: ChannelArgs,
        /// Comma-separated blocklengths.
        #[arg(long, value_delimiter = ',', conflicts_with = "n_range")]
        n: Option<Vec<f64>>,
        /// Log-spaced grid START:STOP:POINTS, rounded to integers.
        #[arg(long, value_name = "START:STOP:POINTS", value_parser = parse_range)]
        n_range: Option<GridSpec>,
        #[arg(long, value_enum)]
        format: Option<TableFormat>,
        /// Output file; standard output when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Append the rate in nats per use.
        #[arg(long)]
        nats: bool,
    },
    /// Peak-rate blocklength, rate and payload.
    Optimal {
        #[command(flatten)]
        channel: ChannelArgs,
        #[arg(long, value_enum)]
        format: Option<ReportFormat>,
    },
    /// Run the oracle battery; exit status 2 if any check fails.
    Verify {
        /// TOML config file (reads `seed` and `scope`).
        #[arg(long, value_name = "FILE")]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum)]
        scope: Option<ScopeArg>,
        /// Machine-readable report destination.
        #[arg(long, default_value = "covertcap-verify.json")]
        report: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Scales xi inside the covertness checks (mutation testing).
        #[arg(long, hide = true, default_value_t = 1.0)]
        perturb_xi: f64,
    },
}

const DEFAULT_SEED: u64 = 1;

fn load_file(path: Option<&Path>) -> Result<FileConfig, CliError> {
    path.map_or_else(|| Ok(FileConfig::default()), FileConfig::load)
}

fn parse_enum<T: serde::de::DeserializeOwned>(key: &str, value: &str) -> Result<T, CliError> {
    serde_json::from_value(serde_json::Value::String(value.to_owned()))
        .map_err(|_| CliError::usage(format!("config `{key}`: unsupported value {value:?}")))
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn operating(cfg: &RunConfig) -> Result<JsonOperating, CliError> {
    match cfg.channel.operating_point(&cfg.budget()) {
        Ok(op) => Ok(JsonOperating::Covert { op }),
        Err(Error::DetectorBlind) => Ok(JsonOperating::CapacityMode { rate: cfg.channel.receiver_capacity() }),
        Err(Error::NoPositiveRate) => {
            Ok(JsonOperating::NoPositiveRate { message: Error::NoPositiveRate.to_string() })
        }
        Err(e) => Err(CliError::usage(e.to_string())),
    }
}

fn cmd_bound(
    args: &ChannelArgs,
    n: Option<Vec<f64>>,
    n_range: Option<GridSpec>,
    format: Option<TableFormat>,
    output: Option<PathBuf>,
    nats: bool,
) -> Result<(), CliError> {
    let file = load_file(args.config.as_deref())?;
    let cli_grid = n.map(|values| GridSpec::Values { values }).or(n_range);
    let cfg = resolve(args, &file, cli_grid)?;
    let grid = cfg
        .grid
        .as_ref()
        .ok_or_else(|| CliError::usage("no blocklength grid; use --n, --n-range or [grid] in the config"))?
        .expand()?;
    let format = match (format, file.format.as_deref()) {
        (Some(f), _) => f,
        (None, Some(s)) => parse_enum("format", s)?,
        (None, None) => TableFormat::Csv,
    };
    let nats = nats || file.nats.unwrap_or(false);
    let output = output.or(file.output.clone());
    let budget = cfg.budget();
    let rows = sweep(&cfg.channel, &grid, &budget).map_err(|e| CliError::usage(e.to_string()))?;
    let text = match format {
        TableFormat::Csv => write_csv(&rows, cfg.channel.n_min(&budget), nats),
        TableFormat::Json => to_json(&RunDocument::<_, ()> {
            config: &cfg,
            points: json_points(&rows, nats),
            operating_point: Some(operating(&cfg)?),
            verification: None,
        }),
    };
    emit(output.as_deref(), &text)
}

fn cmd_optimal(args: &ChannelArgs, format: Option<ReportFormat>) -> Result<(), CliError> {
    let file = load_file(args.config.as_deref())?;
    let cfg = resolve(args, &file, None)?;
    let format = match (format, file.format.as_deref()) {
        (Some(f), _) => f,
        (None, Some(s)) => parse_enum("format", s)?,
        (None, None) => ReportFormat::Text,
    };
    let op = operating(&cfg)?;
    if let JsonOperating::NoPositiveRate { message } = op {
        return Err(CliError::usage(message));
    }
    match format {
        ReportFormat::Json => {
            let cfg = RunConfig { grid: None, ..cfg };
            emit(None, &to_json(&RunDocument::<_, ()> { config: &cfg, points: vec![], operating_point: Some(op), verification: None }))
        }
        ReportFormat::Text => match op {
            JsonOperating::Covert { op } => emit(None, &operating_text(&cfg, &op)),
            JsonOperating::CapacityMode { rate } => emit(
                None,
                &format!("capacity-mode: the warden's channel is blind; any rate below {} bits/use\n", sig6(rate)),
            ),
            JsonOperating::NoPositiveRate { .. } => unreachable!("returned above"),
        },
    }
}

#[derive(Serialize)]
struct VerifyConfig {
    seed: u64,
    scope: Scope,
    #[serde(skip_serializing_if = "is_one")]
    perturb_xi: f64,
}

fn is_one(x: &f64) -> bool {
    *x == 1.0
}

fn cmd_verify(
    config: Option<&Path>,
    seed: Option<u64>,
    scope: Option<ScopeArg>,
    report: &Path,
    format: ReportFormat,
    perturb_xi: f64,
) -> Result<(), CliError> {
    let file = load_file(config)?;
    let scope = match (scope, file.scope.as_deref()) {
        (Some(ScopeArg::Fast), _) => Scope::Fast,
        (Some(ScopeArg::Full), _) => Scope::Full,
        (None, Some(s)) => parse_enum("scope", s)?,
        (None, None) => Scope::Fast,
    };
    let seed = seed.or(file.seed).unwrap_or(DEFAULT_SEED);
    if !(perturb_xi.is_finite() && perturb_xi > 0.0) {
        return Err(CliError::usage("--perturb-xi must be positive"));
    }
    let opts = BatteryOptions { seed, scope, xi_scale: perturb_xi };
    let result: BatteryReport = run_battery(&opts).map_err(|e| CliError::usage(e.to_string()))?;
    let vcfg = VerifyConfig { seed, scope, perturb_xi };
    let json = to_json(&RunDocument { config: &vcfg, points: vec![], operating_point: None, verification: Some(&result) });
    emit(Some(report), &json)?;
    match format {
        ReportFormat::Text => print!("{}", result.to_text()),
        ReportFormat::Json => print!("{json}"),
    }
    if result.all_passed() {
        Ok(())
    } else {
        let names: Vec<&str> = result.failures().map(|c| c.name.as_str()).collect();
        Err(CliError::Verification(format!("failed checks: {}", names.join(", "))))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Bound { channel, n, n_range, format, output, nats } => {
            cmd_bound(&channel, n, n_range, format, output, nats)
        }
        Command::Optimal { channel, format } => cmd_optimal(&channel, format),
        Command::Verify { config, seed, scope, report, format, perturb_xi } => {
            cmd_verify(config.as_deref(), seed, scope, &report, format, perturb_xi)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Verification(m) => eprintln!("verification failed: {m}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
