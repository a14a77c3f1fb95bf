//! Run configuration: an optional TOML file, overridden field by field by
//! command-line flags, resolved into a validated [`RunConfig`].

use std::path::{Path, PathBuf};

use covertcap::{ChannelPair, LpdBudget};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const DEFAULT_EPS_DET: f64 = 0.1;
pub const DEFAULT_EPS_DEC: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ChannelKind {
    Bsc,
    Awgn,
}

/// Blocklength grid: explicit values, or `points` log-spaced values from
/// `start` to `stop` rounded to integers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GridSpec {
    Values { values: Vec<f64> },
    Log { start: f64, stop: f64, points: usize },
}

impl GridSpec {
    pub fn expand(&self) -> Result<Vec<f64>, CliError> {
        let ns = match *self {
            GridSpec::Values { ref values } => values.clone(),
            GridSpec::Log { start, stop, points } => {
                if !(start >= 1.0 && stop >= start && stop.is_finite()) || points == 0 {
                    return Err(CliError::usage(format!(
                        "log grid needs 1 <= start <= stop and points >= 1 (got {start}:{stop}:{points})"
                    )));
                }
                let mut ns: Vec<f64> = (0..points)
                    .map(|i| {
                        let t = if points == 1 { 0.0 } else { i as f64 / (points - 1) as f64 };
                        (start * (stop / start).powf(t)).round()
                    })
                    .collect();
                ns.dedup();
                ns
            }
        };
        if ns.is_empty() {
            return Err(CliError::usage("empty blocklength grid"));
        }
        if let Some(bad) = ns.iter().find(|n| !(n.is_finite() && **n >= 1.0)) {
            return Err(CliError::usage(format!("blocklength {bad} must be a finite number >= 1")));
        }
        if ns.windows(2).any(|w| w[1] <= w[0]) {
            return Err(CliError::usage("blocklength grid must be strictly increasing"));
        }
        Ok(ns)
    }
}

/// Parses `START:STOP:POINTS`.
pub fn parse_range(s: &str) -> Result<GridSpec, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected START:STOP:POINTS, got {s:?}"));
    }
    let num = |p: &str| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}"));
    let points = parts[2].trim().parse::<usize>().map_err(|e| format!("{:?}: {e}", parts[2]))?;
    Ok(GridSpec::Log { start: num(parts[0])?, stop: num(parts[1])?, points })
}

/// Schema of the config file. Every key is optional; flags win.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub channel: Option<ChannelKind>,
    pub eps_rx: Option<f64>,
    pub eps_dx: Option<f64>,
    pub sigma2_rx: Option<f64>,
    pub sigma2_dx: Option<f64>,
    pub eps_det: Option<f64>,
    pub eps_dec: Option<f64>,
    pub grid: Option<GridSpec>,
    pub format: Option<String>,
    pub output: Option<PathBuf>,
    pub nats: Option<bool>,
    pub seed: Option<u64>,
    pub scope: Option<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::usage(format!("config {}: {e}", path.display())))
    }
}

/// Channel and budget flags shared by `bound` and `optimal`.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct ChannelArgs {
    /// TOML config file; flags override its values.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub channel: Option<ChannelKind>,
    /// BSC crossover to the receiver.
    #[arg(long)]
    pub eps_rx: Option<f64>,
    /// BSC crossover to the warden.
    #[arg(long)]
    pub eps_dx: Option<f64>,
    /// AWGN noise variance at the receiver.
    #[arg(long)]
    pub sigma2_rx: Option<f64>,
    /// AWGN noise variance at the warden.
    #[arg(long)]
    pub sigma2_dx: Option<f64>,
    /// Detection slack; the warden's error sum stays >= 1 - eps_det [default: 0.1].
    #[arg(long)]
    pub eps_det: Option<f64>,
    /// Target decoding error [default: 0.001].
    #[arg(long)]
    pub eps_dec: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub channel: ChannelPair,
    pub eps_det: f64,
    pub eps_dec: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSpec>,
}

impl RunConfig {
    pub fn budget(&self) -> LpdBudget {
        LpdBudget::new(self.eps_det, self.eps_dec).expect("validated in resolve")
    }
}

fn need(v: Option<f64>, name: &str, kind: &str) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::usage(format!("{kind} channel needs --{}", name.replace('_', "-"))))
}

/// Merges the file (if any) under the flags and validates the result.
pub fn resolve(args: &ChannelArgs, file: &FileConfig, grid: Option<GridSpec>) -> Result<RunConfig, CliError> {
    let kind = args
        .channel
        .or(file.channel)
        .ok_or_else(|| CliError::usage("no channel given; use --channel bsc|awgn or `channel` in the config"))?;
    let channel = match kind {
        ChannelKind::Bsc => ChannelPair::Bsc {
            eps_rx: need(args.eps_rx.or(file.eps_rx), "eps_rx", "bsc")?,
            eps_dx: need(args.eps_dx.or(file.eps_dx), "eps_dx", "bsc")?,
        },
        ChannelKind::Awgn => ChannelPair::Awgn {
            sigma2_rx: need(args.sigma2_rx.or(file.sigma2_rx), "sigma2_rx", "awgn")?,
            sigma2_dx: need(args.sigma2_dx.or(file.sigma2_dx), "sigma2_dx", "awgn")?,
        },
    };
    channel.validate().map_err(|e| CliError::usage(e.to_string()))?;
    let eps_det = args.eps_det.or(file.eps_det).unwrap_or(DEFAULT_EPS_DET);
    let eps_dec = args.eps_dec.or(file.eps_dec).unwrap_or(DEFAULT_EPS_DEC);
    LpdBudget::new(eps_det, eps_dec).map_err(|e| CliError::usage(e.to_string()))?;
    let grid = grid.or_else(|| file.grid.clone());
    Ok(RunConfig { channel, eps_det, eps_dec, grid })
}
