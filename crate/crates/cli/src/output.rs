//! CSV and JSON writers. Both are pure functions of their inputs so the
//! bytes are stable for a fixed configuration.

use std::f64::consts::LN_2;
use std::fmt::Write as _;

use covertcap::{Evaluation, OptimalOperating};
use serde::Serialize;

use crate::config::RunConfig;

pub const CSV_VERSION_LINE: &str = "# covertcap v1";
pub const CAPACITY_TAG: &str = "capacity-mode";

pub fn csv_header(with_n_min: bool, nats: bool) -> String {
    let mut h = String::from("n,rho,tau,log2_m,rate,asymptotic_rate");
    if with_n_min {
        h.push_str(",n_min");
    }
    if nats {
        h.push_str(",rate_nats");
    }
    h
}

/// Sweep table, one row per evaluation in grid order.
pub fn write_csv(rows: &[Evaluation], n_min: Option<f64>, nats: bool) -> String {
    let mut out = format!("{CSV_VERSION_LINE}\n{}\n", csv_header(n_min.is_some(), nats));
    for row in rows {
        match row {
            Evaluation::Covert { point, asymptotic_rate } => {
                let _ = write!(
                    out,
                    "{},{},{},{},{},{}",
                    point.n, point.rho, point.tau, point.log2_m, point.rate, asymptotic_rate
                );
            }
            Evaluation::CapacityMode { n, rate } => {
                let _ = write!(out, "{n},,1,,{rate},{CAPACITY_TAG}");
            }
        }
        if let Some(m) = n_min {
            let _ = write!(out, ",{m}");
        }
        if nats {
            let _ = write!(out, ",{}", row.rate() * LN_2);
        }
        out.push('\n');
    }
    out
}

/// The one-object-per-run JSON document.
#[derive(Debug, Serialize)]
pub struct RunDocument<'a, C: Serialize, V: Serialize> {
    pub config: &'a C,
    pub points: Vec<JsonPoint>,
    pub operating_point: Option<JsonOperating>,
    pub verification: Option<V>,
}

#[derive(Debug, Serialize)]
pub struct JsonPoint {
    #[serde(flatten)]
    pub evaluation: Evaluation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rate_nats: Option<f64>,
}

#[derive(Debug, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum JsonOperating {
    Covert {
        #[serde(flatten)]
        op: OptimalOperating,
    },
    CapacityMode {
        rate: f64,
    },
    NoPositiveRate {
        message: String,
    },
}

pub fn json_points(rows: &[Evaluation], nats: bool) -> Vec<JsonPoint> {
    rows.iter()
        .map(|row| JsonPoint { evaluation: *row, rate_nats: nats.then(|| row.rate() * LN_2) })
        .collect()
}

pub fn to_json<C: Serialize, V: Serialize>(doc: &RunDocument<'_, C, V>) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data serialises");
    s.push('\n');
    s
}

/// `x` rounded to six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    // Round first: the exponent of the rounded value picks the layout.
    let sci = format!("{x:.5e}");
    let e: i32 = sci[sci.find('e').expect("exponent present") + 1..].parse().expect("integer exponent");
    if (-4..6).contains(&e) {
        format!("{:.*}", (5 - e) as usize, x)
    } else {
        sci
    }
}

pub fn operating_text(cfg: &RunConfig, op: &OptimalOperating) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n*      {}", sig6(op.n_star));
    let _ = writeln!(s, "R(n*)   {} bits/use", sig6(op.r_star));
    let _ = writeln!(s, "k*      {} bits", sig6(op.k_star));
    let _ = writeln!(s, "rho*    {}", sig6(op.rho_used));
    if let Some(m) = op.n_min {
        let _ = writeln!(s, "n_min   {}", sig6(m));
    }
    let _ = writeln!(s, "eps_det {}  eps_dec {}", cfg.eps_det, cfg.eps_dec);
    s
}
