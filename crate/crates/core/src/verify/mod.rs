//! Independent verification: exact warden error sums, Monte Carlo decoding
//! against Gallager's bound, and the oracle battery run by `covertcap verify`.

mod battery;
pub mod quadrature;
mod sim;

pub use battery::{
    reference_sim_config, run_battery, run_oracle_battery, BatteryOptions, BatteryReport, CheckOutcome, Scope,
};
pub use sim::{codebook_detection, simulate_decoding, CodebookDetection, SimConfig, SimResult, RNG_ALGORITHM};

use crate::divergence::{binomial_detection, DetectionResult};
use crate::error::{check_probability, Result};

/// Optimal warden error sum against a BSC(`eps_dx`) when each transmitted
/// symbol is 1 with probability `tau_u`. The warden's observation is then
/// i.i.d. Bernoulli(q1) with `q1 = (1 - tau_u) eps_dx + tau_u (1 - eps_dx)`.
pub fn detection_error_sum_exact(n: u64, tau_u: f64, eps_dx: f64) -> Result<DetectionResult> {
    check_probability("tau_u", tau_u)?;
    check_probability("eps_dx", eps_dx)?;
    let q1 = (1.0 - tau_u) * eps_dx + tau_u * (1.0 - eps_dx);
    binomial_detection(n, eps_dx, q1)
}
