use thiserror::Error;

/// Errors raised by the bound, divergence and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The warden's channel output does not depend on the input, so the
    /// covertness constraint places no limit on the sparseness factor.
    #[error("detector-blind: warden channel carries no information about the input (capacity mode)")]
    DetectorBlind,

    #[error("chi-squared divergent: kernel power {power} must be below warden noise variance {sigma2_dx}")]
    ChiSquaredDivergent { power: f64, sigma2_dx: f64 },

    #[error("no positive covert rate for these parameters")]
    NoPositiveRate,

    #[error("infeasible configuration: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn check_probability(name: &str, p: f64) -> Result<()> {
    if p.is_finite() && (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(domain(format!("{name} = {p} is not a probability in [0, 1]")))
    }
}

pub(crate) fn check_open_probability(name: &str, p: f64) -> Result<()> {
    if p.is_finite() && p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(domain(format!("{name} = {p} must lie in (0, 1)")))
    }
}

pub(crate) fn check_positive(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(domain(format!("{name} = {x} must be positive and finite")))
    }
}
