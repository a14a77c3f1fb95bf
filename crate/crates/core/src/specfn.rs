//! Principal-branch Lambert-W, its inverse, and the covertness factor
//! `xi = exp(-W0(4 eps_det^2) / 2)` that turns a detection budget into a
//! chi-squared budget.

use std::f64::consts::E;

use serde::{Deserialize, Serialize};

use crate::error::{check_open_probability, domain, Result};

/// Branch point of W0.
pub const BRANCH_POINT: f64 = -1.0 / E;

const MAX_ITER: usize = 50;
const RESIDUAL_TOL: f64 = 1e-14;

/// Principal branch `W0(x)`, the solution `w >= -1` of `w e^w = x`.
///
/// Solved by Halley iteration. The seed is `x` near the origin,
/// `ln x - ln ln x` above `e`, a branch-point series close to `-1/e`
/// and `ln(1 + x)` elsewhere.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(domain(format!("lambert_w0: non-finite argument {x}")));
    }
    if x < BRANCH_POINT {
        // -1/e is not exactly representable; accept arguments that round to it.
        if x >= BRANCH_POINT - 4.0 * f64::EPSILON {
            return Ok(-1.0);
        }
        return Err(domain(format!("lambert_w0: argument {x} below -1/e")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }

    let mut w = if x.abs() < 0.3 {
        x
    } else if x > E {
        let l = x.ln();
        l - l.ln()
    } else if x < -0.25 {
        let p = (2.0 * (E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else {
        x.ln_1p()
    };

    for _ in 0..MAX_ITER {
        let ew = w.exp();
        let f = w * ew - x;
        if f.abs() <= RESIDUAL_TOL * x.abs() {
            break;
        }
        let wp1 = w + 1.0;
        if wp1 <= 0.0 {
            // Landed on or past the branch point; only reachable for x ~ -1/e.
            return Ok(-1.0);
        }
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        let next = w - step;
        if next == w {
            break;
        }
        w = next;
    }
    Ok(w.max(-1.0))
}

/// Inverse of the principal branch, `z e^z`, defined for `z >= -1`.
pub fn lambert_w0_inv(z: f64) -> Result<f64> {
    if z.is_nan() || z < -1.0 {
        return Err(domain(format!("lambert_w0_inv: argument {z} below -1")));
    }
    Ok(z * z.exp())
}

/// `exp(-W0(4 eps_det^2) / 2)`, in `(0, 1]`.
pub fn xi_factor(eps_det: f64) -> Result<f64> {
    check_open_probability("eps_det", eps_det)?;
    let w = lambert_w0(4.0 * eps_det * eps_det)?;
    Ok((-0.5 * w).exp())
}

/// Covertness and reliability targets together with the derived factor xi.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LpdBudget {
    eps_det: f64,
    eps_dec: f64,
    xi: f64,
}

impl LpdBudget {
    pub fn new(eps_det: f64, eps_dec: f64) -> Result<Self> {
        check_open_probability("eps_det", eps_det)?;
        check_open_probability("eps_dec", eps_dec)?;
        let xi = xi_factor(eps_det)?;
        Ok(Self { eps_det, eps_dec, xi })
    }

    /// Detection slack: the warden's error sum must stay above `1 - eps_det`.
    pub fn eps_det(&self) -> f64 {
        self.eps_det
    }

    /// Target average decoding error.
    pub fn eps_dec(&self) -> f64 {
        self.eps_dec
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    /// `log2(1 / eps_dec)`, the decoding penalty in bits.
    pub fn penalty_bits(&self) -> f64 {
        -self.eps_dec.log2()
    }

    /// Copy of the budget with xi multiplied by `factor`. Only meant for
    /// sensitivity probes of the verification battery.
    #[doc(hidden)]
    pub fn with_scaled_xi(mut self, factor: f64) -> Self {
        self.xi *= factor;
        self
    }
}
