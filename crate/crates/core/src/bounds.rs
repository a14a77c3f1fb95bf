//! Finite-blocklength achievability engine.
//!
//! With sparse signalling held at the largest sparseness the detection
//! budget allows, the number of covert bits satisfies
//!
//! ```text
//! log2 M >= eps_det * sqrt(n) * L(rho) + log2(eps_dec) / rho
//! L(rho)  = (2 xi / ln 2) * ((1 + rho) / rho) * (1 - exp(-E0k(rho) / (1 + rho))) / sqrt(chi2k)
//! ```
//!
//! where `E0k` and `chi2k` are the kernel's Gallager exponent on the
//! receiver channel and its chi-squared visibility on the warden channel.
//! The BSC and AWGN closed forms are the `u -> 0` and `P -> 0` limits of
//! that pipeline; both routes are exposed so they can be checked against
//! each other.

use std::f64::consts::{LN_2, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::divergence::tau_max;
use crate::error::{check_positive, check_probability, domain, Error, Result};
use crate::gallager::{chi2_awgn_gaussian, chi2_bsc_kernel, e0_awgn_gaussian, e0_bsc};
use crate::search::golden_section_max;
use crate::specfn::LpdBudget;

/// Lower end of the rho search interval.
pub const RHO_FLOOR: f64 = 1e-6;
/// Bracket width at which the rho search stops.
pub const RHO_TOL: f64 = 1e-6;

/// The bound evaluated at one blocklength.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundPoint {
    pub n: f64,
    pub rho: f64,
    pub tau: f64,
    /// Raw bound in bits; negative below the break-even blocklength.
    pub log2_m: f64,
    /// `max(0, log2_m) / n`, bits per channel use.
    pub rate: f64,
}

/// Rate-optimal operating point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimalOperating {
    pub n_star: f64,
    pub r_star: f64,
    pub k_star: f64,
    pub rho_used: f64,
    /// Smallest blocklength with a positive bound (AWGN only).
    pub n_min: Option<f64>,
}

/// Result of maximising the bound over rho.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RhoOptimum {
    pub rho: f64,
    pub log2_m: f64,
    pub positive: bool,
}

fn check_rho_open(rho: f64) -> Result<()> {
    if rho.is_finite() && rho > 0.0 && rho <= 1.0 {
        Ok(())
    } else {
        Err(domain(format!("rho = {rho} must lie in (0, 1]")))
    }
}

/// `L(rho)` in bits per `eps_det * sqrt(n)`.
pub fn l_factor(rho: f64, e0_kernel: f64, chi2_kernel: f64, budget: &LpdBudget) -> Result<f64> {
    check_rho_open(rho)?;
    if e0_kernel.is_nan() || e0_kernel < 0.0 {
        return Err(domain(format!("kernel E0 {e0_kernel} must be >= 0")));
    }
    if chi2_kernel.is_nan() || chi2_kernel < 0.0 {
        return Err(domain(format!("kernel chi2 {chi2_kernel} must be >= 0")));
    }
    if chi2_kernel == 0.0 {
        return Err(Error::DetectorBlind);
    }
    let s = 1.0 + rho;
    let gain = -(-e0_kernel / s).exp_m1();
    Ok(2.0 * budget.xi() / LN_2 * (s / rho) * gain / chi2_kernel.sqrt())
}

/// `eps_det sqrt(n) L + log2(eps_dec) / rho`.
pub fn achievable_log2m(n: f64, rho: f64, l: f64, budget: &LpdBudget) -> f64 {
    budget.eps_det() * n.sqrt() * l + budget.eps_dec().log2() / rho
}

/// Maximises the bound over `rho in [RHO_FLOOR, 1]` for a given `L(rho)`.
pub fn optimize_rho_with<F: Fn(f64) -> f64>(n: f64, l_of_rho: F, budget: &LpdBudget) -> RhoOptimum {
    let (rho, log2_m) = golden_section_max(
        |rho| achievable_log2m(n, rho, l_of_rho(rho), budget),
        RHO_FLOOR,
        1.0,
        RHO_TOL,
    );
    RhoOptimum { rho, log2_m, positive: log2_m > 0.0 }
}

/// Maximises the bound over rho given the kernel's E0 as a function of rho
/// and its chi-squared visibility.
pub fn optimize_rho<F: Fn(f64) -> f64>(
    n: f64,
    e0_kernel_fn: F,
    chi2_kernel: f64,
    budget: &LpdBudget,
) -> Result<RhoOptimum> {
    check_positive("n", n)?;
    // Surface argument errors once instead of inside the search.
    l_factor(1.0, e0_kernel_fn(1.0).max(0.0), chi2_kernel, budget)?;
    Ok(optimize_rho_with(
        n,
        |rho| l_factor(rho, e0_kernel_fn(rho).max(0.0), chi2_kernel, budget).unwrap_or(0.0),
        budget,
    ))
}

/// Large-n limit of `log2 M / (eps_det sqrt(n))`,
/// `(2 xi / ln 2) I / sqrt(chi2)` with `I` in nats.
pub fn asymptotic_coefficient(kernel_mi: f64, chi2_kernel: f64, budget: &LpdBudget) -> Result<f64> {
    if kernel_mi.is_nan() || kernel_mi < 0.0 {
        return Err(domain(format!("mutual information {kernel_mi} must be >= 0")));
    }
    if chi2_kernel.is_nan() || chi2_kernel < 0.0 {
        return Err(domain(format!("kernel chi2 {chi2_kernel} must be >= 0")));
    }
    if chi2_kernel == 0.0 {
        return Err(Error::DetectorBlind);
    }
    Ok(2.0 * budget.xi() / LN_2 * kernel_mi / chi2_kernel.sqrt())
}

/// Rate-maximising blocklength at fixed rho:
/// `sqrt(n*) = 2 log2(1/eps_dec) / (eps_det rho L)`,
/// `R(n*) = eps_det^2 rho L^2 / (4 log2(1/eps_dec))`, `k* = log2(1/eps_dec) / rho`.
pub fn optimal_blocklength(rho: f64, l: f64, budget: &LpdBudget) -> Result<OptimalOperating> {
    check_rho_open(rho)?;
    if !(l > 0.0) || !l.is_finite() {
        return Err(Error::NoPositiveRate);
    }
    let pen = budget.penalty_bits();
    let eps = budget.eps_det();
    let sqrt_n = 2.0 * pen / (eps * rho * l);
    Ok(OptimalOperating {
        n_star: sqrt_n * sqrt_n,
        r_star: eps * eps * rho * l * l / (4.0 * pen),
        k_star: pen / rho,
        rho_used: rho,
        n_min: None,
    })
}

fn check_bsc_pair(eps_rx: f64, eps_dx: f64) -> Result<()> {
    if !(eps_rx.is_finite() && eps_rx > 0.0 && eps_rx <= 0.5) {
        return Err(domain(format!(
            "eps_rx = {eps_rx} must lie in (0, 1/2]; for eps_rx > 1/2 relabel the receiver outputs (eps_rx -> 1 - eps_rx)"
        )));
    }
    check_probability("eps_dx", eps_dx)?;
    if eps_dx == 0.5 {
        return Err(Error::DetectorBlind);
    }
    Ok(())
}

/// Closed-form `L` for receiver and warden BSCs (kernel mass `u -> 0`).
/// A perfect or perfectly inverted warden channel gives 0.
pub fn l_bsc(rho: f64, eps_rx: f64, eps_dx: f64, budget: &LpdBudget) -> Result<f64> {
    check_rho_open(rho)?;
    check_bsc_pair(eps_rx, eps_dx)?;
    if eps_dx == 0.0 || eps_dx == 1.0 {
        return Ok(0.0);
    }
    let s = 1.0 + rho;
    let (a, b) = (1.0 - eps_rx, eps_rx);
    let first = a.powf(1.0 / s) - b.powf(1.0 / s);
    let second = a.powf(rho / s) - b.powf(rho / s);
    let visibility = (eps_dx * (1.0 - eps_dx)).sqrt() / (1.0 - 2.0 * eps_dx).abs();
    Ok(2.0 * budget.xi() / LN_2 * (s / rho) * visibility * first * second)
}

/// `L` for a BSC pair through the generic (E0, chi2) route at kernel mass `u`.
pub fn l_bsc_generic(rho: f64, u: f64, eps_rx: f64, eps_dx: f64, budget: &LpdBudget) -> Result<f64> {
    check_rho_open(rho)?;
    l_factor(rho, e0_bsc(rho, u, eps_rx)?, chi2_bsc_kernel(u, eps_dx)?, budget)
}

/// Large-n slope of `log2 M / sqrt(n)` for a BSC pair,
/// `2 eps_det xi sqrt(eps_Dx (1-eps_Dx)) (1-2 eps_Rx)/|1-2 eps_Dx| log2((1-eps_Rx)/eps_Rx)`.
pub fn bsc_asymptote(eps_rx: f64, eps_dx: f64, budget: &LpdBudget) -> Result<f64> {
    check_bsc_pair(eps_rx, eps_dx)?;
    if eps_dx == 0.0 || eps_dx == 1.0 || eps_rx == 0.5 {
        return Ok(0.0);
    }
    let visibility = (eps_dx * (1.0 - eps_dx)).sqrt() / (1.0 - 2.0 * eps_dx).abs();
    Ok(2.0
        * budget.eps_det()
        * budget.xi()
        * visibility
        * (1.0 - 2.0 * eps_rx)
        * ((1.0 - eps_rx) / eps_rx).log2())
}

fn check_variances(sigma2_rx: f64, sigma2_dx: f64) -> Result<()> {
    check_positive("sigma2_rx", sigma2_rx)?;
    check_positive("sigma2_dx", sigma2_dx)
}

/// Closed-form `L` for AWGN channels (Gaussian kernel power `P -> 0`),
/// `sqrt(2) xi / ((1 + rho) ln 2) * sigma_Dx^2 / sigma_Rx^2`.
pub fn l_awgn(rho: f64, sigma2_rx: f64, sigma2_dx: f64, budget: &LpdBudget) -> Result<f64> {
    check_rho_open(rho)?;
    check_variances(sigma2_rx, sigma2_dx)?;
    Ok(SQRT_2 * budget.xi() / ((1.0 + rho) * LN_2) * sigma2_dx / sigma2_rx)
}

/// `L` for AWGN channels through the generic route at kernel power `power`.
pub fn l_awgn_generic(
    rho: f64,
    power: f64,
    sigma2_rx: f64,
    sigma2_dx: f64,
    budget: &LpdBudget,
) -> Result<f64> {
    l_factor(
        rho,
        e0_awgn_gaussian(rho, power, sigma2_rx)?,
        chi2_awgn_gaussian(power, sigma2_dx)?,
        budget,
    )
}

/// AWGN bound in bits,
/// `sqrt(2n) eps_det xi / ((1+rho) ln 2) * sigma_Dx^2/sigma_Rx^2 + log2(eps_dec)/rho`.
pub fn awgn_bound(n: f64, rho: f64, sigma2_rx: f64, sigma2_dx: f64, budget: &LpdBudget) -> Result<f64> {
    check_positive("n", n)?;
    let l = l_awgn(rho, sigma2_rx, sigma2_dx, budget)?;
    Ok(achievable_log2m(n, rho, l, budget))
}

/// `sigma_Rx^4 ln^2(1/eps_dec) / (2 xi^2 eps_det^2 sigma_Dx^4)`.
pub fn awgn_n_min(sigma2_rx: f64, sigma2_dx: f64, budget: &LpdBudget) -> Result<f64> {
    check_variances(sigma2_rx, sigma2_dx)?;
    let ratio2 = (sigma2_rx / sigma2_dx).powi(2);
    let ln_dec = budget.eps_dec().ln();
    let xe = budget.xi() * budget.eps_det();
    Ok(ratio2 * ln_dec * ln_dec / (2.0 * xe * xe))
}

/// Maximiser of the AWGN bound over rho,
/// `(1 + (n/n_min)^{1/4}) / (sqrt(n/n_min) - 1)`, clamped to `[0, 1]`.
/// Below `16 n_min` the unconstrained optimum exceeds 1 (or does not exist)
/// and the bound is largest at `rho = 1`.
pub fn awgn_rho_star(n: f64, n_min: f64) -> f64 {
    let t = n / n_min;
    let denom = t.sqrt() - 1.0;
    if denom <= 0.0 {
        return 1.0;
    }
    ((1.0 + t.powf(0.25)) / denom).clamp(0.0, 1.0)
}

/// AWGN peak-rate operating point, all in closed form.
pub fn awgn_operating_point(sigma2_rx: f64, sigma2_dx: f64, budget: &LpdBudget) -> Result<OptimalOperating> {
    let n_min = awgn_n_min(sigma2_rx, sigma2_dx, budget)?;
    let ratio2 = (sigma2_dx / sigma2_rx).powi(2);
    let xe2 = (budget.xi() * budget.eps_det()).powi(2);
    let ln_inv_dec = -budget.eps_dec().ln();
    let n_star = 8.0 * ln_inv_dec * ln_inv_dec / (xe2 * ratio2);
    let r_star = xe2 * ratio2 / (8.0 * LN_2 * ln_inv_dec);
    Ok(OptimalOperating {
        n_star,
        r_star,
        k_star: budget.penalty_bits(),
        rho_used: awgn_rho_star(n_star, n_min),
        n_min: Some(n_min),
    })
}

/// A receiver/warden channel pair the engine knows in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ChannelPair {
    Bsc { eps_rx: f64, eps_dx: f64 },
    Awgn { sigma2_rx: f64, sigma2_dx: f64 },
}

/// One sweep row: a covert bound, or the capacity statement that applies
/// when the warden is blind.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum Evaluation {
    Covert {
        #[serde(flatten)]
        point: BoundPoint,
        asymptotic_rate: f64,
    },
    CapacityMode { n: f64, rate: f64 },
}

impl Evaluation {
    pub fn n(&self) -> f64 {
        match self {
            Evaluation::Covert { point, .. } => point.n,
            Evaluation::CapacityMode { n, .. } => *n,
        }
    }

    pub fn rate(&self) -> f64 {
        match self {
            Evaluation::Covert { point, .. } => point.rate,
            Evaluation::CapacityMode { rate, .. } => *rate,
        }
    }
}

fn binary_entropy_bits(p: f64) -> f64 {
    if p == 0.0 || p == 1.0 {
        return 0.0;
    }
    -p * p.log2() - (1.0 - p) * (1.0 - p).log2()
}

impl ChannelPair {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ChannelPair::Bsc { eps_rx, eps_dx } => match check_bsc_pair(eps_rx, eps_dx) {
                Err(Error::DetectorBlind) => Ok(()),
                other => other,
            },
            ChannelPair::Awgn { sigma2_rx, sigma2_dx } => check_variances(sigma2_rx, sigma2_dx),
        }
    }

    pub fn is_detector_blind(&self) -> bool {
        matches!(*self, ChannelPair::Bsc { eps_dx, .. } if eps_dx == 0.5)
    }

    /// Receiver capacity in bits per use, the relevant rate in capacity mode.
    pub fn receiver_capacity(&self) -> f64 {
        match *self {
            ChannelPair::Bsc { eps_rx, .. } => 1.0 - binary_entropy_bits(eps_rx),
            ChannelPair::Awgn { .. } => f64::INFINITY,
        }
    }

    /// Closed-form `L(rho)`.
    pub fn l(&self, rho: f64, budget: &LpdBudget) -> Result<f64> {
        match *self {
            ChannelPair::Bsc { eps_rx, eps_dx } => l_bsc(rho, eps_rx, eps_dx, budget),
            ChannelPair::Awgn { sigma2_rx, sigma2_dx } => l_awgn(rho, sigma2_rx, sigma2_dx, budget),
        }
    }

    /// Large-n slope of `log2 M / sqrt(n)` in bits (includes `eps_det`).
    pub fn asymptotic_slope(&self, budget: &LpdBudget) -> Result<f64> {
        match *self {
            ChannelPair::Bsc { eps_rx, eps_dx } => bsc_asymptote(eps_rx, eps_dx, budget),
            ChannelPair::Awgn { sigma2_rx, sigma2_dx } => {
                Ok(budget.eps_det() * SQRT_2 * budget.xi() / LN_2 * sigma2_dx / sigma2_rx)
            }
        }
    }

    /// Per-use probability mass (BSC: `tau * u`) or normalised power
    /// (AWGN: `tau * P / sigma_Dx^2`) that the sparse scheme may spend at
    /// blocklength `n`, in the small-kernel limit the closed forms use.
    pub fn effective_tau(&self, n: f64, budget: &LpdBudget) -> Result<f64> {
        match *self {
            ChannelPair::Bsc { eps_dx, .. } => {
                if eps_dx == 0.0 || eps_dx == 1.0 {
                    return Ok(0.0);
                }
                tau_max(n, budget, chi2_bsc_kernel(1.0, eps_dx)?)
            }
            ChannelPair::Awgn { .. } => {
                Ok((2.0 * SQRT_2 * budget.xi() * budget.eps_det() / n.sqrt()).min(1.0))
            }
        }
    }

    pub fn n_min(&self, budget: &LpdBudget) -> Option<f64> {
        match *self {
            ChannelPair::Awgn { sigma2_rx, sigma2_dx } => awgn_n_min(sigma2_rx, sigma2_dx, budget).ok(),
            ChannelPair::Bsc { .. } => None,
        }
    }

    /// Bound at blocklength `n`, maximised over rho.
    pub fn evaluate(&self, n: f64, budget: &LpdBudget) -> Result<Evaluation> {
        check_positive("n", n)?;
        self.validate()?;
        if self.is_detector_blind() {
            return Ok(Evaluation::CapacityMode { n, rate: self.receiver_capacity() });
        }
        let opt = optimize_rho_with(n, |rho| self.l(rho, budget).unwrap_or(0.0), budget);
        let point = BoundPoint {
            n,
            rho: opt.rho,
            tau: self.effective_tau(n, budget)?,
            log2_m: opt.log2_m,
            rate: opt.log2_m.max(0.0) / n,
        };
        Ok(Evaluation::Covert { point, asymptotic_rate: self.asymptotic_slope(budget)? / n.sqrt() })
    }

    /// Peak-rate operating point. For the BSC, rho is chosen to maximise
    /// `rho L(rho)^2` and the blocklength follows at that rho.
    pub fn operating_point(&self, budget: &LpdBudget) -> Result<OptimalOperating> {
        self.validate()?;
        if self.is_detector_blind() {
            return Err(Error::DetectorBlind);
        }
        match *self {
            ChannelPair::Awgn { sigma2_rx, sigma2_dx } => awgn_operating_point(sigma2_rx, sigma2_dx, budget),
            ChannelPair::Bsc { .. } => {
                let (rho, _) = golden_section_max(
                    |rho| {
                        let l = self.l(rho, budget).unwrap_or(0.0);
                        rho * l * l
                    },
                    RHO_FLOOR,
                    1.0,
                    1e-10,
                );
                optimal_blocklength(rho, self.l(rho, budget)?, budget)
            }
        }
    }
}

/// Evaluates the bound on every blocklength of `ns`, returned in grid order.
/// Points are independent, so the parallel and serial results are identical.
pub fn sweep(pair: &ChannelPair, ns: &[f64], budget: &LpdBudget) -> Result<Vec<Evaluation>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        ns.par_iter().map(|&n| pair.evaluate(n, budget)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ns.iter().map(|&n| pair.evaluate(n, budget)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> LpdBudget {
        LpdBudget::new(0.1, 1e-3).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn l_factor_examples() {
        let b = budget();
        assert_eq!(l_factor(0.5, 0.0, 1.0, &b).unwrap(), 0.0);
        assert_eq!(l_factor(0.5, 0.3, f64::INFINITY, &b).unwrap(), 0.0);
        let l = l_factor(1.0, LN_2, 2.25, &b).unwrap();
        // mpmath: 1.1053368866739486
        assert!(rel(l, 1.105_336_886_673_948_6) < 1e-14);
        assert_eq!(l_factor(0.5, 0.3, 0.0, &b), Err(Error::DetectorBlind));
        assert!(l_factor(0.0, 0.3, 1.0, &b).is_err());
    }

    #[test]
    fn log2m_examples() {
        let b = LpdBudget::new(0.1, 0.999_999_999_999).unwrap();
        let v = achievable_log2m(400.0, 0.5, 2.0, &b);
        assert!((v - 0.1 * 20.0 * 2.0).abs() < 1e-9);
        let b = budget();
        // Break-even: eps_det sqrt(n) L = log2(1/eps_dec) / rho.
        let (rho, l) = (0.5, 1.3);
        let sqrt_n = b.penalty_bits() / (rho * b.eps_det() * l);
        assert!(achievable_log2m(sqrt_n * sqrt_n, rho, l, &b).abs() < 1e-12);
    }

    #[test]
    fn bsc_at_one_million() {
        let b = budget();
        let pair = ChannelPair::Bsc { eps_rx: 0.1, eps_dx: 0.3 };
        let Evaluation::Covert { point, asymptotic_rate } = pair.evaluate(1e6, &b).unwrap() else {
            panic!("unexpected capacity mode")
        };
        let slope = bsc_asymptote(0.1, 0.3, &b).unwrap();
        assert!(point.log2_m > 0.0);
        assert!(point.log2_m < slope * 1e3);
        // Convergence is slow; at n = 1e6 the bound sits near 0.39 sqrt(n).
        assert!(point.log2_m / 1e3 > 0.35 && point.log2_m / 1e3 < 0.45);
        assert!(rel(asymptotic_rate, slope / 1e3) < 1e-15);
    }

    #[test]
    fn optimize_rho_awgn_at_sixteen_n_min() {
        let b = budget();
        let (s_rx, s_dx) = (1.0, 1.0);
        let n_min = awgn_n_min(s_rx, s_dx, &b).unwrap();
        let opt = optimize_rho_with(16.0 * n_min, |r| l_awgn(r, s_rx, s_dx, &b).unwrap(), &b);
        assert!((opt.rho - 1.0).abs() < 1e-4);
        let far = optimize_rho_with(1e6 * n_min, |r| l_awgn(r, s_rx, s_dx, &b).unwrap(), &b);
        assert!(far.rho < 0.04 && far.positive);
        let small = optimize_rho_with(n_min, |r| l_awgn(r, s_rx, s_dx, &b).unwrap(), &b);
        assert!(!small.positive);
    }

    #[test]
    fn optimize_rho_generic_matches_closed_form_route() {
        let b = budget();
        let e0 = |rho: f64| e0_bsc(rho, 1e-6, 0.1).unwrap();
        let chi2 = chi2_bsc_kernel(1e-6, 0.3).unwrap();
        let g = optimize_rho(1e5, e0, chi2, &b).unwrap();
        let c = optimize_rho_with(1e5, |r| l_bsc(r, 0.1, 0.3, &b).unwrap(), &b);
        assert!((g.rho - c.rho).abs() < 1e-3);
        assert!(rel(g.log2_m, c.log2_m) < 1e-4);
        assert_eq!(optimize_rho(1e5, e0, 0.0, &b), Err(Error::DetectorBlind));
    }

    #[test]
    fn asymptotic_coefficient_examples() {
        let b = budget();
        assert_eq!(asymptotic_coefficient(0.0, 0.4, &b).unwrap(), 0.0);
        assert_eq!(asymptotic_coefficient(0.1, 0.0, &b), Err(Error::DetectorBlind));
        // Limit of L(rho) as rho -> 0 for a fixed kernel.
        let (u, eps_rx, eps_dx) = (0.3, 0.1, 0.25);
        let ch = crate::channels::make_bsc(eps_rx).unwrap();
        let mi = crate::gallager::mutual_information(&[1.0 - u, u], &ch).unwrap();
        let chi2 = chi2_bsc_kernel(u, eps_dx).unwrap();
        let coef = asymptotic_coefficient(mi, chi2, &b).unwrap();
        let l_small = l_factor(1e-4, e0_bsc(1e-4, u, eps_rx).unwrap(), chi2, &b).unwrap();
        assert!(rel(l_small, coef) < 1e-3);
    }

    #[test]
    fn optimal_blocklength_examples() {
        let b = budget();
        let op = optimal_blocklength(1.0, 1.7, &b).unwrap();
        assert!((op.k_star - 9.965_784_284_662_087).abs() < 1e-12);
        assert!(rel(op.n_star * op.r_star, op.k_star) < 1e-9);
        let half = LpdBudget::new(0.1, 0.5).unwrap();
        assert!((optimal_blocklength(1.0, 1.7, &half).unwrap().k_star - 1.0).abs() < 1e-15);
        assert_eq!(optimal_blocklength(1.0, 0.0, &b), Err(Error::NoPositiveRate));
        assert_eq!(optimal_blocklength(1.0, -2.0, &b), Err(Error::NoPositiveRate));
    }

    #[test]
    fn optimal_blocklength_matches_integer_search() {
        let b = budget();
        let (rho, l) = (0.6, l_bsc(0.6, 0.1, 0.3, &b).unwrap());
        let op = optimal_blocklength(rho, l, &b).unwrap();
        let (mut best_n, mut best_r) = (0u64, f64::MIN);
        for n in 1..(4 * op.n_star as u64) {
            let r = achievable_log2m(n as f64, rho, l, &b) / n as f64;
            if r > best_r {
                best_r = r;
                best_n = n;
            }
        }
        assert!((best_n as f64 - op.n_star).abs() <= 1.0);
        assert!(rel(best_r, op.r_star) < 5e-3);
    }

    #[test]
    fn l_bsc_edge_cases() {
        let b = budget();
        for rho in [0.1, 0.5, 1.0] {
            assert!(l_bsc(rho, 0.5, 0.3, &b).unwrap().abs() < 1e-15);
            assert_eq!(l_bsc(rho, 0.1, 0.0, &b).unwrap(), 0.0);
            assert_eq!(l_bsc(rho, 0.1, 1.0, &b).unwrap(), 0.0);
            assert!(l_bsc(rho, 0.1, 1e-12, &b).unwrap() < 1e-4);
        }
        assert_eq!(l_bsc(0.5, 0.1, 0.5, &b), Err(Error::DetectorBlind));
        assert!(matches!(l_bsc(0.5, 0.7, 0.3, &b), Err(Error::Domain(m)) if m.contains("relabel")));
        assert!(l_bsc(0.5, 0.0, 0.3, &b).is_err());
        // Warden crossover and its mirror image are equally informative.
        let l1 = l_bsc(0.5, 0.1, 0.3, &b).unwrap();
        let l2 = l_bsc(0.5, 0.1, 0.7, &b).unwrap();
        assert!(rel(l1, l2) < 1e-14);
    }

    #[test]
    fn l_bsc_matches_generic_pipeline() {
        let b = budget();
        for &eps_rx in &[0.05, 0.1, 0.2] {
            for &eps_dx in &[0.2, 0.3, 0.4] {
                for k in 1..=10 {
                    let rho = k as f64 / 10.0;
                    let closed = l_bsc(rho, eps_rx, eps_dx, &b).unwrap();
                    let generic = l_bsc_generic(rho, 1e-6, eps_rx, eps_dx, &b).unwrap();
                    assert!(rel(generic, closed) < 1e-4);
                }
            }
        }
    }

    #[test]
    fn bsc_asymptote_examples() {
        let b = budget();
        let v = bsc_asymptote(0.1, 0.3, &b).unwrap();
        assert!((v - 0.569_981_422_825_327_6).abs() < 1e-12);
        assert!(bsc_asymptote(0.5, 0.3, &b).unwrap().abs() < 1e-15);
        assert!(bsc_asymptote(0.499_999, 0.3, &b).unwrap() < 1e-9);
        let l = l_bsc(1e-5, 0.1, 0.3, &b).unwrap();
        assert!(rel(l * b.eps_det(), v) < 1e-3);
        assert_eq!(bsc_asymptote(0.1, 0.5, &b), Err(Error::DetectorBlind));
    }

    #[test]
    fn awgn_bound_examples() {
        let b = budget();
        let pen = b.penalty_bits();
        let t1 = awgn_bound(1e4, 0.5, 1.0, 1.0, &b).unwrap() + 2.0 * pen;
        let t2 = awgn_bound(1e4, 0.5, 1.0, 2.0, &b).unwrap() + 2.0 * pen;
        assert!(rel(t2, 2.0 * t1) < 1e-14);
        // Generic pipeline at vanishing power approaches the closed form from below.
        for rho in [0.1, 0.5, 1.0] {
            let closed = l_awgn(rho, 1.3, 0.7, &b).unwrap();
            let generic = l_awgn_generic(rho, 1e-8 * 0.7, 1.3, 0.7, &b).unwrap();
            assert!(generic <= closed * (1.0 + 1e-12));
            assert!(rel(generic, closed) < 1e-4);
        }
    }

    #[test]
    fn awgn_bound_at_n_min() {
        let b = budget();
        let n_min = awgn_n_min(1.0, 1.0, &b).unwrap();
        let pen = b.penalty_bits();
        // On (0, 1] the best choice at n_min is rho = 1, giving -pen/2.
        let best = (1..=10_000)
            .map(|i| awgn_bound(n_min, i as f64 / 10_000.0, 1.0, 1.0, &b).unwrap())
            .fold(f64::MIN, f64::max);
        assert!((best + 0.5 * pen).abs() < 1e-9);
        // For unrestricted rho the supremum is 0, approached as rho grows.
        let l_big = |rho: f64| SQRT_2 * b.xi() / ((1.0 + rho) * LN_2);
        let at_big_rho = achievable_log2m(n_min, 1e7, l_big(1e7), &b);
        assert!(at_big_rho < 0.0 && at_big_rho > -1e-6);
        // Positivity on (0, 1] starts at 4 n_min.
        assert!(awgn_bound(4.0 * n_min * 0.999, 1.0, 1.0, 1.0, &b).unwrap() < 0.0);
        assert!(awgn_bound(4.0 * n_min * 1.001, 1.0, 1.0, 1.0, &b).unwrap() > 0.0);
    }

    #[test]
    fn awgn_operating_point_examples() {
        let b = budget();
        for ratio in [0.5, 1.0, 2.0, 7.3] {
            let op = awgn_operating_point(1.0, ratio, &b).unwrap();
            let n_min = op.n_min.unwrap();
            assert!((op.n_star / n_min - 16.0).abs() < 1e-9);
            assert!((op.rho_used - 1.0).abs() < 1e-12);
            assert!((op.k_star - 9.965_784_284_662_087).abs() < 1e-12);
            assert!(rel(op.n_star * op.r_star, op.k_star) < 1e-9);
        }
        let r1 = awgn_operating_point(1.0, 1.0, &b).unwrap().r_star;
        let r2 = awgn_operating_point(1.0, 2.0, &b).unwrap().r_star;
        assert!(rel(r2 / r1, 4.0) < 1e-12);
    }

    #[test]
    fn rho_star_clamps_below_sixteen_n_min() {
        let b = budget();
        let n_min = awgn_n_min(1.0, 1.5, &b).unwrap();
        for t in [0.5, 1.0, 2.0, 4.0, 9.0, 15.9] {
            assert_eq!(awgn_rho_star(t * n_min, n_min), 1.0);
        }
        for t in [5.0, 10.0, 16.0, 40.0, 1e3, 1e6] {
            let n = t * n_min;
            let rho = awgn_rho_star(n, n_min);
            let closed = awgn_bound(n, rho, 1.0, 1.5, &b).unwrap();
            let brute = (1..=100_000)
                .map(|i| awgn_bound(n, i as f64 / 100_000.0, 1.0, 1.5, &b).unwrap())
                .fold(f64::MIN, f64::max);
            assert!(closed >= brute - 1e-9);
            assert!((closed - brute).abs() <= 1e-3 * brute.abs().max(1e-9), "t={t}");
        }
    }

    #[test]
    fn generic_bsc_l_nonincreasing_in_u() {
        let b = budget();
        for rho in [0.1, 0.5, 1.0] {
            let mut prev = f64::INFINITY;
            for k in 0..=60 {
                let u = 10f64.powf(-6.0 + 6.0 * k as f64 / 60.0);
                let l = l_bsc_generic(rho, u, 0.1, 0.3, &b).unwrap();
                assert!(l <= prev * (1.0 + 1e-12), "rho={rho} u={u}");
                prev = l;
            }
        }
    }

    #[test]
    fn generic_awgn_l_nonincreasing_in_power() {
        let b = budget();
        for rho in [0.1, 0.5, 1.0] {
            let mut prev = f64::INFINITY;
            for k in 1..100 {
                let p = k as f64 / 100.0 * 2.0;
                let l = l_awgn_generic(rho, p, 1.0, 2.0, &b).unwrap();
                assert!(l <= prev * (1.0 + 1e-12));
                prev = l;
            }
        }
    }

    #[test]
    fn capacity_mode_for_blind_warden() {
        let b = budget();
        let pair = ChannelPair::Bsc { eps_rx: 0.1, eps_dx: 0.5 };
        match pair.evaluate(1000.0, &b).unwrap() {
            Evaluation::CapacityMode { rate, .. } => assert!((rate - 0.531_004_406_410_719_4).abs() < 1e-12),
            other => panic!("expected capacity mode, got {other:?}"),
        }
        assert_eq!(pair.operating_point(&b), Err(Error::DetectorBlind));
    }

    #[test]
    fn sweep_preserves_grid_order() {
        let b = budget();
        let pair = ChannelPair::Awgn { sigma2_rx: 1.0, sigma2_dx: 2.0 };
        let ns: Vec<f64> = (1..200).map(|i| (i * i * 37) as f64).collect();
        let rows = sweep(&pair, &ns, &b).unwrap();
        assert_eq!(rows.len(), ns.len());
        for (row, &n) in rows.iter().zip(&ns) {
            assert_eq!(row.n(), n);
            assert_eq!(*row, pair.evaluate(n, &b).unwrap());
        }
    }

    #[test]
    fn bsc_operating_point_consistent() {
        let b = budget();
        let pair = ChannelPair::Bsc { eps_rx: 0.1, eps_dx: 0.3 };
        let op = pair.operating_point(&b).unwrap();
        assert!(rel(op.n_star * op.r_star, op.k_star) < 1e-9);
        // Joint brute force over (n, rho) should not beat it by more than grid error.
        let mut best = 0.0_f64;
        for i in 0..400 {
            let n = op.n_star * 10f64.powf(-1.0 + 2.0 * i as f64 / 400.0);
            let e = pair.evaluate(n, &b).unwrap();
            best = best.max(e.rate());
        }
        assert!(best <= op.r_star * 1.005 && best >= op.r_star * 0.99);
    }
}
