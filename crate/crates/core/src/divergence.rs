//! Divergences and the detection-constraint chain.
//!
//! The warden's optimal test has error sum `1 - d_TV` between the n-fold
//! laws of its observations with and without transmission. That distance is
//! bounded by `0.5 * sqrt(W0^{-1}(n chi2))` of the single-letter laws, which
//! in turn caps the sparseness factor of a sparse signalling scheme.

use serde::{Deserialize, Serialize};

use crate::error::{check_probability, domain, Error, Result};
use crate::specfn::{lambert_w0_inv, LpdBudget};

/// Largest blocklength accepted by [`exact_binomial_tv`].
pub const MAX_EXACT_N: u64 = 200_000;

fn same_len(p: &[f64], q: &[f64]) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch { expected: q.len(), got: p.len() });
    }
    Ok(())
}

/// `sum (p - q)^2 / q`. Requires `q` to dominate `p`.
pub fn chi_squared(p: &[f64], q: &[f64]) -> Result<f64> {
    same_len(p, q)?;
    let mut acc = 0.0;
    for (i, (&pi, &qi)) in p.iter().zip(q).enumerate() {
        if qi == 0.0 {
            if pi != 0.0 {
                return Err(domain(format!("chi_squared: q[{i}] = 0 but p[{i}] = {pi}")));
            }
            continue;
        }
        let d = pi - qi;
        acc += d * d / qi;
    }
    Ok(acc)
}

/// `0.5 * sum |p - q|`.
pub fn total_variation(p: &[f64], q: &[f64]) -> Result<f64> {
    same_len(p, q)?;
    let s: f64 = p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum();
    Ok((0.5 * s).min(1.0))
}

/// Relative entropy `D(p || q)` in nats.
pub fn kl_divergence(p: &[f64], q: &[f64]) -> Result<f64> {
    same_len(p, q)?;
    let mut acc = 0.0;
    for (i, (&pi, &qi)) in p.iter().zip(q).enumerate() {
        if pi == 0.0 {
            continue;
        }
        if qi == 0.0 {
            return Err(domain(format!("kl_divergence: q[{i}] = 0 but p[{i}] = {pi}")));
        }
        acc += pi * (pi / qi).ln();
    }
    Ok(acc.max(0.0))
}

/// Upper bound `0.5 * sqrt(W0^{-1}(n chi2))` on the total variation between
/// n-fold products, given the single-letter chi-squared distance.
pub fn tv_product_upper_bound(n: f64, chi2_single: f64) -> Result<f64> {
    if !(n > 0.0) || chi2_single.is_nan() || chi2_single < 0.0 {
        return Err(domain(format!(
            "tv_product_upper_bound: need n > 0 and chi2 >= 0, got n={n}, chi2={chi2_single}"
        )));
    }
    Ok(0.5 * lambert_w0_inv(n * chi2_single)?.sqrt())
}

/// Largest sparseness factor meeting the detection budget,
/// `min(1, 2 xi eps_det / sqrt(n chi2_kernel))`.
///
/// `chi2_kernel` is the distance between the kernel-induced warden law and
/// the innocent one, not the mixture-level distance. A zero value means the
/// warden cannot see the input at all and yields [`Error::DetectorBlind`].
pub fn tau_max(n: f64, budget: &LpdBudget, chi2_kernel: f64) -> Result<f64> {
    if !(n > 0.0) {
        return Err(domain(format!("tau_max: blocklength {n} must be positive")));
    }
    if chi2_kernel.is_nan() || chi2_kernel < 0.0 {
        return Err(domain(format!("tau_max: chi2 {chi2_kernel} must be >= 0")));
    }
    if chi2_kernel == 0.0 {
        return Err(Error::DetectorBlind);
    }
    let tau = 2.0 * budget.xi() * budget.eps_det() / (n * chi2_kernel).sqrt();
    Ok(tau.min(1.0))
}

/// Outcome of the warden's hypothesis test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DetectionResult {
    /// False alarm: decide "transmitting" under the innocent law.
    pub alpha: f64,
    /// Missed detection.
    pub beta: f64,
    pub error_sum: f64,
}

fn ln_binomial(n: u64, k: u64) -> f64 {
    libm::lgamma(n as f64 + 1.0) - libm::lgamma(k as f64 + 1.0) - libm::lgamma((n - k) as f64 + 1.0)
}

fn binomial_pmf(n: u64, p: f64, ln_choose: &[f64]) -> Vec<f64> {
    if p == 0.0 || p == 1.0 {
        let mut v = vec![0.0; n as usize + 1];
        v[if p == 0.0 { 0 } else { n as usize }] = 1.0;
        return v;
    }
    let (lp, lq) = (p.ln(), (-p).ln_1p());
    let mut v: Vec<f64> = (0..=n)
        .map(|k| (ln_choose[k as usize] + k as f64 * lp + (n - k) as f64 * lq).exp())
        .collect();
    // lgamma rounding grows with n; renormalise so the masses sum to one.
    let total: f64 = v.iter().sum();
    v.iter_mut().for_each(|x| *x /= total);
    v
}

fn check_exact_args(n: u64, p0: f64, p1: f64) -> Result<()> {
    if n == 0 || n > MAX_EXACT_N {
        return Err(domain(format!("exact binomial: n = {n} outside 1..={MAX_EXACT_N}")));
    }
    check_probability("p0", p0)?;
    check_probability("p1", p1)
}

/// Runs the deterministic minimum-error-sum test between `Binomial(n, p0)`
/// (innocent) and `Binomial(n, p1)`: decide "transmitting" iff
/// `pmf1(k) > pmf0(k)`. Tied counts are assigned to the innocent
/// hypothesis; they contribute nothing to the TV sum so the result equals
/// the optimum `1 - d_TV` with no randomisation.
pub fn binomial_detection(n: u64, p0: f64, p1: f64) -> Result<DetectionResult> {
    check_exact_args(n, p0, p1)?;
    let ln_choose: Vec<f64> = (0..=n).map(|k| ln_binomial(n, k)).collect();
    let pmf0 = binomial_pmf(n, p0, &ln_choose);
    let pmf1 = binomial_pmf(n, p1, &ln_choose);
    let (mut alpha, mut beta) = (0.0, 0.0);
    for (a, b) in pmf0.iter().zip(&pmf1) {
        if b > a {
            alpha += a;
        } else {
            beta += b;
        }
    }
    let alpha = alpha.min(1.0);
    let beta = beta.min(1.0);
    Ok(DetectionResult { alpha, beta, error_sum: alpha + beta })
}

/// Decision region of [`binomial_detection`]: `true` at count `k` when the
/// test decides "transmitting". Also returns the pmfs (innocent, active).
pub(crate) fn binomial_lrt_region(n: u64, p0: f64, p1: f64) -> Result<(Vec<bool>, Vec<f64>, Vec<f64>)> {
    check_exact_args(n, p0, p1)?;
    let ln_choose: Vec<f64> = (0..=n).map(|k| ln_binomial(n, k)).collect();
    let pmf0 = binomial_pmf(n, p0, &ln_choose);
    let pmf1 = binomial_pmf(n, p1, &ln_choose);
    let region = pmf0.iter().zip(&pmf1).map(|(a, b)| b > a).collect();
    Ok((region, pmf0, pmf1))
}

/// Exact `d_TV(Binomial(n, p0), Binomial(n, p1))`, summed over all counts
/// with log-space pmfs. For i.i.d. binary observations the count is a
/// sufficient statistic, so this is the TV between the n-fold laws.
pub fn exact_binomial_tv(n: u64, p0: f64, p1: f64) -> Result<f64> {
    check_exact_args(n, p0, p1)?;
    if p0 == p1 {
        return Ok(0.0);
    }
    let ln_choose: Vec<f64> = (0..=n).map(|k| ln_binomial(n, k)).collect();
    let pmf0 = binomial_pmf(n, p0, &ln_choose);
    let pmf1 = binomial_pmf(n, p1, &ln_choose);
    let s: f64 = pmf0.iter().zip(&pmf1).map(|(a, b)| (a - b).abs()).sum();
    Ok((0.5 * s).min(1.0))
}
