//! Gallager's E0 function, mutual information, and the sparse-input lower
//! bounds. Everything here is in nats.

use serde::{Deserialize, Serialize};

use crate::channels::{check_distribution, DiscreteChannel};
use crate::error::{check_positive, check_probability, domain, Error, Result};
use crate::search::golden_section_max;

fn check_rho(rho: f64) -> Result<()> {
    if rho.is_finite() && (0.0..=1.0).contains(&rho) {
        Ok(())
    } else {
        Err(domain(format!("rho = {rho} must lie in [0, 1]")))
    }
}

/// One evaluation of E0 at a given rho.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct E0Value {
    pub rho: f64,
    pub value: f64,
}

/// `-ln sum_y ( sum_x p(x) p(y|x)^{1/(1+rho)} )^{1+rho}`.
pub fn e0_discrete(rho: f64, input: &[f64], ch: &DiscreteChannel) -> Result<f64> {
    check_rho(rho)?;
    check_distribution("input", input, ch.num_inputs())?;
    let s = 1.0 + rho;
    let inv = 1.0 / s;
    let mut total = 0.0;
    for y in 0..ch.num_outputs() {
        let inner: f64 = input
            .iter()
            .enumerate()
            .filter(|(_, &px)| px > 0.0)
            .map(|(x, &px)| {
                let p = ch.prob(x, y);
                if p == 0.0 {
                    0.0
                } else {
                    px * (inv * p.ln()).exp()
                }
            })
            .sum();
        if inner > 0.0 {
            total += (s * inner.ln()).exp();
        }
    }
    Ok((-total.ln()).max(0.0))
}

/// `I(X;Y)` in nats.
pub fn mutual_information(input: &[f64], ch: &DiscreteChannel) -> Result<f64> {
    let out = ch.output_marginal(input)?;
    let mut acc = 0.0;
    for (x, &px) in input.iter().enumerate() {
        if px == 0.0 {
            continue;
        }
        for (y, &py) in out.iter().enumerate() {
            let p = ch.prob(x, y);
            if p > 0.0 {
                acc += px * p * (p / py).ln();
            }
        }
    }
    Ok(acc.max(0.0))
}

/// The two lower bounds on E0 for a sparse input with sparseness `tau`,
/// written in terms of the kernel's own E0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SparseE0Bounds {
    /// `-(1+rho) ln[1 - tau (1 - e^{-E0k/(1+rho)})]`
    pub log: f64,
    /// `(1+rho) tau (1 - e^{-E0k/(1+rho)})`, never above `log`.
    pub linear: f64,
}

pub fn e0_sparse_lower_bounds(rho: f64, tau: f64, e0_kernel: f64) -> Result<SparseE0Bounds> {
    check_rho(rho)?;
    check_probability("tau", tau)?;
    if e0_kernel.is_nan() || e0_kernel < 0.0 {
        return Err(domain(format!("kernel E0 {e0_kernel} must be >= 0")));
    }
    let s = 1.0 + rho;
    let gain = -(-e0_kernel / s).exp_m1();
    Ok(SparseE0Bounds { log: -s * (-tau * gain).ln_1p(), linear: s * tau * gain })
}

/// E0 of a BSC with crossover `eps_rx` under the binary input `[1-u, u]`.
pub fn e0_bsc(rho: f64, u: f64, eps_rx: f64) -> Result<f64> {
    check_rho(rho)?;
    check_probability("u", u)?;
    check_probability("eps_rx", eps_rx)?;
    let s = 1.0 + rho;
    let a = (1.0 - eps_rx).powf(1.0 / s);
    let b = eps_rx.powf(1.0 / s);
    let t0 = ((1.0 - u) * a + u * b).powf(s);
    let t1 = ((1.0 - u) * b + u * a).powf(s);
    Ok((-(t0 + t1).ln()).max(0.0))
}

/// E0 of the AWGN channel with a Gaussian input of variance `power`,
/// `(rho/2) ln(1 + P / ((1+rho) sigma^2))`.
pub fn e0_awgn_gaussian(rho: f64, power: f64, sigma2_rx: f64) -> Result<f64> {
    check_rho(rho)?;
    check_positive("power", power)?;
    check_positive("sigma2_rx", sigma2_rx)?;
    Ok(0.5 * rho * (power / ((1.0 + rho) * sigma2_rx)).ln_1p())
}

/// Chi-squared distance between the warden's output law under a Gaussian
/// kernel of variance `power` and under the innocent zero input,
/// `(1 - P^2/sigma^4)^{-1/2} - 1`. Diverges for `power >= sigma2_dx`.
pub fn chi2_awgn_gaussian(power: f64, sigma2_dx: f64) -> Result<f64> {
    check_positive("power", power)?;
    check_positive("sigma2_dx", sigma2_dx)?;
    if power >= sigma2_dx {
        return Err(Error::ChiSquaredDivergent { power, sigma2_dx });
    }
    let r = power / sigma2_dx;
    // expm1/ln_1p keep precision for tiny P where 1 - r^2 rounds to 1.
    Ok((-0.5 * (-r * r).ln_1p()).exp_m1())
}

/// Chi-squared distance of the warden's BSC output under kernel `[1-u, u]`
/// against the innocent output, `u^2 (1 - 2 eps)^2 / (eps (1 - eps))`.
pub fn chi2_bsc_kernel(u: f64, eps_dx: f64) -> Result<f64> {
    check_probability("u", u)?;
    check_probability("eps_dx", eps_dx)?;
    if eps_dx == 0.0 || eps_dx == 1.0 {
        return Err(domain(format!(
            "chi2_bsc_kernel: eps_dx = {eps_dx} violates dominance of the innocent output law"
        )));
    }
    let d = 1.0 - 2.0 * eps_dx;
    Ok(u * u * d * d / (eps_dx * (1.0 - eps_dx)))
}

/// Gallager's random-coding bound on the ensemble-average error of an
/// `(n, M)` code drawn i.i.d. from `input`, optimised over `rho in [0, 1]`.
/// Returns the maximising E0 evaluation and `exp(-(n E0 - rho ln M))`.
pub fn gallager_error_bound(
    n: f64,
    ln_m: f64,
    input: &[f64],
    ch: &DiscreteChannel,
) -> Result<(E0Value, f64)> {
    check_positive("n", n)?;
    check_distribution("input", input, ch.num_inputs())?;
    let exponent = |rho: f64| n * e0_discrete(rho, input, ch).unwrap_or(0.0) - rho * ln_m;
    let (rho, best) = golden_section_max(exponent, 0.0, 1.0, 1e-9);
    let value = e0_discrete(rho, input, ch)?;
    Ok((E0Value { rho, value }, (-best.max(0.0)).exp()))
}
