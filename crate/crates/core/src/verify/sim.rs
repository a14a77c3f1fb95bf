//! Monte Carlo random-coding simulation over a BSC.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::channels::make_bsc;
use crate::divergence::{binomial_lrt_region, DetectionResult};
use crate::error::{check_probability, Error, Result};
use crate::gallager::gallager_error_bound;

use super::detection_error_sum_exact;

/// Generator and stream layout; recorded alongside every simulated result.
pub const RNG_ALGORITHM: &str = "chacha8 (rand_chacha), seed_from_u64(seed), stream = unit index";

const Z95: f64 = 1.959_963_984_540_054;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub n: usize,
    /// Codebook size M.
    pub m: usize,
    pub tau: f64,
    pub kernel_u: f64,
    pub eps_rx: f64,
    pub eps_dx: f64,
    /// Messages sent per codebook.
    pub trials: usize,
    pub codebooks: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimResult {
    pub decode_error_estimate: f64,
    /// 95% half-width from the spread of per-codebook error rates.
    pub confidence_half_width: f64,
    pub detection: DetectionResult,
    pub gallager_bound: f64,
    /// rho at which the Gallager bound was evaluated.
    pub gallager_rho: f64,
}

impl SimConfig {
    /// Per-symbol probability of a non-innocent symbol, `tau * u`.
    pub fn one_probability(&self) -> f64 {
        self.tau * self.kernel_u
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Infeasible("blocklength must be positive".into()));
        }
        if self.m < 2 {
            return Err(Error::Infeasible(format!("codebook size {} must be at least 2", self.m)));
        }
        if self.n < 64 && self.m as u128 > 1u128 << self.n {
            return Err(Error::Infeasible(format!(
                "codebook size {} exceeds 2^n = 2^{}",
                self.m, self.n
            )));
        }
        if self.trials == 0 || self.codebooks == 0 {
            return Err(Error::Infeasible("trials and codebooks must be positive".into()));
        }
        check_probability("tau", self.tau)?;
        check_probability("kernel_u", self.kernel_u)?;
        check_probability("eps_rx", self.eps_rx)?;
        check_probability("eps_dx", self.eps_dx)
    }
}

fn unit_rng(seed: u64, unit: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(unit as u64);
    rng
}

/// Bit-packed binary word of length `n`.
fn random_word(rng: &mut ChaCha8Rng, n: usize, p_one: f64) -> Vec<u64> {
    let mut w = vec![0u64; n.div_ceil(64)];
    if p_one == 0.0 {
        return w;
    }
    for i in 0..n {
        if rng.random::<f64>() < p_one {
            w[i / 64] |= 1 << (i % 64);
        }
    }
    w
}

fn hamming(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x ^ y).count_ones()).sum()
}

struct Codebook {
    words: Vec<Vec<u64>>,
}

impl Codebook {
    fn draw(rng: &mut ChaCha8Rng, cfg: &SimConfig) -> Self {
        let p = cfg.one_probability();
        Self { words: (0..cfg.m).map(|_| random_word(rng, cfg.n, p)).collect() }
    }

    /// Maximum-likelihood decision for a BSC with crossover `eps`; ties go
    /// to the lowest index.
    fn decode(&self, received: &[u64], eps: f64) -> usize {
        if eps == 0.5 {
            return 0;
        }
        let prefer_far = eps > 0.5;
        let mut best = 0;
        let mut best_d = hamming(&self.words[0], received);
        for (i, w) in self.words.iter().enumerate().skip(1) {
            let d = hamming(w, received);
            if (!prefer_far && d < best_d) || (prefer_far && d > best_d) {
                best = i;
                best_d = d;
            }
        }
        best
    }
}

fn codebook_errors(cfg: &SimConfig, unit: usize) -> u64 {
    let mut rng = unit_rng(cfg.seed, unit);
    let book = Codebook::draw(&mut rng, cfg);
    let mut errors = 0;
    for _ in 0..cfg.trials {
        let msg = rng.random_range(0..cfg.m);
        let noise = random_word(&mut rng, cfg.n, cfg.eps_rx);
        let received: Vec<u64> = book.words[msg].iter().zip(&noise).map(|(a, b)| a ^ b).collect();
        if book.decode(&received, cfg.eps_rx) != msg {
            errors += 1;
        }
    }
    errors
}

fn per_unit<T: Send, F: Fn(usize) -> T + Sync + Send>(units: usize, f: F) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..units).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..units).map(f).collect()
    }
}

/// Estimates the ensemble-average ML decoding error of random sparse codes
/// and evaluates Gallager's bound for the same ensemble.
///
/// Each codebook is a work unit with its own RNG stream, so results do not
/// depend on how units are scheduled.
pub fn simulate_decoding(cfg: &SimConfig) -> Result<SimResult> {
    cfg.validate()?;
    let errors = per_unit(cfg.codebooks, |unit| codebook_errors(cfg, unit));
    let trials = cfg.trials as f64;
    let rates: Vec<f64> = errors.iter().map(|&e| e as f64 / trials).collect();
    let c = rates.len() as f64;
    let mean = rates.iter().sum::<f64>() / c;
    let half_width = if rates.len() > 1 {
        let var = rates.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / (c - 1.0);
        Z95 * (var / c).sqrt()
    } else {
        Z95 * (mean * (1.0 - mean) / trials).sqrt()
    };

    let p1 = cfg.one_probability();
    let ch = make_bsc(cfg.eps_rx)?;
    let (e0, bound) = gallager_error_bound(cfg.n as f64, (cfg.m as f64).ln(), &[1.0 - p1, p1], &ch)?;
    Ok(SimResult {
        decode_error_estimate: mean,
        confidence_half_width: half_width,
        detection: detection_error_sum_exact(cfg.n as u64, p1, cfg.eps_dx)?,
        gallager_bound: bound,
        gallager_rho: e0.rho,
    })
}

/// Warden error sum when the active hypothesis is "a codeword of one fixed
/// random codebook was sent" rather than the i.i.d. product law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CodebookDetection {
    pub error_sum_estimate: f64,
    pub confidence_half_width: f64,
    /// Exact value under the i.i.d. model, for comparison.
    pub iid_error_sum: f64,
}

/// Runs the i.i.d.-optimal count test against codewords of a fixed random
/// codebook seen through the warden's BSC. `cfg.trials * cfg.codebooks`
/// observations are drawn.
pub fn codebook_detection(cfg: &SimConfig) -> Result<CodebookDetection> {
    cfg.validate()?;
    let p1 = cfg.one_probability();
    let q1 = (1.0 - p1) * cfg.eps_dx + p1 * (1.0 - cfg.eps_dx);
    let (region, pmf0, _) = binomial_lrt_region(cfg.n as u64, cfg.eps_dx, q1)?;
    let alpha: f64 = pmf0.iter().zip(&region).filter(|(_, &r)| r).map(|(p, _)| p).sum();

    let mut book_rng = unit_rng(cfg.seed, usize::MAX >> 1);
    let book = Codebook::draw(&mut book_rng, cfg);
    let misses = per_unit(cfg.codebooks, |unit| {
        let mut rng = unit_rng(cfg.seed ^ 0x5eed_d37e_c7ed, unit);
        let mut miss = 0u64;
        for _ in 0..cfg.trials {
            let msg = rng.random_range(0..cfg.m);
            let noise = random_word(&mut rng, cfg.n, cfg.eps_dx);
            let k: u32 = book.words[msg].iter().zip(&noise).map(|(a, b)| (a ^ b).count_ones()).sum();
            if !region[k as usize] {
                miss += 1;
            }
        }
        miss
    });
    let total = (cfg.trials * cfg.codebooks) as f64;
    let beta = misses.iter().sum::<u64>() as f64 / total;
    Ok(CodebookDetection {
        error_sum_estimate: alpha + beta,
        confidence_half_width: Z95 * (beta * (1.0 - beta) / total).sqrt(),
        iid_error_sum: detection_error_sum_exact(cfg.n as u64, p1, cfg.eps_dx)?.error_sum,
    })
}
