//! Channel and input-distribution representations.

use serde::{Deserialize, Serialize};

use crate::error::{check_positive, check_probability, domain, Error, Result};

const ROW_SUM_TOL: f64 = 1e-12;

/// Checks that `p` is a probability vector of length `len`.
pub(crate) fn check_distribution(name: &str, p: &[f64], len: usize) -> Result<()> {
    if p.len() != len {
        return Err(Error::DimensionMismatch { expected: len, got: p.len() });
    }
    if let Some(bad) = p.iter().find(|v| !(v.is_finite() && (0.0..=1.0).contains(*v))) {
        return Err(domain(format!("{name}: entry {bad} is not a probability")));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > ROW_SUM_TOL {
        return Err(domain(format!("{name}: entries sum to {total}, not 1")));
    }
    Ok(())
}

/// Finite-alphabet memoryless channel, `transition[x][y] = p(y|x)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteChannel {
    transition: Vec<Vec<f64>>,
    num_outputs: usize,
    innocent_input: usize,
}

impl DiscreteChannel {
    pub fn new(transition: Vec<Vec<f64>>, innocent_input: usize) -> Result<Self> {
        if transition.len() < 2 {
            return Err(domain("channel needs at least two inputs"));
        }
        let num_outputs = transition[0].len();
        if num_outputs < 2 {
            return Err(domain("channel needs at least two outputs"));
        }
        for (x, row) in transition.iter().enumerate() {
            check_distribution(&format!("transition row {x}"), row, num_outputs)?;
        }
        if innocent_input >= transition.len() {
            return Err(domain(format!(
                "innocent input {innocent_input} out of range for {} inputs",
                transition.len()
            )));
        }
        Ok(Self { transition, num_outputs, innocent_input })
    }

    pub fn num_inputs(&self) -> usize {
        self.transition.len()
    }

    pub fn num_outputs(&self) -> usize {
        self.num_outputs
    }

    pub fn innocent_input(&self) -> usize {
        self.innocent_input
    }

    pub fn row(&self, x: usize) -> &[f64] {
        &self.transition[x]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.transition.iter().map(Vec::as_slice)
    }

    /// `p(y|x)`.
    pub fn prob(&self, x: usize, y: usize) -> f64 {
        self.transition[x][y]
    }

    /// Output law `p_W = input^T * transition` induced by an input law.
    pub fn output_marginal(&self, input: &[f64]) -> Result<Vec<f64>> {
        check_distribution("input", input, self.num_inputs())?;
        let mut out = vec![0.0; self.num_outputs];
        for (px, row) in input.iter().zip(&self.transition) {
            for (o, pyx) in out.iter_mut().zip(row) {
                *o += px * pyx;
            }
        }
        Ok(out)
    }
}

/// Binary symmetric channel with crossover `eps`; the innocent input is 0.
pub fn make_bsc(eps: f64) -> Result<DiscreteChannel> {
    check_probability("crossover", eps)?;
    DiscreteChannel::new(vec![vec![1.0 - eps, eps], vec![eps, 1.0 - eps]], 0)
}

/// Free-standing form of [`DiscreteChannel::output_marginal`].
pub fn output_marginal(ch: &DiscreteChannel, input: &[f64]) -> Result<Vec<f64>> {
    ch.output_marginal(input)
}

/// Real AWGN channel, described by its per-use noise variance only.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AwgnChannel {
    noise_variance: f64,
}

impl AwgnChannel {
    pub fn new(noise_variance: f64) -> Result<Self> {
        check_positive("noise_variance", noise_variance)?;
        Ok(Self { noise_variance })
    }

    pub fn noise_variance(&self) -> f64 {
        self.noise_variance
    }
}

/// Sparse signalling law `(1 - tau) delta_{x0} + tau * kernel`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparseInput {
    tau: f64,
    kernel: Vec<f64>,
    innocent_input: usize,
}

impl SparseInput {
    pub fn new(tau: f64, kernel: Vec<f64>, innocent_input: usize) -> Result<Self> {
        check_probability("tau", tau)?;
        check_distribution("kernel", &kernel, kernel.len())?;
        if innocent_input >= kernel.len() {
            return Err(domain("innocent input outside the kernel alphabet"));
        }
        Ok(Self { tau, kernel, innocent_input })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn kernel(&self) -> &[f64] {
        &self.kernel
    }

    pub fn innocent_input(&self) -> usize {
        self.innocent_input
    }

    pub fn full_distribution(&self) -> Vec<f64> {
        let mut p: Vec<f64> = self.kernel.iter().map(|k| self.tau * k).collect();
        p[self.innocent_input] += 1.0 - self.tau;
        p
    }
}

pub fn sparse_full_distribution(s: &SparseInput) -> Vec<f64> {
    s.full_distribution()
}

/// Binary kernel with mass `u` on symbol 1, plus the two crossover
/// probabilities it is evaluated against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BscKernel {
    pub u: f64,
    pub eps_rx: f64,
    pub eps_dx: f64,
}

impl BscKernel {
    pub fn new(u: f64, eps_rx: f64, eps_dx: f64) -> Result<Self> {
        check_probability("u", u)?;
        check_probability("eps_rx", eps_rx)?;
        check_probability("eps_dx", eps_dx)?;
        Ok(Self { u, eps_rx, eps_dx })
    }

    pub fn distribution(&self) -> [f64; 2] {
        [1.0 - self.u, self.u]
    }
}

/// Zero-mean Gaussian kernel of variance `power`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussKernel {
    power: f64,
}

impl GaussKernel {
    pub fn new(power: f64) -> Result<Self> {
        check_positive("power", power)?;
        Ok(Self { power })
    }

    pub fn power(&self) -> f64 {
        self.power
    }
}
