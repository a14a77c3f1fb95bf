//! wasm-bindgen surface for the static page in `www/`. The exported
//! functions are thin wrappers over the plain-Rust ones below, which are
//! what the native tests exercise.

use covertcap::bounds::sweep;
use covertcap::divergence::tau_max;
use covertcap::gallager::chi2_bsc_kernel;
use covertcap::verify::detection_error_sum_exact;
use covertcap::{ChannelPair, Error, Evaluation, LpdBudget};
use wasm_bindgen::prelude::*;

/// Largest grid the page may request in one call.
pub const MAX_POINTS: usize = 2000;

pub fn channel_pair(kind: &str, rx: f64, dx: f64) -> Result<ChannelPair, String> {
    let pair = match kind {
        "bsc" => ChannelPair::Bsc { eps_rx: rx, eps_dx: dx },
        "awgn" => ChannelPair::Awgn { sigma2_rx: rx, sigma2_dx: dx },
        other => return Err(format!("unknown channel kind {other:?}")),
    };
    pair.validate().map_err(|e| e.to_string())?;
    Ok(pair)
}

/// Rate curve on a log grid. `rates` holds the finite-n bound and
/// `asymptote` the large-n slope divided by sqrt(n), both in bits per use.
#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    ns: Vec<f64>,
    rates: Vec<f64>,
    asymptote: Vec<f64>,
    n_min: Option<f64>,
    capacity_mode: bool,
}

#[wasm_bindgen]
impl Curve {
    #[wasm_bindgen(getter)]
    pub fn ns(&self) -> Vec<f64> {
        self.ns.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn rates(&self) -> Vec<f64> {
        self.rates.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn asymptote(&self) -> Vec<f64> {
        self.asymptote.clone()
    }

    /// AWGN minimum blocklength, NaN for the BSC.
    #[wasm_bindgen(getter, js_name = nMin)]
    pub fn n_min(&self) -> f64 {
        self.n_min.unwrap_or(f64::NAN)
    }

    #[wasm_bindgen(getter, js_name = capacityMode)]
    pub fn capacity_mode(&self) -> bool {
        self.capacity_mode
    }
}

pub fn compute_curve(
    pair: &ChannelPair,
    budget: &LpdBudget,
    n_lo: f64,
    n_hi: f64,
    points: usize,
) -> Result<Curve, String> {
    if !(n_lo >= 1.0 && n_hi > n_lo && n_hi.is_finite()) {
        return Err(format!("need 1 <= n_lo < n_hi (got {n_lo}, {n_hi})"));
    }
    if !(2..=MAX_POINTS).contains(&points) {
        return Err(format!("points must be in 2..={MAX_POINTS}"));
    }
    let ns: Vec<f64> = (0..points)
        .map(|i| n_lo * (n_hi / n_lo).powf(i as f64 / (points - 1) as f64))
        .collect();
    let rows = sweep(pair, &ns, budget).map_err(|e| e.to_string())?;
    let asymptote = rows
        .iter()
        .map(|r| match r {
            Evaluation::Covert { asymptotic_rate, .. } => *asymptotic_rate,
            Evaluation::CapacityMode { rate, .. } => *rate,
        })
        .collect();
    Ok(Curve {
        rates: rows.iter().map(Evaluation::rate).collect(),
        asymptote,
        n_min: pair.n_min(budget),
        capacity_mode: pair.is_detector_blind(),
        ns,
    })
}

#[wasm_bindgen]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Operating {
    pub n_star: f64,
    pub r_star: f64,
    pub k_star: f64,
    pub rho: f64,
    /// NaN unless AWGN.
    pub n_min: f64,
}

pub fn compute_operating(pair: &ChannelPair, budget: &LpdBudget) -> Result<Operating, String> {
    match pair.operating_point(budget) {
        Ok(op) => Ok(Operating {
            n_star: op.n_star,
            r_star: op.r_star,
            k_star: op.k_star,
            rho: op.rho_used,
            n_min: op.n_min.unwrap_or(f64::NAN),
        }),
        Err(Error::DetectorBlind) => Err("capacity-mode: warden channel is blind".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Warden's view of a BSC(eps_dx) link at blocklength `n` when the
/// transmitter uses the largest covert sparseness with kernel P(1) = u.
#[wasm_bindgen]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WardenView {
    pub tau: f64,
    pub alpha: f64,
    pub beta: f64,
    pub error_sum: f64,
}

pub fn compute_warden(n: u64, u: f64, eps_dx: f64, budget: &LpdBudget) -> Result<WardenView, String> {
    let chi2 = chi2_bsc_kernel(u, eps_dx).map_err(|e| e.to_string())?;
    let tau = tau_max(n as f64, budget, chi2).map_err(|e| e.to_string())?;
    let d = detection_error_sum_exact(n, tau * u, eps_dx).map_err(|e| e.to_string())?;
    Ok(WardenView { tau, alpha: d.alpha, beta: d.beta, error_sum: d.error_sum })
}

fn budget(eps_det: f64, eps_dec: f64) -> Result<LpdBudget, JsError> {
    LpdBudget::new(eps_det, eps_dec).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = rateCurve)]
#[allow(clippy::too_many_arguments)]
pub fn rate_curve(
    kind: &str,
    rx: f64,
    dx: f64,
    eps_det: f64,
    eps_dec: f64,
    n_lo: f64,
    n_hi: f64,
    points: usize,
) -> Result<Curve, JsError> {
    let pair = channel_pair(kind, rx, dx).map_err(|e| JsError::new(&e))?;
    compute_curve(&pair, &budget(eps_det, eps_dec)?, n_lo, n_hi, points).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = operatingPoint)]
pub fn operating_point(kind: &str, rx: f64, dx: f64, eps_det: f64, eps_dec: f64) -> Result<Operating, JsError> {
    let pair = channel_pair(kind, rx, dx).map_err(|e| JsError::new(&e))?;
    compute_operating(&pair, &budget(eps_det, eps_dec)?).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = wardenView)]
pub fn warden_view(n: u32, u: f64, eps_dx: f64, eps_det: f64) -> Result<WardenView, JsError> {
    // eps_dec does not enter the detection side.
    compute_warden(n.into(), u, eps_dx, &budget(eps_det, 0.5)?).map_err(|e| JsError::new(&e))
}
