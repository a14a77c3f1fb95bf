//! Numerical integration used to check the AWGN closed forms from their
//! defining integrals. Nothing here is on the bound-computation path.

use std::f64::consts::PI;

/// Gauss-Hermite nodes and weights for the weight `exp(-t^2)`, found by
/// Newton iteration on the orthonormal Hermite recurrence.
pub fn gauss_hermite(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 1);
    let pim4 = PI.powf(-0.25);
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    let m = order.div_ceil(2);
    let nf = order as f64;
    let mut z = 0.0_f64;
    for i in 0..m {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[0],
            3 => 1.91 * z - 0.91 * nodes[1],
            _ => 2.0 * z - nodes[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = pim4;
            let mut p2 = 0.0;
            for j in 0..order {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 * z.abs().max(1.0) {
                break;
            }
        }
        nodes[i] = z;
        nodes[order - 1 - i] = -z;
        weights[i] = 2.0 / (pp * pp);
        weights[order - 1 - i] = weights[i];
    }
    (nodes, weights)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    // Below a few ulps of the panel value the difference is rounding noise.
    let floor = 64.0 * f64::EPSILON * (left.abs() + right.abs());
    if !delta.is_finite() {
        return f64::NAN;
    }
    if depth == 0 || delta.abs() <= 15.0 * tol.max(floor) {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Adaptive Simpson quadrature on `[a, b]` with absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    // Split first so narrow peaks are not missed by the initial 3-point rule.
    let pieces = 64;
    let h = (b - a) / pieces as f64;
    (0..pieces)
        .map(|i| {
            let (lo, hi) = (a + i as f64 * h, a + (i + 1) as f64 * h);
            let (fa, fm, fb) = (f(lo), f(0.5 * (lo + hi)), f(hi));
            let whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
            simpson_step(&f, lo, hi, fa, fm, fb, whole, tol / pieces as f64, 40)
        })
        .sum()
}

/// Integral of an even, decaying function over the real line: integrates
/// `[0, L]` and doubles `L` until the added tail falls below `tol`.
pub fn integrate_even_line<F: Fn(f64) -> f64>(f: F, initial_half_width: f64, tol: f64) -> f64 {
    let mut l = initial_half_width;
    let mut total = adaptive_simpson(&f, 0.0, l, tol);
    for _ in 0..30 {
        let tail = adaptive_simpson(&f, l, 2.0 * l, tol);
        total += tail;
        l *= 2.0;
        if tail.abs() <= tol {
            break;
        }
    }
    2.0 * total
}

fn gauss_pdf(x: f64, var: f64) -> f64 {
    (-x * x / (2.0 * var)).exp() / (2.0 * PI * var).sqrt()
}

/// E0 of the AWGN channel (noise `sigma2`) under a zero-mean Gaussian input
/// of variance `power`, evaluated from its defining double integral:
/// Gauss-Hermite over the input, adaptive Simpson over the output.
pub fn e0_awgn_numeric(rho: f64, power: f64, sigma2: f64) -> f64 {
    let (t, w) = gauss_hermite(120);
    let s = 1.0 + rho;
    let scale = (2.0 * power).sqrt();
    let inner = |y: f64| -> f64 {
        t.iter()
            .zip(&w)
            .map(|(&ti, &wi)| wi * gauss_pdf(y - scale * ti, sigma2).powf(1.0 / s))
            .sum::<f64>()
            / PI.sqrt()
    };
    let outer = |y: f64| inner(y).powf(s);
    let integral = integrate_even_line(outer, 4.0 * (power + sigma2).sqrt(), 1e-10);
    -integral.ln()
}

/// Chi-squared distance between `N(0, power + sigma2)` and `N(0, sigma2)`,
/// integrated numerically from `(p - q)^2 / q`.
pub fn chi2_awgn_numeric(power: f64, sigma2: f64) -> f64 {
    let integrand = |w: f64| {
        let ln_q = -w * w / (2.0 * sigma2) - 0.5 * (2.0 * PI * sigma2).ln();
        let log_ratio = -w * w / (2.0 * (power + sigma2)) + w * w / (2.0 * sigma2)
            - 0.5 * ((power + sigma2) / sigma2).ln();
        // q r^2 in log space: far out q underflows while r^2 overflows.
        let ln_abs_r = if log_ratio > 30.0 { log_ratio } else { log_ratio.exp_m1().abs().ln() };
        (ln_q + 2.0 * ln_abs_r).exp()
    };
    integrate_even_line(integrand, 4.0 * (power + sigma2).sqrt(), 1e-10)
}
