//! Acceptance criteria, one PASS/FAIL line each. Every criterion runs even
//! when an earlier one fails; the test fails at the end if any did.

use std::time::{Duration, Instant};

use covertcap::bounds::{
    awgn_bound, awgn_operating_point, awgn_rho_star, bsc_asymptote, l_bsc, l_bsc_generic, ChannelPair,
};
use covertcap::channels::{make_bsc, SparseInput};
use covertcap::divergence::{chi_squared, exact_binomial_tv, tau_max, tv_product_upper_bound};
use covertcap::gallager::{
    chi2_awgn_gaussian, chi2_bsc_kernel, e0_awgn_gaussian, e0_discrete, e0_sparse_lower_bounds, mutual_information,
};
use covertcap::verify::quadrature::{chi2_awgn_numeric, e0_awgn_numeric};
use covertcap::verify::{detection_error_sum_exact, reference_sim_config, simulate_decoding};
use covertcap::LpdBudget;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, Duration, fn() -> Verdict);

struct Verdict {
    passed: bool,
    detail: String,
}

fn budget() -> LpdBudget {
    LpdBudget::new(0.1, 1e-3).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn awgn_closed_form() -> Verdict {
    let b = budget();
    let (mut k_err, mut ratio_err, mut rho_err, mut r_err, mut n_err) = (0f64, 0f64, 0f64, 0f64, 0f64);
    for ratio in [0.5, 1.0, 2.0] {
        let op = awgn_operating_point(1.0, ratio, &b).unwrap();
        let n_min = op.n_min.unwrap();
        k_err = k_err.max((op.k_star - 1000f64.log2()).abs());
        ratio_err = ratio_err.max((op.n_star / n_min - 16.0).abs());
        rho_err = rho_err.max((awgn_rho_star(op.n_star, n_min) - 1.0).abs());
        // Log grid in n over three decades above n_min, linear grid in rho.
        let (mut best_n, mut best_r) = (0.0, f64::MIN);
        for i in 0..=3000 {
            let n = n_min * 10f64.powf(3.0 * i as f64 / 3000.0);
            for j in 1..=1000 {
                let r = awgn_bound(n, j as f64 / 1000.0, 1.0, ratio, &b).unwrap() / n;
                if r > best_r {
                    best_r = r;
                    best_n = n;
                }
            }
        }
        r_err = r_err.max(rel(best_r, op.r_star));
        n_err = n_err.max(rel(best_n, op.n_star));
    }
    Verdict {
        passed: k_err <= 1e-6 && ratio_err <= 1e-9 && rho_err <= 1e-6 && r_err <= 5e-3 && n_err <= 5e-3,
        detail: format!(
            "|k*-log2 1000| {k_err:.1e}, |n*/n_min-16| {ratio_err:.1e}, |rho*-1| {rho_err:.1e}, grid R {r_err:.1e}, grid n {n_err:.1e}"
        ),
    }
}

fn bsc_limit() -> Verdict {
    let b = budget();
    let mut worst = 0f64;
    let mut monotone = true;
    for eps_rx in [0.05, 0.1, 0.2] {
        for eps_dx in [0.2, 0.3, 0.4] {
            for k in 1..=10 {
                let rho = k as f64 / 10.0;
                let closed = l_bsc(rho, eps_rx, eps_dx, &b).unwrap();
                worst = worst.max(rel(l_bsc_generic(rho, 1e-6, eps_rx, eps_dx, &b).unwrap(), closed));
                let mut prev = f64::INFINITY;
                for j in 0..=24 {
                    let u = 10f64.powf(-6.0 + j as f64 / 4.0);
                    let l = l_bsc_generic(rho, u, eps_rx, eps_dx, &b).unwrap();
                    monotone &= l <= prev * (1.0 + 1e-12);
                    prev = l;
                }
            }
        }
    }
    Verdict {
        passed: worst <= 1e-4 && monotone,
        detail: format!("max rel gap at u=1e-6 {worst:.2e}, nonincreasing in u: {monotone}"),
    }
}

fn rate_curve_shape() -> Verdict {
    let b = budget();
    let pairs = [
        ChannelPair::Bsc { eps_rx: 0.1, eps_dx: 0.2 },
        ChannelPair::Bsc { eps_rx: 0.1, eps_dx: 0.3 },
        ChannelPair::Bsc { eps_rx: 0.1, eps_dx: 0.4 },
        ChannelPair::Awgn { sigma2_rx: 1.0, sigma2_dx: 0.5 },
        ChannelPair::Awgn { sigma2_rx: 1.0, sigma2_dx: 1.0 },
        ChannelPair::Awgn { sigma2_rx: 1.0, sigma2_dx: 2.0 },
    ];
    let mut unique_peak = true;
    let mut worst_ratio = f64::INFINITY;
    for pair in &pairs {
        let ns: Vec<f64> = (0..=700).map(|i| 10f64.powf(1.0 + 11.0 * i as f64 / 700.0)).collect();
        let rates: Vec<f64> = ns.iter().map(|&n| pair.evaluate(n, &b).unwrap().rate()).collect();
        let peak = (0..rates.len()).fold(0, |p, i| if rates[i] > rates[p] { i } else { p });
        let first = rates.iter().position(|&r| r > 0.0).unwrap();
        unique_peak &= peak > first && peak + 1 < rates.len();
        unique_peak &= rates[first..=peak].windows(2).all(|w| w[1] >= w[0]);
        unique_peak &= rates[peak..].windows(2).all(|w| w[1] <= w[0]);
        let coefficient = pair.asymptotic_slope(&b).unwrap() / b.eps_det();
        // The gap closes monotonically, so the smallest n is the worst case.
        for k in [100.0, 1e3, 1e4] {
            let n = k * ns[peak];
            let scaled = pair.evaluate(n, &b).unwrap().rate() * n.sqrt() / b.eps_det();
            worst_ratio = worst_ratio.min(scaled / coefficient);
        }
    }
    let slope = bsc_asymptote(0.1, 0.3, &b).unwrap();
    let slope_ok = (slope - 0.5700).abs() <= 1e-3;
    Verdict {
        passed: unique_peak && worst_ratio >= 0.95 && slope_ok,
        detail: format!(
            "unique interior peak: {unique_peak}; min rate*sqrt(n)/eps_det over coefficient for n >= 100 n_peak: {worst_ratio:.4} (need >= 0.95); asymptote {slope:.6} (0.5700 +- 1e-3): {slope_ok}"
        ),
    }
}

fn exact_detection_end_to_end() -> Verdict {
    let b = budget();
    let mut ok = true;
    let mut min_sum = 1f64;
    let mut max_chain = 0f64;
    for n in [100u64, 1000, 10_000] {
        for eps_dx in [0.2, 0.3, 0.4] {
            for u in [0.5, 1.0] {
                let tau = tau_max(n as f64, &b, chi2_bsc_kernel(u, eps_dx).unwrap()).unwrap();
                let tu = tau * u;
                let q1 = (1.0 - tu) * eps_dx + tu * (1.0 - eps_dx);
                let chi2 = chi_squared(&[1.0 - q1, q1], &[1.0 - eps_dx, eps_dx]).unwrap();
                let tv = exact_binomial_tv(n, eps_dx, q1).unwrap();
                let ub = tv_product_upper_bound(n as f64, chi2).unwrap();
                let sum = detection_error_sum_exact(n, tu, eps_dx).unwrap().error_sum;
                ok &= tv <= ub * (1.0 + 1e-12) && ub <= b.eps_det() * (1.0 + 1e-12) && sum >= 1.0 - b.eps_det();
                min_sum = min_sum.min(sum);
                max_chain = max_chain.max(ub / b.eps_det());
            }
        }
    }
    Verdict {
        passed: ok,
        detail: format!("min alpha+beta {min_sum:.6} (need >= 0.9), max bound/eps_det {max_chain:.12}"),
    }
}

fn sparse_e0_grid() -> Verdict {
    let ch = make_bsc(0.1).unwrap();
    let mut ordered = true;
    let mut collapse = 0f64;
    for i in 1..=10 {
        let rho = i as f64 / 10.0;
        for j in 0..10 {
            let tau = j as f64 / 10.0;
            for k in 1..=10 {
                let u = k as f64 / 10.0;
                let sparse = SparseInput::new(tau, vec![1.0 - u, u], 0).unwrap();
                let full = e0_discrete(rho, &sparse.full_distribution(), &ch).unwrap();
                let e0k = e0_discrete(rho, &[1.0 - u, u], &ch).unwrap();
                let lb = e0_sparse_lower_bounds(rho, tau, e0k).unwrap();
                ordered &= full >= lb.log - 1e-15 && lb.log >= lb.linear;
                collapse = collapse.max((e0_sparse_lower_bounds(rho, 1.0, e0k).unwrap().log - e0k).abs());
            }
        }
    }
    Verdict {
        passed: ordered && collapse <= 1e-12,
        detail: format!("E0 >= lb_log >= lb_linear on 1000 points: {ordered}; tau=1 collapse {collapse:.1e}"),
    }
}

fn quadrature() -> Verdict {
    let mut worst = 0f64;
    for ratio in [0.1, 0.5, 0.9] {
        for rho in [0.25, 1.0] {
            worst = worst.max((e0_awgn_numeric(rho, ratio, 1.0) - e0_awgn_gaussian(rho, ratio, 1.0).unwrap()).abs());
        }
        worst = worst.max((chi2_awgn_numeric(ratio, 1.0) - chi2_awgn_gaussian(ratio, 1.0).unwrap()).abs());
    }
    Verdict { passed: worst <= 1e-6, detail: format!("max |numeric - closed| {worst:.2e}") }
}

fn monte_carlo() -> Verdict {
    let cfg = reference_sim_config(&budget(), 20_240_601).unwrap();
    let r = simulate_decoding(&cfg).unwrap();
    let limit = r.gallager_bound + 3.0 * r.confidence_half_width;
    Verdict {
        passed: cfg.codebooks >= 200 && cfg.trials >= 500 && r.decode_error_estimate <= limit,
        detail: format!(
            "n={} M={} tau={:.5} {}x{}: estimate {:.4} +- {:.4}, bound {:.4} (rho {:.3})",
            cfg.n,
            cfg.m,
            cfg.tau,
            cfg.codebooks,
            cfg.trials,
            r.decode_error_estimate,
            r.confidence_half_width,
            r.gallager_bound,
            r.gallager_rho
        ),
    }
}

fn derivative() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let h = 1e-5;
    let mut worst = 0f64;
    for _ in 0..20 {
        let p: f64 = rng.random_range(0.05..0.95);
        let eps: f64 = rng.random_range(0.01..0.45);
        let ch = make_bsc(eps).unwrap();
        let input = [1.0 - p, p];
        let slope = e0_discrete(h, &input, &ch).unwrap() / h;
        worst = worst.max(rel(slope, mutual_information(&input, &ch).unwrap()));
    }
    Verdict { passed: worst <= 1e-3, detail: format!("max rel |slope - I| {worst:.2e}") }
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("1 awgn closed-form consistency", Duration::from_secs(10), awgn_closed_form),
        ("2 bsc limit consistency", Duration::from_secs(5), bsc_limit),
        ("3 rate curve shape and asymptote", Duration::MAX, rate_curve_shape),
        ("4 exact detection end-to-end", Duration::from_secs(30), exact_detection_end_to_end),
        ("5 sparse E0 inequality grid", Duration::from_secs(5), sparse_e0_grid),
        ("6 awgn quadrature", Duration::MAX, quadrature),
        ("7 monte carlo vs gallager bound", Duration::from_secs(15 * 60), monte_carlo),
        ("8 E0 slope at zero", Duration::MAX, derivative),
    ];
    let mut failed = Vec::new();
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let v = run();
        let took = start.elapsed();
        let in_time = took <= budget;
        let passed = v.passed && in_time;
        let limit = if budget == Duration::MAX { String::new() } else { format!(" / {budget:?}") };
        println!(
            "{} criterion {name}: {} [{:.2?}{limit}]",
            if passed { "PASS" } else { "FAIL" },
            v.detail,
            took
        );
        if !passed {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
