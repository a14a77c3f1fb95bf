use covertcap::bounds::{achievable_log2m, l_bsc, optimize_rho_with, ChannelPair};
use covertcap::channels::{make_bsc, SparseInput};
use covertcap::divergence::{
    binomial_detection, chi_squared, exact_binomial_tv, kl_divergence, tau_max, total_variation,
    tv_product_upper_bound,
};
use covertcap::gallager::{chi2_bsc_kernel, e0_discrete, e0_sparse_lower_bounds, mutual_information};
use covertcap::specfn::{lambert_w0, lambert_w0_inv, xi_factor};
use covertcap::LpdBudget;
use proptest::prelude::*;

fn distribution(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.01f64..1.0, len).prop_map(|v| {
        let s: f64 = v.iter().sum();
        v.into_iter().map(|x| x / s).collect()
    })
}

proptest! {
    #[test]
    fn lambert_round_trip(x in -0.367f64..1e6) {
        let w = lambert_w0(x).unwrap();
        let back = lambert_w0_inv(w).unwrap();
        prop_assert!((back - x).abs() <= 1e-12 * x.abs().max(1.0));
    }

    #[test]
    fn xi_in_unit_interval(eps in 1e-6f64..1.0) {
        let xi = xi_factor(eps).unwrap();
        prop_assert!(xi > 0.0 && xi < 1.0);
    }

    #[test]
    fn mixture_chi2_scales_quadratically(tau in 0.0f64..1.0, kernel in distribution(3)) {
        // Output laws of a 3-ary channel; the reference is the innocent row.
        let ch = covertcap::DiscreteChannel::new(
            vec![vec![0.7, 0.2, 0.1], vec![0.1, 0.6, 0.3], vec![0.2, 0.3, 0.5]],
            0,
        ).unwrap();
        let q = ch.row(0).to_vec();
        let kernel_out = ch.output_marginal(&kernel).unwrap();
        let sparse = SparseInput::new(tau, kernel.clone(), 0).unwrap();
        let mixed_out = ch.output_marginal(&sparse.full_distribution()).unwrap();
        let full = chi_squared(&mixed_out, &q).unwrap();
        let scaled = tau * tau * chi_squared(&kernel_out, &q).unwrap();
        prop_assert!((full - scaled).abs() <= 1e-12 * scaled.max(1e-300) + 1e-15);
    }

    #[test]
    fn pinsker_and_ordering(p in distribution(4), q in distribution(4)) {
        let tv = total_variation(&p, &q).unwrap();
        let kl = kl_divergence(&p, &q).unwrap();
        let chi2 = chi_squared(&p, &q).unwrap();
        prop_assert!(tv <= (kl / 2.0).sqrt() + 1e-12);
        prop_assert!(kl <= (1.0 + chi2).ln() + 1e-12);
        prop_assert!((0.0..=1.0).contains(&tv));
    }

    #[test]
    fn exact_tv_below_product_bound(n in 1u64..3000, eps in 0.05f64..0.45, t in 0.0f64..0.2) {
        let q1 = (1.0 - t) * eps + t * (1.0 - eps);
        let chi2 = chi_squared(&[1.0 - q1, q1], &[1.0 - eps, eps]).unwrap();
        let tv = exact_binomial_tv(n, eps, q1).unwrap();
        prop_assert!(tv <= tv_product_upper_bound(n as f64, chi2).unwrap() * (1.0 + 1e-12) + 1e-15);
        let d = binomial_detection(n, eps, q1).unwrap();
        prop_assert!((d.error_sum - (1.0 - tv)).abs() <= 1e-12);
    }

    #[test]
    fn tau_max_meets_budget(n in 1.0f64..1e9, eps_dx in 0.05f64..0.45, u in 0.05f64..1.0) {
        let b = LpdBudget::new(0.1, 1e-3).unwrap();
        let chi2k = chi2_bsc_kernel(u, eps_dx).unwrap();
        let tau = tau_max(n, &b, chi2k).unwrap();
        prop_assert!(tau > 0.0 && tau <= 1.0);
        let bound = tv_product_upper_bound(n, tau * tau * chi2k).unwrap();
        prop_assert!(bound <= b.eps_det() * (1.0 + 1e-9));
    }

    #[test]
    fn e0_concave_bounded_by_rho_mi(p in 0.01f64..0.99, eps in 0.01f64..0.49, rho in 0.011f64..0.989) {
        let ch = make_bsc(eps).unwrap();
        let input = [1.0 - p, p];
        let h = 0.01;
        let (a, m, c) = (
            e0_discrete(rho - h, &input, &ch).unwrap(),
            e0_discrete(rho, &input, &ch).unwrap(),
            e0_discrete(rho + h, &input, &ch).unwrap(),
        );
        prop_assert!(a - 2.0 * m + c <= 1e-12);
        prop_assert!(m <= rho * mutual_information(&input, &ch).unwrap() + 1e-12);
    }

    #[test]
    fn sparse_bounds_ordered(rho in 0.0f64..1.0, tau in 0.0f64..1.0, e0k in 0.0f64..3.0) {
        let b = e0_sparse_lower_bounds(rho, tau, e0k).unwrap();
        prop_assert!(b.log >= b.linear);
        prop_assert!(b.linear >= 0.0);
    }

    #[test]
    fn optimized_rho_dominates_grid(n in 10.0f64..1e9, eps_dx in 0.2f64..0.45) {
        let b = LpdBudget::new(0.1, 1e-3).unwrap();
        let l = |rho: f64| l_bsc(rho, 0.1, eps_dx, &b).unwrap();
        let opt = optimize_rho_with(n, l, &b);
        for i in 1..=50 {
            let rho = i as f64 / 50.0;
            prop_assert!(opt.log2_m >= achievable_log2m(n, rho, l(rho), &b) - 1e-6 * opt.log2_m.abs().max(1.0));
        }
    }

    #[test]
    fn covert_rate_below_receiver_capacity(n in 10.0f64..1e12, eps_dx in 0.05f64..0.45) {
        let b = LpdBudget::new(0.1, 1e-3).unwrap();
        let pair = ChannelPair::Bsc { eps_rx: 0.1, eps_dx };
        let e = pair.evaluate(n, &b).unwrap();
        prop_assert!(e.rate() >= 0.0 && e.rate() <= pair.receiver_capacity());
    }
}
