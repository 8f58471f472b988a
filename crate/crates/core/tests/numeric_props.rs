use std::f64::consts::PI;

use betakit::betavalues::{beta_odd_exact, beta_partial_sum, beta_series, beta_series_with, SeriesMethod, SeriesOptions};
use betakit::eulerpoly::run_identity_suite_with;
use betakit::eulerpoly::SuiteTables;
use betakit::exact::factorial;
use betakit::quadrature::{
    aux_integral_numeric_with, beta_even_integrand, beta_even_quadrature_with, BetaEvenIntegrand, IntegrandSpec,
    SignConvention,
};
use betakit::telescope::{oscillatory_decay, partial_sum_j, ExtendedFn};
use betakit::Execution;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Even-indexed partial sums lie above the limit, odd-indexed below.
    #[test]
    fn partial_sums_bracket_the_limit(s in prop::sample::select(vec![2u32, 3, 5]), n in 0u64..=1000) {
        let limit = beta_series(s, 20).unwrap();
        let p = beta_partial_sum(s, n, 30);
        let l = limit.value().rescale(30);
        if n % 2 == 0 {
            prop_assert!(p.cmp_value(&l).is_gt());
        } else {
            prop_assert!(p.cmp_value(&l).is_lt());
        }
    }

    #[test]
    fn suite_passes_for_any_seed(seed in any::<u64>()) {
        let tables = SuiteTables::build(12);
        let r = run_identity_suite_with(&tables, 12, 3, seed, Execution::default());
        prop_assert!(r.all_passed(), "{:?}", r);
    }
}

#[test]
fn odd_values_are_positive() {
    for k in 0..=30 {
        assert!(beta_odd_exact(k).coeff().is_positive(), "k={k}");
    }
}

#[test]
fn plain_and_accelerated_series_agree() {
    let opts = SeriesOptions::default();
    for s in [2u32, 3, 4] {
        let a = beta_series_with(s, 10, SeriesMethod::Plain, &opts).unwrap();
        let b = beta_series_with(s, 10, SeriesMethod::Accelerated, &opts).unwrap();
        assert!(a.abs_diff(&b).to_f64() <= 2e-10, "s={s}");
    }
}

#[test]
fn quadrature_matches_series_within_tolerance() {
    for k in 1..=3u32 {
        let tol = 1e-9;
        let q = beta_even_quadrature_with(k, tol, SignConvention::Derived, Execution::default()).unwrap();
        let s = beta_series(2 * k, 10).unwrap().to_f64();
        assert!((q.value - s).abs() <= tol.max(1e-9), "k={k}: {} vs {s}", q.value);
    }
}

#[test]
fn integrand_converges_to_endpoint_value() {
    for k in 1..=3u32 {
        let f = BetaEvenIntegrand::new(k).unwrap();
        let v = f.endpoint_value();
        assert_eq!(beta_even_integrand(k, 0.5).unwrap(), v);
        for j in 3..=7 {
            let d = 10f64.powi(-j);
            let err = (f.eval(0.5 - d) - v).abs();
            assert!(err <= 1.0 * d, "k={k} j={j}: {err:e}");
        }
    }
}

/// The limit of the J partial sums is `(−1)^k (2k−1)! β(2k) / π^{2k}`.
#[test]
fn j_limit_is_scaled_beta_even() {
    for k in 1..=2u32 {
        let t = partial_sum_j(k, 10_000, 1e-11).unwrap();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let f = betakit::exact::Rational::from_integer(factorial(2 * k as u64 - 1)).to_f64();
        let want = sign * f * beta_series(2 * k, 10).unwrap().to_f64() / PI.powi(2 * k as i32);
        assert!((t.target.to_f64() - want).abs() <= 1e-6, "k={k}");
        assert!((t.last().1.to_f64() - want).abs() <= 1e-6, "k={k}");
    }
}

/// `R·|∫ g sin(Rt)|` and `R·|∫ h cos(Rt)|` do not grow with `N`.
#[test]
fn oscillatory_integrals_decay_like_one_over_r() {
    for name in [ExtendedFn::G, ExtendedFn::H] {
        for k in 1..=2u32 {
            let c: Vec<f64> = [10u64, 100, 1000].iter().map(|&n| oscillatory_decay(name, k, n, 1e-12).unwrap()).collect();
            assert!(c.iter().all(|v| v.is_finite()));
            assert!(c[1] <= 1.5 * c[0] && c[2] <= 1.5 * c[0].max(c[1]), "{name} k={k}: {c:?}");
        }
    }
}

#[test]
fn execution_modes_agree() {
    let seq = Execution::Sequential;
    let par = Execution::Parallel;
    let a = beta_even_quadrature_with(2, 1e-10, SignConvention::Derived, seq).unwrap();
    let b = beta_even_quadrature_with(2, 1e-10, SignConvention::Derived, par).unwrap();
    assert_eq!(a, b);
    let spec = IntegrandSpec::AuxJ { k: 2, m: 40 };
    assert_eq!(aux_integral_numeric_with(spec, 1e-11, seq).unwrap(), aux_integral_numeric_with(spec, 1e-11, par).unwrap());
    let t = SuiteTables::build(16);
    assert_eq!(run_identity_suite_with(&t, 16, 4, 9, seq), run_identity_suite_with(&t, 16, 4, 9, par));
    let o1 = SeriesOptions { exec: seq, ..SeriesOptions::default() };
    let o2 = SeriesOptions { exec: par, ..SeriesOptions::default() };
    assert_eq!(
        beta_series_with(2, 9, SeriesMethod::Plain, &o1).unwrap(),
        beta_series_with(2, 9, SeriesMethod::Plain, &o2).unwrap()
    );
}
