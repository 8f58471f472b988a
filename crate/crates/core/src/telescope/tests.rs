use super::*;

#[test]
fn e_star_examples() {
    assert_eq!(e_star(1, 0.0).unwrap(), 0.0);
    assert!(e_star(1, 0.5).unwrap().abs() < 1e-16);
    let want = -3.0 / 16.0 + 2f64.sqrt() / 8.0;
    assert!((e_star(1, 0.25).unwrap() - want).abs() < 1e-15);
    assert!(e_star(1, 0.51).is_err());
}

#[test]
fn correction_examples() {
    assert_eq!(correction_term(0, 0), Rational::new(1, 4));
    assert_eq!(correction_term(1, 0), Rational::new(-1, 16));
    assert_eq!(correction_term(3, 1), Rational::zero());
    for k in 0..=20 {
        assert_eq!(correction_term(k, 0), correction_term_via_bernoulli(k), "k={k}");
    }
}

#[test]
fn extended_examples() {
    let f1 = ExtendedFunctionSpec { name: ExtendedFn::F, k: 1 };
    let want = (-1.0 + PI / 4.0) / (2.0 * PI);
    assert!((extended_eval(f1, 0.0).unwrap() - want).abs() < 1e-15);
    assert!((want + 0.034_155).abs() < 1e-6);
    let g1 = ExtendedFunctionSpec { name: ExtendedFn::G, k: 1 };
    assert_eq!(extended_eval(g1, 0.0).unwrap(), 0.0);
    let h1 = ExtendedFunctionSpec { name: ExtendedFn::H, k: 1 };
    assert!((extended_eval(h1, 0.5).unwrap() + 1.0 / (2.0 * PI)).abs() < 1e-15);
    assert!(extended_eval(h1, 0.7).is_err());
}

#[test]
fn f_has_a_pole_for_k0() {
    let r = ExtendedFunction::new(ExtendedFunctionSpec { name: ExtendedFn::F, k: 0 });
    assert!(matches!(r, Err(Error::NotRemovable(_))));
    assert!(ExtendedFunction::new(ExtendedFunctionSpec { name: ExtendedFn::G, k: 0 }).is_ok());
}

#[test]
fn sampling() {
    assert_eq!(sample_points(0), vec![0]);
    assert_eq!(sample_points(3), vec![0, 1, 2, 3]);
    assert_eq!(sample_points(100), vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 100]);
    assert_eq!(*sample_points(250).last().unwrap(), 250);
}

#[test]
fn i_star_traces() {
    let t = partial_sum_i_star(0, 10_000);
    assert!(t.last().1.to_f64().abs() < 1e-4);
    // N = 0 is the single term I(k,0) − correction
    for k in 0..3 {
        let t = partial_sum_i_star(k, 5);
        let i0 = crate::betavalues::render_decimal(&crate::quadrature::aux_integral_i_closed(k, 0), 30);
        let want = i0.to_f64() - correction_term(k, 0).to_f64();
        assert!((t.at(0).unwrap().to_f64() - want).abs() < 1e-15);
    }
    let t = partial_sum_i_star(1, 100);
    let (s10, s100) = (t.at(10).unwrap().to_f64(), t.at(100).unwrap().to_f64());
    assert!(s100.abs() < s10.abs());
    assert_eq!(s10.signum(), s100.signum());
}

#[test]
fn j_trace_examples() {
    let t = partial_sum_j(1, 0, 1e-8).unwrap();
    assert!((t.at(0).unwrap().to_f64() + 1.0 / (PI * PI)).abs() < 1e-15);
    let t = partial_sum_j(1, 10_000, 1e-8).unwrap();
    let catalan = 0.915_965_594_177_219;
    assert!((t.last().1.to_f64() + catalan / (PI * PI)).abs() < 1e-8);
    assert!(partial_sum_j(0, 10, 1e-8).is_err());
}

#[test]
fn trace_serialization() {
    let t = partial_sum_i_star(0, 2);
    let v = serde_json::to_value(&t).unwrap();
    assert_eq!(v["family"], "I_star");
    assert_eq!(v["k"], 0);
    assert_eq!(v["target"], 0.0);
    assert_eq!(v["entries"][2][0], 2);
    let csv = t.to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("family,k,N,S_N,target"));
    assert!(lines.next().unwrap().starts_with("I_star,0,0,"));
}

#[test]
fn i_star_numeric_decomposition() {
    for k in 0..=2 {
        for m in 0..=2 {
            let q = aux_integral_i_star_numeric(k, m, 1e-12).unwrap();
            let i = crate::quadrature::aux_integral_i_closed(k, m).to_f64();
            let want = i - correction_term(k, m).to_f64();
            assert!((q.value - want).abs() < 1e-9, "k={k} m={m}");
        }
    }
}
