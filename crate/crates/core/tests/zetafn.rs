use ffzeta::ffield::{Field, FieldSpec};
use ffzeta::polyring::{irreducible_table, monic_from_index, squarefree_monic_list, Poly};
use ffzeta::zetafn::{
    check_weil_package, class_number, lpoly_from_charsum, lpoly_from_prime_counts,
    lpoly_via_splitting, point_count_direct, prime_counts_from_lpoly, prime_counts_with_table,
    zeta_eval, zeta_special_value, CurveModel, LPolynomial, OrderConfidence, ZetaError,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn point_counts_agree_up_to_degree_three_on_h3() {
    let f = FieldSpec::prime(5).unwrap();
    let table = irreducible_table(&f, 3, 10_000).unwrap();
    for d in squarefree_monic_list(&f, 3) {
        let curve = CurveModel::new(d).unwrap();
        let counts = prime_counts_with_table(&curve, &table, 3).unwrap();
        let l = lpoly_from_charsum(&curve, 10_000).unwrap();
        assert_eq!(prime_counts_from_lpoly(&l, 3), counts);
        for n in 1..=3 {
            assert_eq!(
                point_count_direct(&curve, n, 1_000_000).unwrap(),
                counts.points(n).unwrap()
            );
        }
    }
}

#[test]
fn routes_agree_over_extension_fields() {
    for (q, n) in [(9u64, 5), (25, 3), (27, 3), (7, 7)] {
        let f = FieldSpec::with_order(q).unwrap();
        let table = irreducible_table(&f, (n - 1) / 2, 1_000_000).unwrap();
        for d in squarefree_monic_list(&f, n)
            .into_iter()
            .step_by(997)
            .take(30)
        {
            let curve = CurveModel::new(d).unwrap();
            assert_eq!(
                lpoly_via_splitting(&curve, &table).unwrap(),
                lpoly_from_charsum(&curve, 10_000_000).unwrap(),
                "q = {q}, D = {}",
                curve.D()
            );
        }
    }
}

#[test]
fn documented_curve() {
    let f = FieldSpec::prime(5).unwrap();
    let curve = CurveModel::parse(&f, "T^3+T").unwrap();
    let l = lpoly_from_charsum(&curve, 1_000).unwrap();
    assert_eq!(l.coeffs(), &[1, -2, 5]);
    assert_eq!(class_number(&l).unwrap(), 4);
    assert!(matches!(
        CurveModel::parse(&f, "T^3"),
        Err(ZetaError::NotSquarefree)
    ));
    assert!(matches!(
        CurveModel::parse(&f, "T^4+1"),
        Err(ZetaError::EvenDegree(4))
    ));
}

#[test]
fn pole_at_s_zero_and_one_only() {
    let l = LPolynomial::new(5, vec![1, -2, 5]).unwrap();
    assert!(zeta_eval(&l, c(0.0, 0.0)).is_err());
    assert!(zeta_eval(&l, c(1.0, 0.0)).is_err());
    let period = 2.0 * std::f64::consts::PI / 5f64.ln();
    assert!(zeta_eval(&l, c(1.0, period)).is_err());
    assert!(zeta_eval(&l, c(1.0, period / 2.0)).is_ok());
}

fn curve_strategy() -> impl Strategy<Value = (u64, usize, u64)> {
    (
        prop::sample::select(vec![3u64, 5, 7, 9, 11, 13]),
        1usize..=3,
    )
        .prop_flat_map(|(q, g)| (Just(q), Just(g), any::<u64>()))
}

fn sample_curve(q: u64, g: usize, seed: u64) -> Option<(Field, CurveModel)> {
    let f = FieldSpec::with_order(q).unwrap();
    let n = 2 * g + 1;
    let d: Poly = monic_from_index(&f, n, seed % q.pow(n as u32));
    CurveModel::new(d).ok().map(|c| (f, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weil_package_on_random_curves((q, g, seed) in curve_strategy()) {
        let Some((f, curve)) = sample_curve(q, g, seed) else { return Ok(()) };
        let table = irreducible_table(&f, g, 10_000_000).unwrap();
        let l = lpoly_via_splitting(&curve, &table).unwrap();
        let w = check_weil_package(&l);
        prop_assert!(w.funceq && w.rh, "{:?}", w);
        let h = class_number(&l).unwrap();
        let l1 = l.eval_f64(1.0);
        prop_assert_eq!(h as f64, l1);
    }

    #[test]
    fn functional_equation_of_zeta((q, g, seed) in curve_strategy(), re in -1.5f64..2.5, im in 0.1f64..3.0) {
        let Some((f, curve)) = sample_curve(q, g, seed) else { return Ok(()) };
        let table = irreducible_table(&f, g, 10_000_000).unwrap();
        let l = lpoly_via_splitting(&curve, &table).unwrap();
        let s = c(re, im);
        let lhs = zeta_eval(&l, c(1.0, 0.0) - s).unwrap();
        let factor = ((1.0 - g as f64) * (c(1.0, 0.0) - 2.0 * s) * (q as f64).ln()).exp();
        let rhs = factor * zeta_eval(&l, s).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()), "{lhs} vs {rhs}");
    }

    #[test]
    fn special_values_at_zero_and_one((q, g, seed) in curve_strategy()) {
        let Some((f, curve)) = sample_curve(q, g, seed) else { return Ok(()) };
        let table = irreducible_table(&f, g, 10_000_000).unwrap();
        let l = lpoly_via_splitting(&curve, &table).unwrap();
        let h = class_number(&l).unwrap() as f64;
        let (qf, lq) = (q as f64, (q as f64).ln());
        let v0 = zeta_special_value(&l, c(0.0, 0.0));
        let v1 = zeta_special_value(&l, c(1.0, 0.0));
        prop_assert_eq!((v0.order, v1.order), (-1, -1));
        prop_assert_eq!(v0.confidence, OrderConfidence::Exact);
        let want0 = h / ((1.0 - qf) * lq);
        let want1 = h * qf.powi(-(g as i32)) / ((1.0 - 1.0 / qf) * lq);
        prop_assert!((v0.leading.re - want0).abs() <= 1e-12 * want0.abs());
        prop_assert!((v1.leading.re - want1).abs() <= 1e-12 * want1.abs());
    }

    #[test]
    fn counts_round_trip_through_lpoly((q, g, seed) in curve_strategy()) {
        let Some((f, curve)) = sample_curve(q, g, seed) else { return Ok(()) };
        let table = irreducible_table(&f, g, 10_000_000).unwrap();
        let counts = prime_counts_with_table(&curve, &table, g).unwrap();
        let l = lpoly_from_prime_counts(&counts, q, g).unwrap();
        prop_assert_eq!(prime_counts_from_lpoly(&l, g), counts);
    }
}
