use ffzeta::ffield::{Field, FieldSpec};
use ffzeta::polyring::{
    enumerate_monic, factor, irreducible_count, irreducible_table, is_irreducible, is_squarefree,
    monic_from_index, quadratic_character, squarefree_count, MonicFilter, Poly,
};
use proptest::prelude::*;

fn f5() -> Field {
    FieldSpec::prime(5).unwrap()
}

fn monics_up_to(f: &Field, deg: usize) -> Vec<Poly> {
    (0..=deg)
        .flat_map(|n| enumerate_monic(f, n, MonicFilter::All))
        .collect()
}

#[test]
fn character_is_multiplicative() {
    let f = f5();
    let ds = [
        Poly::from_ints(&f, &[0, 1]),
        Poly::from_ints(&f, &[0, 1, 0, 1]),
        Poly::from_ints(&f, &[2, 0, 1, 0, 0, 1]),
    ];
    let small = monics_up_to(&f, 2);
    let large = monics_up_to(&f, 4);
    for d in &ds {
        let chi: Vec<i32> = large
            .iter()
            .map(|g| quadratic_character(d, g).unwrap())
            .collect();
        for a in &small {
            let ca = quadratic_character(d, a).unwrap();
            for (b, &cb) in large.iter().zip(&chi) {
                if a.degree().unwrap() + b.degree().unwrap() > 4 {
                    continue;
                }
                let ab = a.mul(b).unwrap();
                assert_eq!(
                    quadratic_character(d, &ab).unwrap(),
                    ca * cb,
                    "D = {d}, f = {a}, g = {b}"
                );
            }
        }
    }
}

#[test]
fn reciprocity_is_trivial_for_q_1_mod_4() {
    let f = f5();
    let table = irreducible_table(&f, 3, 10_000).unwrap();
    let primes: Vec<&Poly> = table.iter().collect();
    for (i, p) in primes.iter().enumerate() {
        for r in &primes[i + 1..] {
            assert_eq!(
                quadratic_character(p, r).unwrap(),
                quadratic_character(r, p).unwrap(),
                "{p} vs {r}"
            );
        }
    }
}

#[test]
fn degree_identity() {
    for q in [3u64, 5, 9] {
        let f = FieldSpec::with_order(q).unwrap();
        let table = irreducible_table(&f, 4, 1_000_000).unwrap();
        for d in 1..=4 {
            let sum: u64 = (1..=d)
                .filter(|e| d % e == 0)
                .map(|e| e as u64 * table.count(e) as u64)
                .sum();
            assert_eq!(sum, q.pow(d as u32), "q = {q}, d = {d}");
            assert_eq!(table.count(d) as u128, irreducible_count(q, d as u32));
        }
    }
}

#[test]
fn squarefree_counts_match_closed_form() {
    let f = f5();
    for n in 2..=5 {
        let got = enumerate_monic(&f, n, MonicFilter::Squarefree).count() as u128;
        assert_eq!(got, 5u128.pow(n as u32) * 4 / 5);
        assert_eq!(squarefree_count(5, n as u32), got);
    }
    assert_eq!(enumerate_monic(&f, 2, MonicFilter::Irreducible).count(), 10);
    let zero: Vec<Poly> = enumerate_monic(&f, 0, MonicFilter::All).collect();
    assert_eq!(zero, vec![Poly::one(&f)]);
}

#[test]
fn documented_examples() {
    let f = f5();
    let p = |s: &str| Poly::parse(&f, s).unwrap();
    assert_eq!(p("T^2+4").gcd(&p("T+4")).unwrap(), p("T+4"));
    assert_eq!(
        p("T^3").divmod(&p("T")).unwrap(),
        (p("T^2"), Poly::zero(&f))
    );
    assert_eq!(p("T+2").mul(&p("T+3")).unwrap(), p("T^2+1"));
    assert!(is_squarefree(&p("T^5+4*T")).unwrap());
    assert!(!is_squarefree(&p("T^2")).unwrap());
    assert_eq!(quadratic_character(&p("T"), &p("T+1")).unwrap(), 1);
    assert_eq!(quadratic_character(&p("T^3+T"), &p("T+4")).unwrap(), -1);
    assert_eq!(quadratic_character(&p("T^3+T"), &p("T")).unwrap(), 0);
}

fn poly_strategy(q: u64, max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..q as i64, 1..=max_deg + 1)
}

proptest! {
    #[test]
    fn factorization_reconstructs(coeffs in poly_strategy(9, 8)) {
        let f = FieldSpec::with_order(9).unwrap();
        let mut raw: Vec<u32> = coeffs.iter().map(|&c| c as u32).collect();
        if raw.iter().all(|&c| c == 0) { raw[0] = 1; }
        let poly = Poly::new(&f, raw).unwrap();
        let fac = factor(&poly).unwrap();
        prop_assert_eq!(fac.product(), poly.clone());
        for (p, m) in &fac.factors {
            prop_assert!(p.is_monic() && *m >= 1);
            prop_assert!(is_irreducible(p).unwrap());
        }
        let sorted = fac.factors.windows(2).all(|w| {
            let (a, b) = (&w[0].0, &w[1].0);
            a.degree() < b.degree() || (a.degree() == b.degree() && a != b)
        });
        prop_assert!(sorted);
        prop_assert_eq!(is_squarefree(&poly).unwrap(), fac.factors.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn divmod_identity(a in poly_strategy(7, 9), b in poly_strategy(7, 5)) {
        let f = FieldSpec::prime(7).unwrap();
        let a = Poly::from_ints(&f, &a);
        let b = Poly::from_ints(&f, &b);
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.divmod(&b).unwrap();
        prop_assert_eq!(quo.mul(&b).unwrap().add(&rem).unwrap(), a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn literal_round_trip(q in prop::sample::select(vec![5u64, 9, 27]), n in 0usize..7, k in 0u64..u64::MAX) {
        let f = FieldSpec::with_order(q).unwrap();
        let idx = k % (q.pow(n as u32));
        let poly = monic_from_index(&f, n, idx);
        let text = poly.to_string();
        prop_assert_eq!(Poly::parse(&f, &text).unwrap(), poly);
    }

    #[test]
    fn character_values_are_signs(d in poly_strategy(5, 5), g in poly_strategy(5, 4)) {
        let f = f5();
        let d = Poly::from_ints(&f, &d);
        prop_assume!(!d.is_zero());
        let mut g = Poly::from_ints(&f, &g);
        prop_assume!(!g.is_zero());
        g = g.monic_part().unwrap().1;
        let chi = quadratic_character(&d, &g).unwrap();
        let coprime = d.gcd(&g).unwrap().is_one();
        prop_assert_eq!(chi == 0, !coprime);
    }
}
