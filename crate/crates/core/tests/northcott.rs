use ffzeta::ffield::FieldSpec;
use ffzeta::northcott::{
    affine_orbit, compute_S, enumerate_fields, membership_value, ComputeOptions, Dedupe,
    EnumerationScope,
};
use ffzeta::polyring::squarefree_monic_list;
use ffzeta::zetafn::{lpoly_from_charsum, CurveModel};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn members_are_reverifiable_from_d() {
    let f = FieldSpec::prime(5).unwrap();
    for (s, b) in [
        (c(1.0, 0.0), 1.0),
        (c(0.75, 0.0), 1.2),
        (c(-1.0, 0.0), 3.0),
        (c(0.5, 0.0), 0.5),
    ] {
        let r = compute_S(
            s,
            b,
            &EnumerationScope::new(&f, 0, 2),
            ComputeOptions::default(),
        )
        .unwrap();
        for m in &r.members {
            let l = lpoly_from_charsum(&CurveModel::new(m.d.clone()).unwrap(), 1_000_000).unwrap();
            let (v, order) = membership_value(&l, s, ComputeOptions::default()).unwrap();
            assert!(v <= b, "{} at s = {s}", m.d);
            assert_eq!((v, order), (m.abs_leading, m.order));
        }
        let in_rows = r.rows.iter().filter(|row| row.in_s).count();
        assert_eq!(in_rows, r.members.len());
        assert!(r.member_lpolynomials <= r.member_affine_orbits);
        assert!(r.member_affine_orbits <= r.members.len());
    }
}

#[test]
fn orbits_preserve_lpolynomials_exhaustively() {
    for q in [5u64, 9] {
        let f = FieldSpec::with_order(q).unwrap();
        for d in squarefree_monic_list(&f, 3) {
            let l = lpoly_from_charsum(&CurveModel::new(d.clone()).unwrap(), 100_000).unwrap();
            for e in affine_orbit(&d) {
                let le = lpoly_from_charsum(&CurveModel::new(e.clone()).unwrap(), 100_000).unwrap();
                assert_eq!(l, le, "q = {q}: {d} ~ {e}");
            }
        }
    }
}

#[test]
fn dedupe_modes_bracket_the_raw_count() {
    let f = FieldSpec::prime(5).unwrap();
    let count = |d| {
        enumerate_fields(&EnumerationScope::new(&f, 1, 2).with_dedupe(d))
            .unwrap()
            .len()
    };
    let (raw, orbit, lpoly) = (
        count(Dedupe::Raw),
        count(Dedupe::AffineOrbit),
        count(Dedupe::ByLpolynomial),
    );
    assert_eq!(raw, 2600);
    assert!(lpoly <= orbit && orbit < raw, "{lpoly} {orbit} {raw}");
}

#[test]
fn thread_count_does_not_change_the_report() {
    let f = FieldSpec::prime(5).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                compute_S(
                    c(-1.0, 0.0),
                    3.0,
                    &EnumerationScope::new(&f, 0, 2),
                    ComputeOptions::default(),
                )
                .unwrap()
            })
    };
    let one = run(1);
    assert_eq!(one, run(5));
    assert!(one.complete_within_scope);
}

#[test]
fn plain_central_value_differs_from_leading_coefficient() {
    let f = FieldSpec::with_order(9).unwrap();
    let scope = EnumerationScope::new(&f, 1, 1);
    let s = c(0.5, 0.0);
    let starred = compute_S(s, 1e-6, &scope, ComputeOptions::default()).unwrap();
    let plain = compute_S(
        s,
        1e-6,
        &scope,
        ComputeOptions {
            plain_central_value: true,
        },
    )
    .unwrap();
    assert!(plain.members.len() > starred.members.len());
    assert!(plain.members.iter().all(|m| m.abs_leading < 1e-9));
}
