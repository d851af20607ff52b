use ffzeta::bounds::{
    classify_point, genus_cap, northcott_line, right_threshold_b, BoundsError, RegionKind,
};
use ffzeta::ffield::FieldSpec;
use ffzeta::northcott::{
    compute_S, enumerate_fields, membership_value, ComputeOptions, EnumerationScope,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn genus_cap_is_sound_at_q5() {
    let f = FieldSpec::prime(5).unwrap();
    let entries = enumerate_fields(&EnumerationScope::new(&f, 0, 3)).unwrap();
    for (s, b) in [
        (c(-1.0, 0.0), 2.0),
        (c(-2.0, 0.0), 50.0),
        (c(-0.5, 0.3), 1.5),
    ] {
        assert_eq!(classify_point(5, s).unwrap().kind, RegionKind::Northcott);
        let cap = genus_cap(5, s, b).unwrap() as usize;
        assert!(
            cap < 3,
            "s = {s}, B = {b}: cap {cap} leaves nothing to test"
        );
        for e in entries.iter().filter(|e| e.curve.genus() > cap) {
            let (v, _) = membership_value(&e.lpoly, s, ComputeOptions::default()).unwrap();
            assert!(
                v > b,
                "{} of genus {} beats the cap at s = {s}",
                e.curve.D(),
                e.curve.genus()
            );
        }
    }
}

#[test]
fn right_threshold_covers_quadratic_fields() {
    let f = FieldSpec::prime(5).unwrap();
    let bound = 625.0 / 384.0;
    for e in enumerate_fields(&EnumerationScope::new(&f, 1, 2)).unwrap() {
        let (v, _) = membership_value(&e.lpoly, c(2.0, 0.0), ComputeOptions::default()).unwrap();
        assert!(v <= bound, "{}", e.curve.D());
    }
}

#[test]
fn right_threshold_limits() {
    let big = right_threshold_b(5, 60.0).unwrap().value.unwrap();
    assert!((big - 1.0).abs() < 1e-12);
    let near = right_threshold_b(5, 1.1).unwrap();
    assert!(near.value.unwrap() > 1.0 && near.exact.is_none());
    assert!(matches!(
        right_threshold_b(5, 1.0),
        Err(BoundsError::SigmaNotGreaterThanOne(_))
    ));
}

#[test]
fn northcott_verdict_yields_certified_scan() {
    let f = FieldSpec::prime(5).unwrap();
    let s = c(-2.0, 0.0);
    let r = compute_S(
        s,
        100.0,
        &EnumerationScope::new(&f, 0, 1),
        ComputeOptions::default(),
    )
    .unwrap();
    assert!(r.complete_within_scope);
    assert_eq!(r.genus_cap_used, Some(genus_cap(5, s, 100.0).unwrap()));
}

#[test]
fn all_b_verdicts_gain_members_with_genus() {
    let f = FieldSpec::prime(5).unwrap();
    for s in [c(1.0, 0.0), c(0.75, 0.0)] {
        assert_eq!(
            classify_point(5, s).unwrap().kind,
            RegionKind::NonNorthcottAllB
        );
        let counts: Vec<usize> = (1..=2)
            .map(|g| {
                compute_S(
                    s,
                    1.0,
                    &EnumerationScope::new(&f, g, g),
                    ComputeOptions::default(),
                )
                .unwrap()
                .members
                .len()
            })
            .collect();
        assert!(
            counts[0] > 0 && counts[1] > counts[0],
            "s = {s}: {counts:?}"
        );
    }
}

#[test]
fn q_3_mod_4_falls_back() {
    assert_eq!(
        classify_point(7, c(1.0, 0.0)).unwrap().kind,
        RegionKind::NoResult
    );
    let v = classify_point(7, c(3.0, 0.0)).unwrap();
    assert_eq!(
        (v.kind, v.provenance.as_str()),
        (RegionKind::NonNorthcottLargeB, "c")
    );
    assert!(matches!(
        classify_point(12, c(2.0, 0.0)),
        Err(BoundsError::InvalidPrimePower(12))
    ));
}

const PRIME_POWERS: [u64; 12] = [2, 3, 4, 5, 7, 8, 9, 13, 25, 27, 49, 81];

proptest! {
    #[test]
    fn classifier_is_total(q in prop::sample::select(PRIME_POWERS.to_vec()), re in -4.0f64..4.0, im in -3.0f64..3.0, snap in 0u8..4) {
        let s = match snap {
            0 => c(re, 0.0),
            1 => c(0.5, im),
            2 => c(northcott_line(q), im),
            _ => c(re, im),
        };
        let v = classify_point(q, s).unwrap();
        prop_assert_eq!(v.threshold_b.is_some(), v.kind == RegionKind::NonNorthcottLargeB);
        if let Some(b) = v.threshold_b {
            prop_assert!(b > 0.0 && b.is_finite());
        }
        let tags = ["a", "b", "c", "d", "e", "f", "g", "gap", "none"];
        prop_assert!(tags.contains(&v.provenance.as_str()));
        if s.re < northcott_line(q) && s != c(0.0, 0.0) {
            prop_assert_eq!(v.kind, RegionKind::Northcott);
        }
    }

    #[test]
    fn right_threshold_decreases_in_sigma(q in prop::sample::select(PRIME_POWERS.to_vec()), a in 1.01f64..6.0, d in 0.01f64..3.0) {
        let lo = right_threshold_b(q, a).unwrap().value.unwrap();
        let hi = right_threshold_b(q, a + d).unwrap().value.unwrap();
        prop_assert!(hi <= lo && hi >= 1.0);
    }
}
