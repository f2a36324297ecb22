//! Quartic case labels, canonical family recognition and the degree-4
//! classifier under affine changes of coordinates.

mod common;

use common::strategies::{affine_map, bpoly, nonzero_rat, small_rat};
use plansub::classify::{
    canonical_family_match, classify_degree4, disconnection_certificate, quartic_case, CaseLabel, Family,
    Verdict,
};
use plansub::{int, rat, AffineEquivalence, AffineMap, BPoly};
use proptest::prelude::*;
use proptest::sample::select;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::One),
        Just(Family::Two(int(0))),
        Just(Family::Two(int(1))),
        Just(Family::Three),
        (-6i64..=6, 1i64..=4)
            .prop_filter_map("a02^2 < 3", |(n, d)| Family::new(4, Some(rat(n, d))).ok()),
    ]
}

/// A translation followed by a diagonal scaling, optionally swapping the
/// variables first: the maps the recognizer is complete for.
fn scaling_map() -> impl Strategy<Value = AffineMap> {
    (nonzero_rat(), nonzero_rat(), small_rat(), small_rat(), any::<bool>()).prop_map(|(s, t, u, v, swap)| {
        let m = AffineMap::diagonal(s, t).compose(&AffineMap::translation(u, v));
        if swap {
            m.compose(&AffineMap::swap())
        } else {
            m
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn case_labels_are_affine_invariant(
        label in select(CaseLabel::ALL.to_vec()),
        t in affine_map(),
        m in nonzero_rat(),
        n in small_rat(),
        extra in bpoly(3, 5),
    ) {
        // Lower-order terms and translations do not touch the quartic part.
        let p = &label.seed() + &extra;
        let q = AffineEquivalence::new(t, m, n).unwrap().apply_to(&p);
        prop_assert_eq!(quartic_case(&q).unwrap().label, label);
    }

    #[test]
    fn families_are_recognized(f in family(), t in scaling_map(), m in nonzero_rat(), n in small_rat()) {
        let p = AffineEquivalence::new(t, m, n).unwrap().apply_to(&f.polynomial());
        let found = canonical_family_match(&p);
        prop_assert!(found.is_some(), "{} not recognized", p);
        let found = found.unwrap();
        prop_assert_eq!(&found.family, &f);
        prop_assert_eq!(found.equivalence.apply_to(&f.polynomial()), p.clone());
        match classify_degree4(&p).unwrap() {
            Verdict::SubmersionDisconnected { family_match, .. } => prop_assert_eq!(family_match.family, f),
            other => prop_assert!(false, "{}: {:?}", p, other),
        }
    }

    #[test]
    fn match_is_verified_or_absent(p in bpoly(4, 8)) {
        if let Some(found) = canonical_family_match(&p) {
            prop_assert_eq!(found.equivalence.apply_to(&found.family.polynomial()), p);
        }
    }

    #[test]
    fn critical_points_are_never_missed(p in bpoly(4, 8), a in small_rat(), b in small_rat()) {
        // Drop linear terms and translate: (a, b) is a critical point.
        let f = BPoly::from_terms(p.terms().filter(|&(i, j, _)| i + j != 1).map(|(i, j, c)| (i, j, c.clone())));
        prop_assume!(!f.is_constant());
        let q = f.affine_substitute(&AffineMap::translation(-&a, -&b));
        match classify_degree4(&q).unwrap() {
            Verdict::NotSubmersion(w) => prop_assert!(w.brackets_zero_of_gradient(&q)),
            other => prop_assert!(false, "{}: {:?}", q, other),
        }
    }
}

#[test]
fn disconnection_certificates_verify() {
    let mut fams = vec![Family::One, Family::Two(int(0)), Family::Two(int(1)), Family::Three];
    for n in -6..=6 {
        if let Ok(f) = Family::new(4, Some(rat(n, 4))) {
            fams.push(f);
        }
    }
    for f in fams {
        let cert = disconnection_certificate(&f);
        assert!(cert.verify(), "{f}");
        let p = f.polynomial();
        for pt in [&cert.point_a, &cert.point_b] {
            assert_eq!(p.eval(&pt.0, &pt.1), cert.level, "{f}");
        }
    }
}

#[test]
fn degree_and_constant_errors() {
    assert!(classify_degree4(&BPoly::constant(int(2))).is_err());
    assert!(classify_degree4(&BPoly::from_ints(&[(5, 0, 1)])).is_err());
    assert!(quartic_case(&BPoly::from_ints(&[(3, 0, 1)])).is_err());
}
