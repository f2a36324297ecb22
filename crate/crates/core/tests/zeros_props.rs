//! Common real zeros and critical points: every positive answer is checked
//! against an independent computation.

mod common;

use common::strategies::{affine_map, bpoly, nonzero_rat, small_rat};
use plansub::realroots::count_real_roots;
use plansub::zeros::{
    critical_point_exists, decide_cor_raiz22, decide_cor_raiz23, decide_thm_raiz22, decide_thm_raiz23,
    default_width, Locator, Raiz22Variant, ShapedPair22, ShapedPair23, ZeroTag, ZeroVerdict,
};
use plansub::{int, BPoly, Sign, UPoly, Var};
use proptest::prelude::*;

/// Independent check of a positive verdict for the pair `p`, `q` in `var`.
fn witness_holds(v: &ZeroVerdict, p: &BPoly, q: &BPoly, var: Var, r0: &UPoly) -> bool {
    let Some(w) = &v.witness else {
        return false;
    };
    match &w.x {
        Locator::Rational(x0) => {
            let ps = p.specialize(var.other(), x0);
            let qs = q.specialize(var.other(), x0);
            match (ps.is_zero(), qs.is_zero()) {
                (true, true) => true,
                (true, false) => count_real_roots(&qs, None).unwrap() > 0,
                (false, true) => count_real_roots(&ps, None).unwrap() > 0,
                (false, false) => {
                    let g = ps.gcd(&qs);
                    !g.is_constant() && count_real_roots(&g, None).unwrap() > 0
                }
            }
        }
        Locator::Algebraic(alpha) => alpha.sign_of(r0) == Sign::Zero,
    }
}

/// Degree-4 polynomials with degree at most `dy` in `y`.
fn quartic_with_y_degree(dy: u32) -> impl Strategy<Value = BPoly> {
    bpoly(4, 10).prop_map(move |p| BPoly::from_terms(p.terms().filter(|&(_, j, _)| j <= dy).map(|(i, j, c)| (i, j, c.clone()))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shaped_23_verdicts_are_sound(p in quartic_with_y_degree(3)) {
        prop_assume!(p.depends_on(Var::Y));
        let (py, px) = (p.diff(Var::Y), p.diff(Var::X));
        let pair = ShapedPair23::from_polys(&py, &px, Var::Y).unwrap();
        let (r0, _) = pair.r0_r1();
        let critical = critical_point_exists(&p).unwrap();
        for v in [decide_thm_raiz23(&pair), decide_cor_raiz23(&pair)] {
            if v.tag == ZeroTag::CommonRealZeroExists {
                prop_assert!(critical.is_some(), "{}: {}", p, v.reason);
                prop_assert!(witness_holds(&v, &py, &px, Var::Y, &r0), "{}: {:?}", p, v);
            }
        }
    }

    #[test]
    fn shaped_22_verdicts_are_sound(p in quartic_with_y_degree(2)) {
        prop_assume!(p.depends_on(Var::Y));
        let (py, px) = (p.diff(Var::Y), p.diff(Var::X));
        let pair = ShapedPair22::from_polys(&py, &px, Var::Y).unwrap();
        let (r0, _) = pair.r0_r1();
        let critical = critical_point_exists(&p).unwrap();
        let thm = decide_thm_raiz22(&pair, &Raiz22Variant::Standard).unwrap();
        for v in [thm, decide_cor_raiz22(&pair)] {
            if v.tag == ZeroTag::CommonRealZeroExists {
                prop_assert!(critical.is_some(), "{}: {}", p, v.reason);
                prop_assert!(witness_holds(&v, &py, &px, Var::Y, &r0), "{}: {:?}", p, v);
            }
        }
    }

    #[test]
    fn witness_boxes_bracket_the_gradient(p in bpoly(4, 8)) {
        prop_assume!(!p.is_constant());
        if let Some(w) = critical_point_exists(&p).unwrap() {
            prop_assert!(w.brackets_zero_of_gradient(&p));
            prop_assert!(w.width() <= default_width());
            if let (Some(x), Some(y)) = (&w.x_exact, &w.y_exact) {
                prop_assert_eq!(p.diff(Var::X).eval(x, y), int(0));
                prop_assert_eq!(p.diff(Var::Y).eval(x, y), int(0));
            }
        }
    }

    /// A polynomial without linear terms, moved by a translation, has a
    /// critical point.
    #[test]
    fn planted_critical_points_are_found(f in bpoly(4, 8), a in small_rat(), b in small_rat()) {
        let f = BPoly::from_terms(f.terms().filter(|&(i, j, _)| i + j != 1).map(|(i, j, c)| (i, j, c.clone())));
        prop_assume!(!f.is_constant());
        let t = plansub::AffineMap::translation(-&a, -&b);
        let p = f.affine_substitute(&t);
        prop_assert!(critical_point_exists(&p).unwrap().is_some());
    }

    /// `x + g(y)` composed with an invertible affine map is a submersion.
    #[test]
    fn submersions_have_no_critical_points(g in bpoly(4, 5), t in affine_map(), c in nonzero_rat()) {
        let g = BPoly::from_terms(g.terms().filter(|&(i, _, _)| i == 0).map(|(i, j, c)| (i, j, c.clone())));
        let p = (&BPoly::monomial(c, 1, 0) + &g).affine_substitute(&t);
        prop_assert_eq!(critical_point_exists(&p).unwrap(), None);
    }
}

#[test]
fn constant_input_is_an_error() {
    assert!(critical_point_exists(&BPoly::constant(int(3))).is_err());
}

#[test]
fn shape_mismatch_is_an_error() {
    let p = BPoly::from_ints(&[(0, 3, 1)]);
    assert!(ShapedPair22::from_polys(&p, &p, Var::Y).is_err());
    assert!(ShapedPair23::from_polys(&p, &p, Var::Y).is_err());
}

/// The soundness properties above are not vacuous: random quartics do get
/// positive verdicts.
#[test]
fn shaped_procedures_fire_on_random_quartics() {
    let mut r = common::rng(7);
    let mut positives = 0;
    for _ in 0..100 {
        let p = common::bpoly(&mut r, 4, 8);
        if p.degree_in(Var::Y).map_or(true, |d| d == 0 || d > 3) {
            continue;
        }
        let (py, px) = (p.diff(Var::Y), p.diff(Var::X));
        let pair = ShapedPair23::from_polys(&py, &px, Var::Y).unwrap();
        let (r0, _) = pair.r0_r1();
        for v in [decide_thm_raiz23(&pair), decide_cor_raiz23(&pair)] {
            if v.tag == ZeroTag::CommonRealZeroExists {
                assert!(witness_holds(&v, &py, &px, Var::Y, &r0), "{p}: {v:?}");
                assert!(critical_point_exists(&p).unwrap().is_some(), "{p}");
                positives += 1;
            }
        }
    }
    assert!(positives >= 10, "only {positives} positive verdicts");
}
