//! Refutation certificates, exponents and truncated integrals over the
//! half-Reeb regions.

mod common;

use common::strategies::{bpoly, small_rat};
use plansub::classify::Family;
use plansub::hrc::{
    divergence_verdict, jacobian_det, refute_pair, tau, truncated_integral, Divergence, Refutation, L_theta,
};
use plansub::positivity::{bruna_coefficients_of, bruna_polynomial};
use plansub::{int, rat, BPoly};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::One),
        Just(Family::Two(int(0))),
        Just(Family::Two(int(1))),
        Just(Family::Three),
        Just(Family::Four(int(0))),
        Just(Family::Four(int(1))),
        Just(Family::Four(rat(-3, 2))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn refutations_verify(f in family(), q in bpoly(5, 8)) {
        let cert = refute_pair(&f, &q).unwrap();
        prop_assert!(cert.verify(&f, &q), "{} with q = {}: {:?}", f, q, cert.tag);
        prop_assert!(!cert.trace.is_empty());
        if let Refutation::PointWitness { x, y, value } = &cert.tag {
            prop_assert_eq!(jacobian_det(&f.polynomial(), &q).eval(x, y), value.clone());
        }
    }

    #[test]
    fn jacobian_is_bilinear_and_alternating(p in bpoly(3, 5), q in bpoly(3, 5), r in bpoly(3, 5), c in small_rat()) {
        prop_assert!(jacobian_det(&p, &p).is_zero());
        prop_assert_eq!(jacobian_det(&p, &q), -jacobian_det(&q, &p));
        prop_assert_eq!(
            jacobian_det(&p, &(&q + &r.scale(&c))),
            &jacobian_det(&p, &q) + &jacobian_det(&p, &r).scale(&c)
        );
    }

    #[test]
    fn tau_of_single_terms(i in 0u32..6, j in 0u32..6, f in family()) {
        let (ii, jj) = (i as i64, j as i64);
        let expected = match f {
            Family::One => jj - ii - 1,
            Family::Two(_) => jj - 2 * ii - 2,
            Family::Three | Family::Four(_) => ii - 2 * jj - 3,
        };
        prop_assert_eq!(tau(&f, &BPoly::monomial(int(1), i, j)).unwrap(), expected);
    }

    #[test]
    fn l_theta_is_minus_the_sign_alternation_polynomial(q in bpoly(7, 10)) {
        prop_assert_eq!(L_theta(&q), -bruna_polynomial(&bruna_coefficients_of(&q)));
    }

    /// For positive `h` the truncated integral grows as the cutoff shrinks.
    #[test]
    fn truncated_integral_is_monotone(f in family(), c in 1i64..=5, k in 1u32..=4) {
        let h = BPoly::from_terms([(0, 0, int(c)), (2 * (k % 2), 2 * (k / 2), int(1))]);
        let eps = [rat(1, 2), rat(1, 8), rat(1, 64), rat(1, 1024)];
        let vals: Vec<f64> = eps.iter().map(|e| truncated_integral(&f, &h, e).unwrap()).collect();
        for w in vals.windows(2) {
            prop_assert!(w[0] > 0.0 && w[1] >= w[0], "{} h = {}: {:?}", f, h, vals);
        }
    }
}

#[test]
fn divergence_follows_tau() {
    let h = BPoly::from_ints(&[(0, 0, 1), (3, 0, 1)]);
    assert_eq!(divergence_verdict(&Family::Three, &h).unwrap(), Divergence::Diverges(0));
    assert_eq!(divergence_verdict(&Family::Three, &BPoly::one()).unwrap(), Divergence::FiniteOrUnknown(-3));
    // Families 1 and 2 need h(0, 0) != 0.
    assert!(divergence_verdict(&Family::One, &BPoly::from_ints(&[(1, 0, 1)])).is_err());
}

#[test]
fn integral_edge_cases() {
    let h = BPoly::one();
    assert!(truncated_integral(&Family::Three, &h, &int(0)).is_err());
    assert!(truncated_integral(&Family::Three, &h, &int(-1)).is_err());
    assert_eq!(truncated_integral(&Family::Three, &h, &int(1)).unwrap(), 0.0);
    assert_eq!(truncated_integral(&Family::Three, &BPoly::zero(), &rat(1, 2)).unwrap(), 0.0);
}
