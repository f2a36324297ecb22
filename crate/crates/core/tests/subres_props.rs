//! Resultants and subresultants against root-based identities.

mod common;

use common::strategies::{bpoly, small_rat, upoly};
use plansub::subres::{common_root_count, r0_r1_quad_pair, resultant, resultant_univariate, subresultant, sylvester};
use plansub::{int, BPoly, UPoly, Var};
use num_traits::Signed;
use proptest::collection::vec;
use proptest::prelude::*;

proptest! {
    /// `|Res(p, q)| = |lc(p)|^deg q * prod |q(r)|` over the roots `r` of `p`.
    #[test]
    fn resultant_from_roots(rs in vec(small_rat(), 1..=4), c in small_rat(), q in upoly(4)) {
        prop_assume!(c != int(0) && !q.is_zero());
        let p = &UPoly::constant(c.clone()) * &UPoly::from_roots(&rs);
        let m = q.degree().unwrap() as u32;
        let expected = rs.iter().fold(num_traits::pow(c.abs(), m as usize), |acc, r| acc * q.eval(r).abs());
        prop_assert_eq!(resultant_univariate(&p, &q).abs(), expected);
    }

    #[test]
    fn resultant_is_multiplicative(f in upoly(3), g in upoly(3), h in upoly(3)) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let lhs = resultant_univariate(&(&f * &g), &h).abs();
        let rhs = (resultant_univariate(&f, &h) * resultant_univariate(&g, &h)).abs();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn common_root_count_is_gcd_degree(a in upoly(3), b in upoly(3), g in upoly(3)) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !g.is_zero());
        let (p, q) = (&a * &g, &b * &g);
        prop_assert_eq!(common_root_count(&p, &q).unwrap(), p.gcd(&q).degree().unwrap());
    }

    #[test]
    fn resultant_commutes_with_specialization(p in bpoly(3, 6), q in bpoly(3, 6), x0 in small_rat()) {
        prop_assume!(p.depends_on(Var::Y) || q.depends_on(Var::Y));
        prop_assume!(!p.is_zero() && !q.is_zero());
        let r = resultant(&p, &q, Var::Y).unwrap();
        let (ps, qs) = (p.specialize(Var::X, &x0), q.specialize(Var::X, &x0));
        // Specialization keeps the formal degrees only when the leading
        // coefficients survive.
        prop_assume!(ps.degree().map(|d| d as u32) == p.degree_in(Var::Y));
        prop_assume!(qs.degree().map(|d| d as u32) == q.degree_in(Var::Y));
        prop_assert_eq!(r.eval(&x0), resultant_univariate(&ps, &qs));
    }

    #[test]
    fn quadratic_closed_form(a in upoly(2), b in upoly(2), c in upoly(2), d in upoly(2)) {
        let y = |k: u32| BPoly::monomial(int(1), 0, k);
        let lift = |u: &UPoly| BPoly::from_upoly(Var::X, u);
        let p = &(&y(2) + &(&lift(&a) * &y(1))) + &lift(&b);
        let q = &(&y(2) + &(&lift(&c) * &y(1))) + &lift(&d);
        let (r0, r1) = r0_r1_quad_pair(&a, &b, &c, &d);
        prop_assert_eq!(subresultant(&p, &q, Var::Y, 0).unwrap(), r0);
        prop_assert_eq!(subresultant(&p, &q, Var::Y, 1).unwrap(), r1);
    }

    #[test]
    fn sylvester_shape(p in bpoly(4, 6), q in bpoly(4, 6)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assume!(p.depends_on(Var::Y) || q.depends_on(Var::Y));
        let s = sylvester(&p, &q, Var::Y).unwrap();
        let n = p.degree_in(Var::Y).unwrap() as usize;
        let m = q.degree_in(Var::Y).unwrap() as usize;
        prop_assert_eq!(s.size(), n + m);
        prop_assert_eq!(s.entries.len(), n + m);
        prop_assert!(s.subresultant(s.max_k() + 1).is_err());
    }
}

#[test]
fn both_constant_in_variable_is_an_error() {
    let p = BPoly::from_ints(&[(1, 0, 1)]);
    assert!(resultant(&p, &p, Var::Y).is_err());
    assert!(resultant(&BPoly::zero(), &p, Var::X).is_err());
}

#[test]
fn zero_input_to_root_count_is_an_error() {
    assert!(common_root_count(&UPoly::zero(), &UPoly::one()).is_err());
}
