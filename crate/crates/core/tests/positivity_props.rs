//! Sign alternation of `L`, the squares recurrence, the form `K` and the
//! Hankel matrices.

mod common;

use common::strategies::small_rat;
use num_traits::{Signed, Zero};
use plansub::positivity::{
    alpha, b_from_squares, bruna_polynomial, bruna_witnesses, det_exact, half_hessian_of_k, hankel,
    leading_minors, BrunaOutcome, K_form, SquaresInput,
};
use plansub::{int, Rat};
use proptest::collection::vec;
use proptest::prelude::*;

fn quadratic_form(h: &[Vec<Rat>], v: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (r, row) in h.iter().enumerate() {
        for (s, e) in row.iter().enumerate() {
            acc += e * &v[r] * &v[s];
        }
    }
    acc
}

fn squares(max_k: usize) -> impl Strategy<Value = SquaresInput> {
    (1..=max_k).prop_flat_map(|k| {
        (vec(small_rat(), k + 1), vec(small_rat(), k + 1))
            .prop_map(|(a, c)| SquaresInput::new(a, c).unwrap())
    })
}

proptest! {
    #[test]
    fn l_changes_sign(b in vec(small_rat(), 1..=8), theta in small_rat()) {
        let l = bruna_polynomial(&b);
        // Direct evaluation of the defining sum.
        let direct: Rat = b.iter().enumerate().map(|(j, bj)| {
            let j = j as i64;
            bj * (int(2 * (j + 1)) * &theta + int(2 * j + 1)) * num_traits::pow(theta.clone(), j as usize)
        }).sum();
        prop_assert_eq!(l.eval(&theta), direct);
        match bruna_witnesses(&b).unwrap() {
            BrunaOutcome::IsZero => prop_assert!(b.iter().all(Zero::is_zero)),
            BrunaOutcome::Witnesses { theta1, theta2 } => {
                prop_assert!(l.eval(&theta1).is_negative());
                prop_assert!(l.eval(&theta2).is_positive());
            }
        }
    }

    #[test]
    fn squares_recurrence(input in squares(5)) {
        let b = b_from_squares(&input).unwrap();
        let k = input.k();
        prop_assert_eq!(b.len(), 2 * k);
        prop_assert_eq!(&b[0], &input.square_coeff(0));
        for j in 1..2 * k {
            let lhs = int(2 * j as i64) * &b[j - 1] + int(2 * j as i64 + 1) * &b[j];
            prop_assert_eq!(lhs, input.square_coeff(j));
        }
    }

    /// `K` is the quadratic form of its half-Hessian in `a` and in `c`.
    #[test]
    fn k_is_its_hessian_form(input in squares(4)) {
        let h = half_hessian_of_k(input.k()).unwrap();
        let expected = quadratic_form(&h, &input.a) + quadratic_form(&h, &input.c);
        prop_assert_eq!(K_form(&input).unwrap(), expected);
    }

    #[test]
    fn hankel_matrices_are_symmetric(k in 1usize..=6, j_off in 0usize..6) {
        let j = 1 + j_off % k;
        let h = hankel(j, k).unwrap();
        prop_assert_eq!(h.entries.len(), j + 1);
        for r in 0..=j {
            for s in 0..=j {
                prop_assert_eq!(&h.entries[r][s], &h.entries[s][r]);
                prop_assert_eq!(&h.entries[r][s], &alpha(2 * j as i64 - r as i64 - s as i64 - 1, k as i64).unwrap());
            }
        }
        let minors = leading_minors(&h.entries).unwrap();
        prop_assert_eq!(minors.last().unwrap(), &det_exact(&h.entries).unwrap());
    }
}

#[test]
fn full_hankel_is_positive_definite() {
    for k in 1..=8 {
        let h = hankel(k, k).unwrap();
        for m in leading_minors(&h.entries).unwrap() {
            assert!(m.is_positive(), "k = {k}");
        }
    }
}

#[test]
fn input_validation() {
    assert!(SquaresInput::new(vec![int(1)], vec![int(1)]).is_err());
    assert!(SquaresInput::new(vec![int(1), int(2)], vec![int(1)]).is_err());
    assert!(hankel(0, 3).is_err());
    assert!(hankel(4, 3).is_err());
    assert!(alpha(-2, 1).is_err());
    assert!(alpha(2, 1).is_err());
    assert!(alpha(0, 0).is_err());
}
