//! Fraction-free (Bareiss) determinants over integral domains.
//!
//! Every intermediate entry is itself a minor of the input, so divisions are
//! exact and nothing leaves the ring. The same routine serves rational
//! matrices and matrices of univariate polynomials (Sylvester matrices).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Rat, UPoly};

/// The ring operations the elimination needs.
pub trait Domain: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / d`, where `d` is known to divide `self`.
    fn div_exact(&self, d: &Self) -> Self;
}

impl Domain for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl Domain for UPoly {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn one() -> Self {
        UPoly::one()
    }
    fn is_zero(&self) -> bool {
        UPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Self {
        self.exact_div(d).expect("Bareiss step divides exactly")
    }
}

/// Determinant of a square matrix given as rows. The empty matrix has
/// determinant one.
pub fn det<T: Domain>(rows: &[Vec<T>]) -> Result<T> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(T::zero());
            };
            m.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let d = if n == 0 { T::one() } else { m[n - 1][n - 1].clone() };
    Ok(if sign_flip { d.neg() } else { d })
}

/// Leading principal minors of sizes `1..=n`.
pub fn leading_minors<T: Domain>(rows: &[Vec<T>]) -> Result<Vec<T>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    (1..=n)
        .map(|s| {
            let sub: Vec<Vec<T>> = rows[..s].iter().map(|r| r[..s].to_vec()).collect();
            det(&sub)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det(&m(&[&[2, 1], &[1, 3]])).unwrap(), int(5));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])).unwrap(), int(-1));
        assert_eq!(det(&m(&[&[1, 2], &[1, 2]])).unwrap(), int(0));
        assert_eq!(det::<Rat>(&[]).unwrap(), int(1));
        let h = vec![vec![rat(8, 3), rat(-4, 3)], vec![rat(-4, 3), int(1)]];
        assert_eq!(det(&h).unwrap(), rat(8, 9));
    }

    #[test]
    fn pivoting_matches_cofactor_expansion() {
        let a = m(&[&[0, 2, 3], &[4, 0, 6], &[7, 8, 0]]);
        // 0*(0-48) - 2*(0-42) + 3*(32-0) = 84 + 96
        assert_eq!(det(&a).unwrap(), int(180));
    }

    #[test]
    fn polynomial_entries() {
        let t = UPoly::var();
        let one = UPoly::one();
        let rows = vec![vec![t.clone(), one.clone()], vec![one.clone(), t.clone()]];
        assert_eq!(det(&rows).unwrap(), UPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn non_square_is_an_error() {
        let rows = vec![vec![int(1), int(2)]];
        assert_eq!(det(&rows), Err(Error::NotSquare));
    }
}
