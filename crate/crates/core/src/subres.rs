//! Sylvester matrices and k-subresultants.
//!
//! For `p = a_n t^n + ... + a_0` and `q = b_m t^m + ... + b_0` the Sylvester
//! matrix has `m` rows of p-coefficients shifting right, followed by `n`
//! rows of q-coefficients shifting left:
//!
//! ```text
//! a_n ... a_0
//!     a_n ... a_0
//!     b_m ... b_0
//! b_m ... b_0
//! ```
//!
//! `R_k` is the determinant left after deleting the first and last `k` rows
//! and columns; `R_0` is the resultant.

use num_traits::Zero;

use crate::bareiss::{self, Domain};
use crate::error::{Error, Result};
use crate::poly::{BPoly, Rat, UPoly, Var};

/// Sylvester matrix with entries in a ring of coefficients `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterMatrix<T> {
    pub entries: Vec<Vec<T>>,
    /// Degree of the first input in the eliminated variable.
    pub n: usize,
    /// Degree of the second input in the eliminated variable.
    pub m: usize,
}

impl<T: Domain> SylvesterMatrix<T> {
    /// Builds the matrix from coefficient lists in ascending order, taking
    /// the formal degrees `len - 1` even if a leading entry is zero.
    pub fn from_coeffs(p: &[T], q: &[T]) -> Self {
        let n = p.len().saturating_sub(1);
        let m = q.len().saturating_sub(1);
        let size = n + m;
        let mut entries = Vec::with_capacity(size);
        for r in 0..m {
            let mut row = vec![T::zero(); size];
            for (off, c) in p.iter().rev().enumerate() {
                row[r + off] = c.clone();
            }
            entries.push(row);
        }
        for t in 0..n {
            let mut row = vec![T::zero(); size];
            let start = n - 1 - t;
            for (off, c) in q.iter().rev().enumerate() {
                row[start + off] = c.clone();
            }
            entries.push(row);
        }
        SylvesterMatrix { entries, n, m }
    }

    pub fn size(&self) -> usize {
        self.n + self.m
    }

    pub fn max_k(&self) -> usize {
        self.size() / 2
    }

    /// `R_k`: the determinant without the first and last `k` rows and
    /// columns.
    pub fn subresultant(&self, k: usize) -> Result<T> {
        if k > self.max_k() {
            return Err(Error::KOutOfRange { k, max: self.max_k() });
        }
        let size = self.size();
        let trimmed: Vec<Vec<T>> = self.entries[k..size - k]
            .iter()
            .map(|row| row[k..size - k].to_vec())
            .collect();
        bareiss::det(&trimmed)
    }
}

/// Sylvester matrix of two bivariate polynomials with respect to `var`;
/// entries are polynomials in the other variable.
pub fn sylvester(p: &BPoly, q: &BPoly, var: Var) -> Result<SylvesterMatrix<UPoly>> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.depends_on(var) && !q.depends_on(var) {
        return Err(Error::BothConstantInVar);
    }
    Ok(SylvesterMatrix::from_coeffs(&p.coeffs_in(var), &q.coeffs_in(var)))
}

/// `R_k` of `p` and `q` with respect to `var`.
pub fn subresultant(p: &BPoly, q: &BPoly, var: Var, k: usize) -> Result<UPoly> {
    sylvester(p, q, var)?.subresultant(k)
}

/// The resultant `R_0` eliminating `var`.
pub fn resultant(p: &BPoly, q: &BPoly, var: Var) -> Result<UPoly> {
    subresultant(p, q, var, 0)
}

/// Resultant of two univariate polynomials (true degrees).
pub fn resultant_univariate(p: &UPoly, q: &UPoly) -> Rat {
    let s = SylvesterMatrix::from_coeffs(p.coeffs(), q.coeffs());
    s.subresultant(0).expect("k = 0 is always in range")
}

/// `(R_0, R_1)` for `y^2 + a y + b` and `y^2 + c y + d`, in closed form.
pub fn r0_r1_quad_pair(a: &UPoly, b: &UPoly, c: &UPoly, d: &UPoly) -> (UPoly, UPoly) {
    let r1 = c - a;
    let db = d - b;
    let r0 = &(-&(&db * &db)) + &(&(&(a * &db) - &(b * &r1)) * &r1);
    (r0, r1)
}

/// `(R_0, R_1)` for `y^2 + a y + b` and `y^3 + c y^2 + d y + e`, in closed
/// form.
pub fn r0_r1_quad_cubic(
    a: &UPoly,
    b: &UPoly,
    c: &UPoly,
    d: &UPoly,
    e: &UPoly,
) -> (UPoly, UPoly) {
    let r1 = &(&(&(a * a) - &(a * c)) - b) + d;
    let s = &(&(a * b) - &(b * c)) + e;
    let r0 = &(-&(&s * &s)) + &(&(&(a * &s) - &(b * &r1)) * &r1);
    (r0, r1)
}

/// Number of common complex roots counted with multiplicity: the first `k`
/// with `R_k != 0`.
pub fn common_root_count(p: &UPoly, q: &UPoly) -> Result<usize> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let s = SylvesterMatrix::from_coeffs(p.coeffs(), q.coeffs());
    for k in 0..=s.max_k() {
        if !Zero::is_zero(&s.subresultant(k)?) {
            return Ok(k);
        }
    }
    unreachable!("R_min(n, m) is a product of leading coefficients")
}
