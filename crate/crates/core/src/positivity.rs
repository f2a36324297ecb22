//! The sign-alternation lemma for `L(θ) = Σ b_j (2(j+1)θ + 2j+1) θ^j` and
//! the Hankel matrices behind its proof.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bareiss;
use crate::error::{Error, Result};
use crate::poly::{int, BPoly, Rat, UPoly};
use crate::realroots::gap_samples;

/// `α_i^k = (-2)^(i+1) Π_{l=0}^{i} (2k - l) / (4k - 2l - 1)`, defined for
/// `k >= 1` and `-1 <= i <= 2k - 1` (the empty product gives `α_{-1}^k = 1`).
pub fn alpha(i: i64, k: i64) -> Result<Rat> {
    if k < 1 || i < -1 || i > 2 * k - 1 {
        return Err(Error::DenominatorZero { i, k });
    }
    let mut acc = Rat::one();
    for l in 0..=i {
        acc *= Rat::new(BigInt::from(-2 * (2 * k - l)), BigInt::from(4 * k - 2 * l - 1));
    }
    Ok(acc)
}

/// The `(j+1) × (j+1)` Hankel matrix with entry `(r, s)` (1-based) equal to
/// `α_{2j-r-s+1}^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelMatrix {
    pub j: usize,
    pub k: usize,
    pub entries: Vec<Vec<Rat>>,
}

pub fn hankel(j: usize, k: usize) -> Result<HankelMatrix> {
    if j < 1 || j > k {
        return Err(Error::BadIndices { j, k });
    }
    let n = j + 1;
    let entries = (1..=n)
        .map(|r| {
            (1..=n)
                .map(|s| alpha(2 * j as i64 - r as i64 - s as i64 + 1, k as i64))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HankelMatrix { j, k, entries })
}

pub fn det_exact(m: &[Vec<Rat>]) -> Result<Rat> {
    bareiss::det(m)
}

/// Leading principal minors of sizes `1..=n`.
pub fn leading_minors(m: &[Vec<Rat>]) -> Result<Vec<Rat>> {
    bareiss::leading_minors(m)
}

/// `Σ b_j (2(j+1)θ + 2j+1) θ^j`.
pub fn bruna_polynomial(b: &[Rat]) -> UPoly {
    b.iter().enumerate().fold(UPoly::zero(), |acc, (j, bj)| {
        let j = j as i64;
        let factor = UPoly::from_ints(&[2 * j + 1, 2 * (j + 1)]);
        &acc + &(&factor * &UPoly::monomial(bj.clone(), j as usize))
    })
}

/// The coefficients `c_j = b_{2j+1, j}` of the terms `x^(2j+1) y^j` of `q`.
/// With them, `hrc::L_theta(q) = -bruna_polynomial(c)`.
pub fn bruna_coefficients_of(q: &BPoly) -> Vec<Rat> {
    let top = q.terms().filter(|&(i, j, _)| i == 2 * j + 1).map(|(_, j, _)| j).max();
    match top {
        None => Vec::new(),
        Some(n) => (0..=n).map(|j| q.coeff(2 * j + 1, j)).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BrunaOutcome {
    IsZero,
    /// `L(theta1) < 0 < L(theta2)`.
    Witnesses { theta1: Rat, theta2: Rat },
}

/// Points where `L` is negative and positive, or `IsZero` when `L = 0`.
pub fn bruna_witnesses(b: &[Rat]) -> Result<BrunaOutcome> {
    let l = bruna_polynomial(b);
    if l.is_zero() {
        return Ok(BrunaOutcome::IsZero);
    }
    let samples = gap_samples(&l)?;
    let first = |pred: fn(&Rat) -> bool| samples.iter().find(|t| pred(&l.eval(t))).cloned();
    let (Some(theta1), Some(theta2)) = (first(Signed::is_negative), first(Signed::is_positive))
    else {
        return Err(Error::LemmaViolation(format!("{l} does not change sign")));
    };
    Ok(BrunaOutcome::Witnesses { theta1, theta2 })
}

/// Coefficient vectors of `g` and `h` with `L = g^2 + h^2`, both of length
/// `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquaresInput {
    pub a: Vec<Rat>,
    pub c: Vec<Rat>,
}

impl SquaresInput {
    pub fn new(a: Vec<Rat>, c: Vec<Rat>) -> Result<Self> {
        if a.len() != c.len() || a.len() < 2 {
            return Err(Error::BadLength { a: a.len(), c: c.len() });
        }
        Ok(SquaresInput { a, c })
    }

    pub fn k(&self) -> usize {
        self.a.len() - 1
    }

    /// `Σ_{r+s=j} a_r a_s + c_r c_s`, the coefficient of `θ^j` in `g^2 + h^2`.
    pub fn square_coeff(&self, j: usize) -> Rat {
        let n = self.a.len();
        (0..=j)
            .filter(|&r| r < n && j - r < n)
            .map(|r| &self.a[r] * &self.a[j - r] + &self.c[r] * &self.c[j - r])
            .sum()
    }

    fn check(&self) -> Result<()> {
        if self.a.len() != self.c.len() || self.a.len() < 2 {
            return Err(Error::BadLength { a: self.a.len(), c: self.c.len() });
        }
        Ok(())
    }
}

/// `b_0, ..., b_{2k-1}` from the closed form
/// `b_j = 1/(j+1) Σ_{l=0}^{j} (-2)^l Π_{i=0}^{l} (j-i+1)/(2(j-i)+1) S_{j-l}`,
/// where `S_m` is [`SquaresInput::square_coeff`].
pub fn b_from_squares(input: &SquaresInput) -> Result<Vec<Rat>> {
    input.check()?;
    let k = input.k();
    let s: Vec<Rat> = (0..2 * k).map(|m| input.square_coeff(m)).collect();
    Ok((0..2 * k)
        .map(|j| {
            let mut sum = Rat::zero();
            let mut weight = Rat::one();
            for l in 0..=j {
                let i = l as i64;
                let jj = j as i64;
                weight *= Rat::new(BigInt::from(jj - i + 1), BigInt::from(2 * (jj - i) + 1));
                let sign = if l % 2 == 0 { Rat::one() } else { -Rat::one() };
                let pow2 = Rat::from_integer(BigInt::one() << l);
                sum += sign * pow2 * &weight * &s[j - l];
            }
            sum / int(j as i64 + 1)
        })
        .collect())
}

/// `K(a, c) = -4k b_{2k-1} + a_k^2 + c_k^2`.
#[allow(non_snake_case)]
pub fn K_form(input: &SquaresInput) -> Result<Rat> {
    let b = b_from_squares(input)?;
    let k = input.k();
    Ok(-int(4 * k as i64) * &b[2 * k - 1] + &input.a[k] * &input.a[k] + &input.c[k] * &input.c[k])
}

/// Half the Hessian of `K` in the `a`-variables, by exact second
/// differences (with `c = 0`).
pub fn half_hessian_of_k(k: usize) -> Result<Vec<Vec<Rat>>> {
    let n = k + 1;
    let zero = vec![Rat::zero(); n];
    let eval = |idx: &[usize]| {
        let mut a = zero.clone();
        for &i in idx {
            a[i] += Rat::one();
        }
        K_form(&SquaresInput::new(a, zero.clone())?)
    };
    let k0 = eval(&[])?;
    let singles = (0..n).map(|r| eval(&[r])).collect::<Result<Vec<_>>>()?;
    (0..n)
        .map(|r| {
            (0..n)
                .map(|s| Ok((eval(&[r, s])? - &singles[r] - &singles[s] + &k0) / int(2)))
                .collect()
        })
        .collect()
}
