use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::upoly::forward_owned;
use super::{AffineMap, Rat, UPoly};

/// One of the two indeterminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sparse bivariate polynomial: `(i, j) -> c` stands for `c x^i y^j`.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BPoly {
    pub fn zero() -> Self {
        BPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        BPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        BPoly::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        BPoly::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        BPoly::monomial(Rat::one(), 0, 1)
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => BPoly::x(),
            Var::Y => BPoly::y(),
        }
    }

    pub fn monomial(c: Rat, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BPoly { terms }
    }

    /// Builds from `(i, j, c)` triples, summing repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, Rat)>>(terms: I) -> Self {
        let mut p = BPoly::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Integer-coefficient shorthand for tests and fixed data.
    pub fn from_ints(terms: &[(u32, u32, i64)]) -> Self {
        BPoly::from_terms(
            terms
                .iter()
                .map(|&(i, j, c)| (i, j, Rat::from_integer(BigInt::from(c)))),
        )
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Terms in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rat)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    /// Constant term `p(0, 0)`.
    pub fn constant_term(&self) -> Rat {
        self.coeff(0, 0)
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| pick(v, i, j)).max()
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.degree_in(v).is_some_and(|d| d > 0)
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        // Horner in y over Horner-in-x coefficients.
        self.coeffs_in(Var::Y)
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * y + c.eval(x))
    }

    pub fn diff(&self, v: Var) -> BPoly {
        BPoly::from_terms(self.terms().filter_map(|(i, j, c)| {
            let e = pick(v, i, j);
            (e > 0).then(|| {
                let c = c * Rat::from_integer(BigInt::from(e));
                match v {
                    Var::X => (i - 1, j, c),
                    Var::Y => (i, j - 1, c),
                }
            })
        }))
    }

    pub fn scale(&self, c: &Rat) -> BPoly {
        if c.is_zero() {
            return BPoly::zero();
        }
        BPoly {
            terms: self.terms.iter().map(|(&k, a)| (k, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BPoly {
        let mut acc = BPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(T(x, y))`.
    pub fn affine_substitute(&self, t: &AffineMap) -> BPoly {
        let [a, b, c, d, e, f] = t.entries();
        let xs = BPoly::from_terms([(1, 0, a.clone()), (0, 1, b.clone()), (0, 0, e.clone())]);
        let ys = BPoly::from_terms([(1, 0, c.clone()), (0, 1, d.clone()), (0, 0, f.clone())]);
        self.substitute(&xs, &ys)
    }

    /// `p(xs, ys)` for polynomial substitutions.
    pub fn substitute(&self, xs: &BPoly, ys: &BPoly) -> BPoly {
        let dx = self.degree_in(Var::X).unwrap_or(0) as usize;
        let dy = self.degree_in(Var::Y).unwrap_or(0) as usize;
        let xp = powers(xs, dx);
        let yp = powers(ys, dy);
        let mut out = BPoly::zero();
        for (i, j, c) in self.terms() {
            let t = (&xp[i as usize] * &yp[j as usize]).scale(c);
            out = &out + &t;
        }
        out
    }

    /// Coefficients as a polynomial in `v`: `p = sum_k out[k] * v^k`, where
    /// each `out[k]` is a polynomial in the other variable.
    pub fn coeffs_in(&self, v: Var) -> Vec<UPoly> {
        let Some(d) = self.degree_in(v) else {
            return Vec::new();
        };
        let mut dense: Vec<Vec<Rat>> = vec![Vec::new(); d as usize + 1];
        for (i, j, c) in self.terms() {
            let (k, e) = match v {
                Var::X => (i, j),
                Var::Y => (j, i),
            };
            let row = &mut dense[k as usize];
            if row.len() <= e as usize {
                row.resize(e as usize + 1, Rat::zero());
            }
            row[e as usize] = c.clone();
        }
        dense.into_iter().map(UPoly::from_coeffs).collect()
    }

    /// Inverse of [`BPoly::coeffs_in`].
    pub fn from_coeffs_in(v: Var, coeffs: &[UPoly]) -> BPoly {
        BPoly::from_terms(coeffs.iter().enumerate().flat_map(|(k, u)| {
            u.coeffs().iter().enumerate().map(move |(e, c)| {
                let (k, e) = (k as u32, e as u32);
                match v {
                    Var::X => (k, e, c.clone()),
                    Var::Y => (e, k, c.clone()),
                }
            })
        }))
    }

    /// Embeds a univariate polynomial as a polynomial in `v`.
    pub fn from_upoly(v: Var, u: &UPoly) -> BPoly {
        BPoly::from_terms(u.coeffs().iter().enumerate().map(|(k, c)| match v {
            Var::X => (k as u32, 0, c.clone()),
            Var::Y => (0, k as u32, c.clone()),
        }))
    }

    /// The terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> BPoly {
        BPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j == d)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    /// `p(y, x)`.
    pub fn swap_vars(&self) -> BPoly {
        BPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Fixes `v = value`, leaving a polynomial in the other variable.
    pub fn specialize(&self, v: Var, value: &Rat) -> UPoly {
        let coeffs = self.coeffs_in(v.other());
        UPoly::from_coeffs(
            coeffs
                .iter()
                .map(|u| u.eval(value))
                .collect(),
        )
    }

    /// The polynomial as a univariate one in `v`, when it does not depend on
    /// the other variable.
    pub fn as_univariate(&self, v: Var) -> Option<UPoly> {
        if self.depends_on(v.other()) {
            return None;
        }
        Some(self.specialize(v.other(), &Rat::zero()))
    }

    /// Quotient when `d` divides `self` exactly over the rationals.
    pub fn exact_div(&self, d: &BPoly) -> Option<BPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(BPoly::zero());
        }
        // Work in Q[x][y]; leading coefficients in y must divide exactly.
        let dc = d.coeffs_in(Var::Y);
        let dn = dc.len() - 1;
        let mut rem = self.clone();
        let mut quot = BPoly::zero();
        while !rem.is_zero() {
            let rc = rem.coeffs_in(Var::Y);
            let rn = rc.len() - 1;
            if rn < dn {
                return None;
            }
            let q = rc[rn].exact_div(&dc[dn])?;
            let term = &BPoly::from_upoly(Var::X, &q) * &BPoly::monomial(Rat::one(), 0, (rn - dn) as u32);
            rem = &rem - &(&term * d);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// Greatest common divisor over the rationals, normalized so that its
    /// leading term (largest `(j, i)`) has coefficient one.
    pub fn gcd(&self, other: &BPoly) -> BPoly {
        if self.is_zero() {
            return other.normalize_lead();
        }
        if other.is_zero() {
            return self.normalize_lead();
        }
        let (ca, pa) = content_y(self);
        let (cb, pb) = content_y(other);
        let c = ca.gcd(&cb);
        let (mut a, mut b) = (pa, pb);
        if a.degree_in(Var::Y) < b.degree_in(Var::Y) {
            std::mem::swap(&mut a, &mut b);
        }
        while b.depends_on(Var::Y) {
            let r = pseudo_rem_y(&a, &b);
            a = b;
            b = if r.is_zero() { r } else { content_y(&r).1 };
            if b.is_zero() {
                break;
            }
        }
        let g = if b.is_zero() { a } else { BPoly::one() };
        let g = content_y(&g).1;
        (&g * &BPoly::from_upoly(Var::X, &c)).normalize_lead()
    }

    /// Scales so the term with the largest `(j, i)` has coefficient one.
    pub fn normalize_lead(&self) -> BPoly {
        match self.terms.iter().max_by_key(|(&(i, j), _)| (j, i)) {
            None => BPoly::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }
}

fn pick(v: Var, i: u32, j: u32) -> u32 {
    match v {
        Var::X => i,
        Var::Y => j,
    }
}

fn powers(p: &BPoly, n: usize) -> Vec<BPoly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BPoly::one());
    for k in 0..n {
        let next = &out[k] * p;
        out.push(next);
    }
    out
}

/// Content in `Q[x]` of `p` viewed in `Q[x][y]`, and the primitive part.
fn content_y(p: &BPoly) -> (UPoly, BPoly) {
    let coeffs = p.coeffs_in(Var::Y);
    let c = coeffs.iter().fold(UPoly::zero(), |g, u| g.gcd(u));
    if c.is_zero() {
        return (UPoly::zero(), BPoly::zero());
    }
    let prim: Vec<UPoly> = coeffs
        .iter()
        .map(|u| u.exact_div(&c).expect("content divides"))
        .collect();
    (c, BPoly::from_coeffs_in(Var::Y, &prim))
}

/// Pseudo-remainder of `a` by `b` in `y`.
fn pseudo_rem_y(a: &BPoly, b: &BPoly) -> BPoly {
    let bc = b.coeffs_in(Var::Y);
    let bn = bc.len() - 1;
    let blead = BPoly::from_upoly(Var::X, &bc[bn]);
    let mut r = a.clone();
    while let Some(rn) = r.degree_in(Var::Y) {
        let rn = rn as usize;
        if rn < bn {
            break;
        }
        let rlead = BPoly::from_upoly(Var::X, &r.coeffs_in(Var::Y)[rn]);
        let shift = BPoly::monomial(Rat::one(), 0, (rn - bn) as u32);
        r = &(&r * &blead) - &(&(&rlead * &shift) * b);
    }
    r
}

impl fmt::Display for BPoly {
    /// Terms by total degree, then `x` exponent, both descending. The output
    /// is accepted by the command-line parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(i, j)];
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() || (i == 0 && j == 0) {
                parts.push(a.to_string());
            }
            for (name, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &BPoly {
    type Output = BPoly;
    fn add(self, rhs: &BPoly) -> BPoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BPoly {
    type Output = BPoly;
    fn sub(self, rhs: &BPoly) -> BPoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Neg for &BPoly {
    type Output = BPoly;
    fn neg(self) -> BPoly {
        BPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &BPoly {
    type Output = BPoly;
    fn mul(self, rhs: &BPoly) -> BPoly {
        let mut out = BPoly::zero();
        for (i, j, a) in self.terms() {
            for (k, l, b) in rhs.terms() {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

forward_owned!(BPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for BPoly {
    type Output = BPoly;
    fn neg(self) -> BPoly {
        -&self
    }
}
