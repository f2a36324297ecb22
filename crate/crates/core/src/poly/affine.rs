use num_traits::{One, Zero};

use super::{BPoly, Rat};
use crate::error::{Error, Result};

/// Invertible affine map `T(x, y) = (a x + b y + e, c x + d y + f)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    a: Rat,
    b: Rat,
    c: Rat,
    d: Rat,
    e: Rat,
    f: Rat,
}

impl AffineMap {
    /// Fails with [`Error::SingularMap`] when `ad - bc = 0`.
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat, e: Rat, f: Rat) -> Result<Self> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(Error::SingularMap);
        }
        Ok(AffineMap { a, b, c, d, e, f })
    }

    /// Linear map with matrix `[[a, b], [c, d]]`.
    pub fn linear(a: Rat, b: Rat, c: Rat, d: Rat) -> Result<Self> {
        AffineMap::new(a, b, c, d, Rat::zero(), Rat::zero())
    }

    pub fn identity() -> Self {
        AffineMap::diagonal(Rat::one(), Rat::one())
    }

    /// `(x, y) -> (x + e, y + f)`.
    pub fn translation(e: Rat, f: Rat) -> Self {
        AffineMap { a: Rat::one(), b: Rat::zero(), c: Rat::zero(), d: Rat::one(), e, f }
    }

    /// `(x, y) -> (y, x)`.
    pub fn swap() -> Self {
        AffineMap {
            a: Rat::zero(),
            b: Rat::one(),
            c: Rat::one(),
            d: Rat::zero(),
            e: Rat::zero(),
            f: Rat::zero(),
        }
    }

    /// `(x, y) -> (s x, t y)`. Panics when `s` or `t` is zero.
    pub fn diagonal(s: Rat, t: Rat) -> Self {
        assert!(!s.is_zero() && !t.is_zero(), "diagonal map needs nonzero scales");
        AffineMap { a: s, b: Rat::zero(), c: Rat::zero(), d: t, e: Rat::zero(), f: Rat::zero() }
    }

    /// `[a, b, c, d, e, f]`.
    pub fn entries(&self) -> [&Rat; 6] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f]
    }

    pub fn det(&self) -> Rat {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, x: &Rat, y: &Rat) -> (Rat, Rat) {
        (
            &self.a * x + &self.b * y + &self.e,
            &self.c * x + &self.d * y + &self.f,
        )
    }

    pub fn inverse(&self) -> AffineMap {
        let det = self.det();
        let a = &self.d / &det;
        let b = -&self.b / &det;
        let c = -&self.c / &det;
        let d = &self.a / &det;
        let e = -(&a * &self.e + &b * &self.f);
        let f = -(&c * &self.e + &d * &self.f);
        AffineMap { a, b, c, d, e, f }
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let (e, f) = self.apply(&other.e, &other.f);
        AffineMap {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
            e,
            f,
        }
    }
}

/// `p = M * (q ∘ T^{-1}) + N` relating a polynomial to a model `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineEquivalence {
    pub map: AffineMap,
    pub scale: Rat,
    pub shift: Rat,
}

impl AffineEquivalence {
    /// Fails with [`Error::PreconditionFailed`] when `scale` is zero.
    pub fn new(map: AffineMap, scale: Rat, shift: Rat) -> Result<Self> {
        if scale.is_zero() {
            return Err(Error::PreconditionFailed("equivalence scale must be nonzero".into()));
        }
        Ok(AffineEquivalence { map, scale, shift })
    }

    pub fn identity() -> Self {
        AffineEquivalence { map: AffineMap::identity(), scale: Rat::one(), shift: Rat::zero() }
    }

    /// `M * (q ∘ T^{-1}) + N`.
    pub fn apply_to(&self, q: &BPoly) -> BPoly {
        &q.affine_substitute(&self.map.inverse()).scale(&self.scale) + &BPoly::constant(self.shift.clone())
    }
}
