//! Exact rational scalars and polynomial arithmetic in one and two variables.
//!
//! [`UPoly`] is dense (Sturm chains and resultants fill in every coefficient),
//! [`BPoly`] is a sparse map from exponent pairs to coefficients. Both are kept
//! normalized at all times, so structural equality is polynomial equality.

mod affine;
mod bpoly;
mod interval;
mod upoly;

pub use affine::{AffineEquivalence, AffineMap};
pub use bpoly::{BPoly, Var};
pub use interval::RatInterval;
pub use upoly::UPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational number. `BigRational` keeps the fraction
/// reduced with a positive denominator.
pub type Rat = BigRational;

/// `n / d` as an exact rational. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rat) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

/// Smallest `m / 2^bits` that is `>= r`.
pub(crate) fn round_up_dyadic(r: &Rat, bits: u32) -> Rat {
    let scale = BigInt::from(1u8) << bits;
    let scaled = r * Rat::from_integer(scale.clone());
    Rat::new(scaled.ceil().to_integer(), scale)
}
