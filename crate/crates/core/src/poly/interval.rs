use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::{BPoly, Rat, Sign, UPoly};

/// Closed rational interval `[lo, hi]` with outward-exact arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    /// Panics when `lo > hi`.
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        RatInterval { lo, hi }
    }

    pub fn point(v: Rat) -> Self {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &Rat) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rat::zero())
    }

    /// The sign shared by every point, if there is one.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    /// Largest absolute value over the interval.
    pub fn mag(&self) -> Rat {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn scale(&self, c: &Rat) -> RatInterval {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if a <= b {
            RatInterval { lo: a, hi: b }
        } else {
            RatInterval { lo: b, hi: a }
        }
    }

    /// Enclosure of `u` over the interval (Horner form).
    pub fn eval_upoly(u: &UPoly, t: &RatInterval) -> RatInterval {
        u.coeffs()
            .iter()
            .rev()
            .fold(RatInterval::point(Rat::zero()), |acc, c| &(&acc * t) + &RatInterval::point(c.clone()))
    }

    /// Enclosure of `p` over the box `xs × ys`.
    pub fn eval_bpoly(p: &BPoly, xs: &RatInterval, ys: &RatInterval) -> RatInterval {
        p.coeffs_in(super::Var::Y)
            .iter()
            .rev()
            .fold(RatInterval::point(Rat::zero()), |acc, c| {
                &(&acc * ys) + &RatInterval::eval_upoly(c, xs)
            })
    }
}

impl Add for &RatInterval {
    type Output = RatInterval;
    fn add(self, rhs: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl Sub for &RatInterval {
    type Output = RatInterval;
    fn sub(self, rhs: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl Neg for &RatInterval {
    type Output = RatInterval;
    fn neg(self) -> RatInterval {
        RatInterval { lo: -&self.hi, hi: -&self.lo }
    }
}

impl Mul for &RatInterval {
    type Output = RatInterval;
    fn mul(self, rhs: &RatInterval) -> RatInterval {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    #[test]
    fn enclosure_contains_values() {
        let u = UPoly::from_ints(&[-2, 0, 1]);
        let t = RatInterval::new(rat(7, 5), rat(3, 2));
        let e = RatInterval::eval_upoly(&u, &t);
        assert!(e.contains(&u.eval(&rat(7, 5))));
        assert!(e.contains(&u.eval(&rat(3, 2))));
        assert!(e.contains_zero());
        let far = RatInterval::new(int(2), int(3));
        assert_eq!(RatInterval::eval_upoly(&u, &far).sign(), Some(Sign::Positive));
    }
}
