//! Polynomials in one variable whose coefficients are evaluated at a real
//! algebraic number `alpha`.
//!
//! An element of `Q(alpha)` is a rational polynomial reduced modulo the
//! defining polynomial `f` of `alpha`. `f` is square-free but may be
//! reducible, so zero tests go through [`RealAlgebraic::sign_of`], and a
//! failed inversion shrinks `f` to the factor that actually vanishes at
//! `alpha`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::{Rat, RatInterval, Sign, UPoly};
use crate::realroots::{real_roots, RealAlgebraic};

/// Coefficients in ascending order, each an element of `Q(alpha)`.
pub(crate) type FPoly = Vec<UPoly>;

pub(crate) struct AlgField {
    alpha: RealAlgebraic,
}

impl AlgField {
    pub fn new(alpha: &RealAlgebraic) -> Self {
        AlgField { alpha: alpha.clone() }
    }

    pub fn alpha(&self) -> &RealAlgebraic {
        &self.alpha
    }

    fn reduce(&self, c: &UPoly) -> UPoly {
        c.rem(self.alpha.poly())
    }

    pub fn sign(&mut self, c: &UPoly) -> Sign {
        let (s, refined) = self.alpha.sign_of_refining(c);
        self.alpha = refined;
        s
    }

    fn is_zero(&mut self, c: &UPoly) -> bool {
        c.is_zero() || self.sign(c) == Sign::Zero
    }

    fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        self.reduce(&(a * b))
    }

    /// Inverse of a nonzero element.
    fn inv(&mut self, c: &UPoly) -> UPoly {
        loop {
            let f = self.alpha.poly().clone();
            let (g, s, _) = c.ext_gcd(&f);
            if g.is_constant() {
                return self.reduce(&s);
            }
            // c(alpha) != 0, so alpha is a root of f / g.
            self.alpha.shrink(&g);
        }
    }

    /// Reduces coefficients and drops leading coefficients vanishing at alpha.
    pub fn normalize(&mut self, p: &[UPoly]) -> FPoly {
        let mut out: FPoly = p.iter().map(|c| self.reduce(c)).collect();
        while let Some(last) = out.last().cloned() {
            if self.is_zero(&last) {
                out.pop();
            } else {
                break;
            }
        }
        out
    }

    fn scale(&self, p: &[UPoly], c: &UPoly) -> FPoly {
        p.iter().map(|a| self.mul(a, c)).collect()
    }

    /// Remainder of `a` by a normalized nonzero `b`.
    fn rem(&mut self, a: &[UPoly], b: &[UPoly]) -> FPoly {
        let mut r = self.normalize(a);
        let bn = b.len() - 1;
        let inv_lead = self.inv(&b[bn]);
        while r.len() > bn {
            let rn = r.len() - 1;
            let q = self.mul(&r[rn], &inv_lead);
            for (i, bc) in b.iter().enumerate() {
                let t = self.mul(&q, bc);
                r[rn - bn + i] = self.reduce(&(&r[rn - bn + i] - &t));
            }
            r.pop();
            r = self.normalize(&r);
        }
        r
    }

    /// Scales a normalized nonzero polynomial so its leading coefficient is
    /// `+1` or `-1`; the factor is positive, so signs are unchanged.
    fn unit_lead(&mut self, p: &[UPoly]) -> FPoly {
        let lead = p.last().expect("nonzero").clone();
        let s = self.sign(&lead);
        let mut f = self.inv(&lead);
        if s == Sign::Negative {
            f = -&f;
        }
        self.scale(p, &f)
    }

    /// Monic gcd of two polynomials, either of which may be zero.
    pub fn gcd(&mut self, a: &[UPoly], b: &[UPoly]) -> FPoly {
        let mut a = self.normalize(a);
        let mut b = self.normalize(b);
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        if a.is_empty() {
            return a;
        }
        let lead = a.last().unwrap().clone();
        let inv = self.inv(&lead);
        self.scale(&a, &inv)
    }

    fn derivative(&self, p: &[UPoly]) -> FPoly {
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Rat::from_integer(BigInt::from(k))))
            .collect()
    }

    /// Sturm chain of a normalized nonzero polynomial.
    fn sturm_chain(&mut self, g: &[UPoly]) -> Vec<FPoly> {
        let mut chain = vec![self.unit_lead(g)];
        let d = self.normalize(&self.derivative(g));
        if d.is_empty() {
            return chain;
        }
        chain.push(self.unit_lead(&d));
        loop {
            let n = chain.len();
            let (a, b) = (chain[n - 2].clone(), chain[n - 1].clone());
            let r = self.rem(&a, &b);
            if r.is_empty() {
                return chain;
            }
            let neg: FPoly = r.iter().map(|c| -c).collect();
            chain.push(self.unit_lead(&neg));
        }
    }

    fn eval_rat(&self, p: &[UPoly], y: &Rat) -> UPoly {
        let mut acc = UPoly::zero();
        for coef in p.iter().rev() {
            acc = &acc.scale(y) + coef;
        }
        self.reduce(&acc)
    }

    fn sign_at_rat(&mut self, p: &[UPoly], y: &Rat) -> Sign {
        let v = self.eval_rat(p, y);
        self.sign(&v)
    }

    fn variations_at(&mut self, chain: &[FPoly], y: &Rat) -> usize {
        let signs: Vec<Sign> = chain.iter().map(|p| self.sign_at_rat(p, y)).collect();
        count_variations(&signs)
    }

    /// Upper bound on `|root|` for every complex root of `g`.
    fn root_bound(&mut self, g: &[UPoly]) -> Rat {
        let lead = g.last().expect("nonzero").clone();
        let width = Rat::new(BigInt::one(), BigInt::from(16));
        let mut alpha = self.alpha.clone();
        loop {
            let iv = RatInterval::new(alpha.lo().clone(), alpha.hi().clone());
            let le = RatInterval::eval_upoly(&lead, &iv);
            if !le.contains_zero() {
                let low = if le.lo > Rat::zero() { le.lo.clone() } else { -le.hi.clone() };
                let m = g[..g.len() - 1]
                    .iter()
                    .map(|c| RatInterval::eval_upoly(c, &iv).mag())
                    .max()
                    .unwrap_or_else(Rat::zero);
                return Rat::one() + m / low;
            }
            let w = (alpha.hi() - alpha.lo()) / Rat::from_integer(BigInt::from(2));
            alpha.refine(&w.min(width.clone()));
        }
    }

    /// A root of `g` (normalized, nonzero) isolated to width `<= width`, if
    /// `g` has a real root.
    pub fn isolate_first_root(&mut self, g: &[UPoly], width: &Rat) -> Option<RatInterval> {
        if g.len() <= 1 {
            return None;
        }
        if g.len() == 2 {
            // Linear: the root -g0/g1 is an element of Q(alpha), enclosed
            // directly.
            let inv = self.inv(&g[1]);
            let t = self.mul(&-&g[0], &inv);
            let mut alpha = self.alpha.clone();
            loop {
                let iv = RatInterval::new(alpha.lo().clone(), alpha.hi().clone());
                let v = RatInterval::eval_upoly(&t, &iv);
                if v.width() <= *width {
                    self.alpha = alpha;
                    return Some(v);
                }
                alpha.bisect();
            }
        }
        let chain = self.sturm_chain(g);
        let mut at_pos = Vec::with_capacity(chain.len());
        let mut at_neg = Vec::with_capacity(chain.len());
        for p in &chain {
            let s = self.sign(p.last().expect("nonzero"));
            at_pos.push(s);
            at_neg.push(if (p.len() - 1) % 2 == 0 { s } else { s.flip() });
        }
        if count_variations(&at_neg) == count_variations(&at_pos) {
            return None;
        }
        let bound = self.root_bound(g);
        let (mut lo, mut hi) = (-bound.clone(), bound);
        let mut v_lo = self.variations_at(&chain, &lo);
        let two = Rat::from_integer(BigInt::from(2));
        while &hi - &lo > *width {
            let mut mid = (&lo + &hi) / &two;
            let mut step = (&hi - &lo) / Rat::from_integer(BigInt::from(4));
            while self.sign_at_rat(g, &mid) == Sign::Zero {
                mid = &mid + &step;
                step = step / &two;
            }
            let v_mid = self.variations_at(&chain, &mid);
            if v_lo > v_mid {
                hi = mid;
            } else {
                lo = mid;
                v_lo = v_mid;
            }
        }
        Some(RatInterval::new(lo, hi))
    }
}

fn count_variations(signs: &[Sign]) -> usize {
    let mut last = Sign::Zero;
    let mut n = 0;
    for &s in signs {
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// A real common root of `a(alpha, t)` and `b(alpha, t)`, where `a` and `b`
/// are coefficient lists in `t` whose entries are polynomials in the other
/// variable. Either list may be empty (the zero polynomial).
pub(crate) struct FiberRoot {
    /// Refined enclosure of `alpha`, or the exact value when rational.
    pub alpha: RealAlgebraic,
    pub alpha_exact: Option<Rat>,
    pub t: RatInterval,
    pub t_exact: Option<Rat>,
}

pub(crate) fn shared_fiber_root(
    a: &[UPoly],
    b: &[UPoly],
    alpha: &RealAlgebraic,
    width: &Rat,
) -> Option<FiberRoot> {
    if let Some(r) = alpha.as_rat() {
        let spec = |p: &[UPoly]| UPoly::from_coeffs(p.iter().map(|c| c.eval(&r)).collect());
        let g = spec(a).gcd(&spec(b));
        if g.is_zero() {
            return Some(FiberRoot {
                alpha: RealAlgebraic::from_rat(&r).refined(width),
                alpha_exact: Some(r),
                t: RatInterval::point(Rat::zero()),
                t_exact: Some(Rat::zero()),
            });
        }
        let root = real_roots(&g).ok()?.into_iter().next()?;
        let t_exact = root.as_rat();
        let root = root.refined(width);
        return Some(FiberRoot {
            alpha: RealAlgebraic::from_rat(&r).refined(width),
            alpha_exact: Some(r),
            t: t_exact
                .clone()
                .map_or_else(|| RatInterval::new(root.lo().clone(), root.hi().clone()), RatInterval::point),
            t_exact,
        });
    }
    let mut field = AlgField::new(alpha);
    let g = field.gcd(a, b);
    if g.is_empty() {
        let alpha = field.alpha().refined(width);
        return Some(FiberRoot {
            alpha,
            alpha_exact: None,
            t: RatInterval::point(Rat::zero()),
            t_exact: Some(Rat::zero()),
        });
    }
    let t = field.isolate_first_root(&g, width)?;
    let alpha = field.alpha().refined(width);
    Some(FiberRoot { alpha, alpha_exact: None, t, t_exact: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn sqrt2() -> RealAlgebraic {
        real_roots(&UPoly::from_ints(&[-2, 0, 1])).unwrap().pop().unwrap()
    }

    #[test]
    fn gcd_over_sqrt2() {
        // (t - sqrt2)(t + 1) and (t - sqrt2)(t - 3), coefficients in x = sqrt2.
        let x = UPoly::var();
        let one = UPoly::one();
        let a = vec![-&x, &one - &x, one.clone()];
        let b = vec![x.scale(&int(3)), &(-&x) - &UPoly::constant(int(3)), one.clone()];
        let mut f = AlgField::new(&sqrt2());
        let g = f.gcd(&a, &b);
        assert_eq!(g.len(), 2);
        // g = t - sqrt2: value at t = sqrt2 vanishes.
        let at = &g[0] + &(&g[1] * &x);
        assert_eq!(f.sign(&at), Sign::Zero);
    }

    #[test]
    fn fiber_root_isolation() {
        // t^2 - x at x = sqrt2: roots +-2^(1/4).
        let a = vec![-&UPoly::var(), UPoly::zero(), UPoly::one()];
        let w = Rat::new(BigInt::one(), BigInt::from(1 << 20));
        let r = shared_fiber_root(&a, &[], &sqrt2(), &w).unwrap();
        let approx = -(2f64.powf(0.25));
        let mid = crate::realroots::rat_to_f64(&((&r.t.lo + &r.t.hi) / int(2)));
        assert!((mid - approx).abs() < 1e-5);
        // t^2 + x has no real roots.
        let b = vec![UPoly::var(), UPoly::zero(), UPoly::one()];
        assert!(shared_fiber_root(&b, &[], &sqrt2(), &w).is_none());
    }

    #[test]
    fn reducible_defining_polynomial_is_shrunk() {
        // alpha = 1 as a root of (t - 1)(t^2 - 2); x - 1 vanishes there.
        let f = &UPoly::from_ints(&[-1, 1]) * &UPoly::from_ints(&[-2, 0, 1]);
        let one = RealAlgebraic::new(&f, Rat::new(BigInt::from(9), BigInt::from(10)), int(1) + Rat::new(BigInt::one(), BigInt::from(10))).unwrap();
        let mut field = AlgField::new(&one);
        assert_eq!(field.sign(&UPoly::from_ints(&[-1, 1])), Sign::Zero);
        let inv = field.inv(&UPoly::from_ints(&[1, 1]));
        assert_eq!(field.sign(&(&inv - &UPoly::constant(Rat::new(BigInt::one(), BigInt::from(2))))), Sign::Zero);
    }
}
