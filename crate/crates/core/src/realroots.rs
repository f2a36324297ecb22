//! Real roots of univariate rational polynomials.
//!
//! Sturm chains count distinct roots exactly; bisection isolates them;
//! [`RealAlgebraic`] represents one root of a square-free polynomial and
//! answers sign questions about other polynomials at that root.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Rat, RatInterval, Sign, UPoly};

/// A rational interval holding exactly one distinct real root.
///
/// Endpoints are never roots, so the root lies strictly inside `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsolatingInterval {
    pub lo: Rat,
    pub hi: Rat,
    pub multiplicity: u32,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2))
    }
}

/// Outcome of asking whether a polynomial ever goes negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SignCertificate {
    NonnegativeEverywhere,
    IdenticallyZero,
    /// `u(z) < 0` at this rational `z`.
    NegativeWitness(Rat),
}

/// `u = lead(u) * prod part^mult` with monic, square-free, pairwise coprime
/// parts, listed by increasing multiplicity.
pub fn squarefree_decomposition(u: &UPoly) -> Result<Vec<(UPoly, u32)>> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if u.is_constant() {
        return Ok(out);
    }
    let du = u.derivative();
    let b = u.gcd(&du);
    let mut c = u.exact_div(&b).expect("gcd divides");
    let mut d = &du.exact_div(&b).expect("gcd divides") - &c.derivative();
    let mut mult = 1;
    while !c.is_constant() {
        let a = c.gcd(&d);
        if !a.is_constant() {
            out.push((a.monic(), mult));
        }
        c = c.exact_div(&a).expect("gcd divides");
        d = &d.exact_div(&a).expect("gcd divides") - &c.derivative();
        mult += 1;
    }
    Ok(out)
}

/// Sturm chain `f, f', -rem(f, f'), ...`, each entry scaled by a positive
/// constant to keep coefficients small.
pub fn sturm_chain(f: &UPoly) -> Vec<UPoly> {
    let mut chain = Vec::new();
    if f.is_zero() {
        return chain;
    }
    chain.push(f.primitive());
    let d = f.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive());
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push((-&r).primitive());
    }
    chain
}

fn variations<I: IntoIterator<Item = Sign>>(signs: I) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for s in signs {
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// A Sturm chain ready to count roots of its first entry.
#[derive(Clone, Debug)]
pub struct Sturm {
    chain: Vec<UPoly>,
}

impl Sturm {
    /// `f` should be square-free for counts to be distinct-root counts; the
    /// chain of a non-square-free `f` still counts distinct roots.
    pub fn new(f: &UPoly) -> Self {
        Sturm { chain: sturm_chain(f) }
    }

    pub fn poly(&self) -> &UPoly {
        &self.chain[0]
    }

    pub fn variations_at(&self, t: &Rat) -> usize {
        variations(self.chain.iter().map(|p| p.sign_at(t)))
    }

    pub fn total(&self) -> usize {
        let neg = variations(self.chain.iter().map(|p| p.sign_at_neg_inf()));
        let pos = variations(self.chain.iter().map(|p| p.sign_at_pos_inf()));
        neg - pos
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &Rat, hi: &Rat) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Distinct roots in `(t, +inf)`.
    pub fn count_above(&self, t: &Rat) -> usize {
        self.variations_at(t) - variations(self.chain.iter().map(|p| p.sign_at_pos_inf()))
    }
}

/// Number of distinct real roots, globally or in the open interval.
pub fn count_real_roots(u: &UPoly, interval: Option<(&Rat, &Rat)>) -> Result<usize> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sturm = Sturm::new(u);
    match interval {
        None => Ok(sturm.total()),
        Some((lo, hi)) => {
            if lo >= hi {
                return Err(Error::EmptyInterval { lo: lo.clone(), hi: hi.clone() });
            }
            for e in [lo, hi] {
                if u.eval(e).is_zero() {
                    return Err(Error::EndpointIsRoot(e.clone()));
                }
            }
            Ok(sturm.count(lo, hi))
        }
    }
}

/// Isolating intervals for every distinct real root, sorted, with
/// multiplicities taken from the square-free decomposition.
pub fn isolate_roots(u: &UPoly) -> Result<Vec<IsolatingInterval>> {
    let parts = squarefree_decomposition(u)?;
    let roots = real_roots(u)?;
    Ok(roots
        .into_iter()
        .map(|r| {
            let multiplicity = parts
                .iter()
                .find(|(g, _)| Sturm::new(g).count(&r.lo, &r.hi) == 1)
                .map(|&(_, m)| m)
                .expect("every root belongs to one square-free part");
            IsolatingInterval { lo: r.lo, hi: r.hi, multiplicity }
        })
        .collect())
}

/// The distinct real roots of `u`, sorted.
pub fn real_roots(u: &UPoly) -> Result<Vec<RealAlgebraic>> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if u.is_constant() {
        return Ok(Vec::new());
    }
    let f = u.squarefree_part();
    let sturm = Sturm::new(&f);
    let bound = f.cauchy_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 => out.push(RealAlgebraic { f: f.clone(), lo, hi }),
            _ => {
                let mid = split_point(&f, &lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// A point strictly inside `(lo, hi)` near the midpoint that is not a root.
fn split_point(f: &UPoly, lo: &Rat, hi: &Rat) -> Rat {
    let two = Rat::from_integer(BigInt::from(2));
    let mid = (lo + hi) / &two;
    if !f.eval(&mid).is_zero() {
        return mid;
    }
    let mut step = (hi - lo) / Rat::from_integer(BigInt::from(4));
    loop {
        let cand = &mid + &step;
        if !f.eval(&cand).is_zero() {
            return cand;
        }
        step /= &two;
    }
}

/// One real root of a square-free polynomial, given by an isolating interval
/// whose endpoints are not roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealAlgebraic {
    f: UPoly,
    lo: Rat,
    hi: Rat,
}

impl RealAlgebraic {
    /// `f` is made square-free; `(lo, hi)` must hold exactly one root and
    /// the endpoints must not be roots.
    pub fn new(f: &UPoly, lo: Rat, hi: Rat) -> Result<Self> {
        let f = f.squarefree_part();
        if count_real_roots(&f, Some((&lo, &hi)))? != 1 {
            return Err(Error::PreconditionFailed(
                "interval does not isolate a single root".into(),
            ));
        }
        Ok(RealAlgebraic { f, lo, hi })
    }

    /// The rational number `r` as a root of `t - r`.
    pub fn from_rat(r: &Rat) -> Self {
        RealAlgebraic {
            f: UPoly::from_coeffs(vec![-r.clone(), Rat::one()]),
            lo: r - Rat::one(),
            hi: r + Rat::one(),
        }
    }

    pub fn poly(&self) -> &UPoly {
        &self.f
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn interval(&self, multiplicity: u32) -> IsolatingInterval {
        IsolatingInterval { lo: self.lo.clone(), hi: self.hi.clone(), multiplicity }
    }

    /// Replaces the defining polynomial by `f / g`, where `g` divides `f`
    /// and does not vanish at the root.
    pub(crate) fn shrink(&mut self, g: &UPoly) {
        self.f = self.f.exact_div(g).expect("divisor of the defining polynomial").primitive();
    }

    /// Halves the interval once.
    pub fn bisect(&mut self) {
        let two = Rat::from_integer(BigInt::from(2));
        let mid = (&self.lo + &self.hi) / &two;
        let fm = self.f.sign_at(&mid);
        if fm == Sign::Zero {
            let quarter = (&self.hi - &self.lo) / Rat::from_integer(BigInt::from(4));
            self.lo = &mid - &quarter;
            self.hi = &mid + &quarter;
        } else if fm == self.f.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Narrows the interval until its width is at most `width`.
    pub fn refine(&mut self, width: &Rat) {
        while &(&self.hi - &self.lo) > width {
            self.bisect();
        }
    }

    pub fn refined(&self, width: &Rat) -> Self {
        let mut r = self.clone();
        r.refine(width);
        r
    }

    /// Exact comparison of a rational with the root.
    pub fn cmp_rat(&self, m: &Rat) -> Ordering {
        if m <= &self.lo {
            return Ordering::Less;
        }
        if m >= &self.hi {
            return Ordering::Greater;
        }
        match self.f.sign_at(m) {
            Sign::Zero => Ordering::Equal,
            s if s == self.f.sign_at(&self.lo) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }

    /// The root itself when it is rational.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.f.degree() == Some(1) {
            let c = self.f.coeffs();
            return Some(-&c[0] / &c[1]);
        }
        // Rational roots p/q of the primitive integer polynomial have q | D,
        // and distinct fractions with denominators <= |D| are >= 1/D^2 apart.
        let lead = self.f.primitive().lead().expect("nonzero").abs();
        let d2 = &lead * &lead;
        let r = self.refined(&(d2.recip() / Rat::from_integer(BigInt::from(2))));
        let m = simplest_between(&Bound::Rat(r.lo.clone()), &Bound::Rat(r.hi.clone()));
        self.f.eval(&m).is_zero().then_some(m)
    }

    /// Sign of `c` at the root: zero when `gcd(c, f)` vanishes there,
    /// otherwise found by refining until `c` has no root in the interval.
    pub fn sign_of(&self, c: &UPoly) -> Sign {
        self.sign_of_refining(c).0
    }

    /// [`RealAlgebraic::sign_of`], also returning the refined root.
    pub fn sign_of_refining(&self, c: &UPoly) -> (Sign, RealAlgebraic) {
        let mut r = self.clone();
        let c = c.rem(&self.f);
        if c.is_zero() {
            return (Sign::Zero, r);
        }
        if c.is_constant() {
            return (Sign::of(c.lead().unwrap()), r);
        }
        let decided = |r: &RealAlgebraic| {
            let v = RatInterval::eval_upoly(&c, &RatInterval::new(r.lo.clone(), r.hi.clone()));
            (!v.contains_zero()).then(|| v.sign().expect("interval excludes zero"))
        };
        // Cheap interval evaluation first; the exact zero test only when a
        // few bisections do not separate the value from zero.
        for _ in 0..8 {
            if let Some(s) = decided(&r) {
                return (s, r);
            }
            r.bisect();
        }
        let g = c.gcd(&self.f);
        if !g.is_constant() && Sturm::new(&g).count(&r.lo, &r.hi) == 1 {
            return (Sign::Zero, r);
        }
        // c(alpha) != 0 and interval evaluation converges to it.
        loop {
            if let Some(s) = decided(&r) {
                return (s, r);
            }
            r.bisect();
        }
    }

    /// Floating-point approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        let r = self.refined(&Rat::new(BigInt::one(), BigInt::one() << 60));
        rat_to_f64(&r.midpoint())
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2))
    }
}

/// Best-effort conversion for display and numeric quadrature.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Sign of `u` at the root isolated by `root` (a root of `v`).
pub fn sign_at_root(u: &UPoly, root: &IsolatingInterval, v: &UPoly) -> Result<Sign> {
    let alg = RealAlgebraic::new(v, root.lo.clone(), root.hi.clone())?;
    Ok(alg.sign_of(u))
}

/// An endpoint of an open interval on the real line.
#[derive(Clone, Debug)]
pub enum Bound {
    NegInf,
    PosInf,
    Rat(Rat),
    Alg(RealAlgebraic),
}

impl Bound {
    /// How `m` compares with this bound.
    fn cmp_rat(&self, m: &Rat) -> Ordering {
        match self {
            Bound::NegInf => Ordering::Greater,
            Bound::PosInf => Ordering::Less,
            Bound::Rat(r) => m.cmp(r),
            Bound::Alg(a) => a.cmp_rat(m),
        }
    }

    fn negated(&self) -> Bound {
        match self {
            Bound::NegInf => Bound::PosInf,
            Bound::PosInf => Bound::NegInf,
            Bound::Rat(r) => Bound::Rat(-r),
            Bound::Alg(a) => Bound::Alg(RealAlgebraic {
                f: a.f.compose(&UPoly::from_ints(&[0, -1])).primitive(),
                lo: -&a.hi,
                hi: -&a.lo,
            }),
        }
    }
}

/// The rational with the smallest denominator (then smallest magnitude)
/// strictly between `lo` and `hi`. The interval must be nonempty.
pub fn simplest_between(lo: &Bound, hi: &Bound) -> Rat {
    let zero = Rat::zero();
    let above_lo = |m: &Rat| lo.cmp_rat(m) == Ordering::Greater;
    let below_hi = |m: &Rat| hi.cmp_rat(m) == Ordering::Less;
    if above_lo(&zero) && below_hi(&zero) {
        return zero;
    }
    if !above_lo(&zero) {
        positive_simplest(lo, hi)
    } else {
        -positive_simplest(&hi.negated(), &lo.negated())
    }
}

/// Stern-Brocot descent for an interval inside `[0, inf)`, galloping
/// through runs of equal moves.
fn positive_simplest(lo: &Bound, hi: &Bound) -> Rat {
    let frac = |n: &BigInt, d: &BigInt| Rat::new(n.clone(), d.clone());
    // `m <= lo`: too small; `m >= hi`: too large.
    let too_small = |n: &BigInt, d: &BigInt| lo.cmp_rat(&frac(n, d)) != Ordering::Greater;
    let too_large = |n: &BigInt, d: &BigInt| {
        !d.is_zero() && hi.cmp_rat(&frac(n, d)) != Ordering::Less
    };
    let (mut ln, mut ld) = (BigInt::zero(), BigInt::one());
    let (mut rn, mut rd) = (BigInt::one(), BigInt::zero());
    loop {
        let (mn, md) = (&ln + &rn, &ld + &rd);
        if too_small(&mn, &md) {
            // Largest k with (l + k r) still too small.
            let k = gallop(|k| too_small(&(&ln + k * &rn), &(&ld + k * &rd)));
            ln += &k * &rn;
            ld += &k * &rd;
        } else if too_large(&mn, &md) {
            let k = gallop(|k| too_large(&(&rn + k * &ln), &(&rd + k * &ld)));
            rn += &k * &ln;
            rd += &k * &ld;
        } else {
            return frac(&mn, &md);
        }
    }
}

/// Largest `k >= 1` with `pred(k)`, given `pred(1)` and that `pred` is
/// monotone (true then false).
fn gallop<F: Fn(&BigInt) -> bool>(pred: F) -> BigInt {
    let mut good = BigInt::one();
    let mut step = BigInt::one();
    loop {
        let cand = &good + &step;
        if pred(&cand) {
            good = cand;
            step <<= 1;
        } else if step.is_one() {
            return good;
        } else {
            step >>= 1;
        }
    }
}

/// The simplest rational in each gap between consecutive distinct real
/// roots of a nonzero `u`, left to right. The sign of `u` is constant on
/// each gap, so these samples see every sign `u` takes off its roots.
pub fn gap_samples(u: &UPoly) -> Result<Vec<Rat>> {
    let roots = real_roots(u)?;
    let mut bounds = Vec::with_capacity(roots.len() + 2);
    bounds.push(Bound::NegInf);
    bounds.extend(roots.into_iter().map(Bound::Alg));
    bounds.push(Bound::PosInf);
    Ok(bounds.windows(2).map(|gap| simplest_between(&gap[0], &gap[1])).collect())
}

/// Decides whether `u` is ever negative on the real line; the first negative
/// gap sample is the witness.
pub fn sign_certificate(u: &UPoly) -> SignCertificate {
    if u.is_zero() {
        return SignCertificate::IdenticallyZero;
    }
    gap_samples(u)
        .expect("nonzero")
        .into_iter()
        .find(|z| u.eval(z).is_negative())
        .map_or(SignCertificate::NonnegativeEverywhere, SignCertificate::NegativeWitness)
}

/// Smallest `k` with `2^k >= |r|`, for rough magnitude estimates.
pub fn log2_ceil(r: &Rat) -> u64 {
    let a = r.abs();
    if a <= Rat::one() {
        return 0;
    }
    let q = a.ceil().to_integer();
    let bits = q.bits();
    if (BigInt::one() << (bits - 1)) == q {
        bits - 1
    } else {
        bits
    }
}

/// Least common multiple of the coefficient denominators.
pub fn denominator_lcm(u: &UPoly) -> BigInt {
    u.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn up(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn squarefree_examples() {
        let u = UPoly::from_roots(&[int(1), int(1), int(2)]);
        assert_eq!(
            squarefree_decomposition(&u).unwrap(),
            vec![(up(&[-2, 1]), 1), (up(&[-1, 1]), 2)]
        );
        assert_eq!(squarefree_decomposition(&up(&[1, 0, 1])).unwrap(), vec![(up(&[1, 0, 1]), 1)]);
        assert_eq!(squarefree_decomposition(&up(&[-1, 1]).pow(4)).unwrap(), vec![(up(&[-1, 1]), 4)]);
        assert_eq!(squarefree_decomposition(&UPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_real_roots(&up(&[-2, 0, 1]), Some((&int(0), &int(2)))).unwrap(), 1);
        assert_eq!(count_real_roots(&up(&[1, 0, 1]), None).unwrap(), 0);
        assert_eq!(count_real_roots(&up(&[0, -1, 0, 1]), None).unwrap(), 3);
        assert_eq!(
            count_real_roots(&up(&[-1, 0, 1]), Some((&int(1), &int(2)))),
            Err(Error::EndpointIsRoot(int(1)))
        );
    }

    #[test]
    fn isolation_examples() {
        let roots = isolate_roots(&up(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.multiplicity == 1));
        let mut pos = RealAlgebraic::new(&up(&[-2, 0, 1]), roots[1].lo.clone(), roots[1].hi.clone()).unwrap();
        pos.refine(&rat(1, 1_000_000));
        assert!((pos.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-6);
        let double = isolate_roots(&up(&[1, -2, 1])).unwrap();
        assert_eq!(double.len(), 1);
        assert_eq!(double[0].multiplicity, 2);
        assert!(double[0].lo < int(1) && int(1) < double[0].hi);
        assert!(isolate_roots(&up(&[1, 1, 1])).unwrap().is_empty());
    }

    #[test]
    fn sign_certificate_examples() {
        assert_eq!(sign_certificate(&up(&[0, 0, 1])), SignCertificate::NonnegativeEverywhere);
        assert_eq!(sign_certificate(&up(&[0, 0, -1, 1])), SignCertificate::NegativeWitness(int(-1)));
        assert_eq!(sign_certificate(&UPoly::zero()), SignCertificate::IdenticallyZero);
        assert_eq!(sign_certificate(&up(&[1, 2])), SignCertificate::NegativeWitness(int(-1)));
        assert_eq!(sign_certificate(&up(&[-1, -2])), SignCertificate::NegativeWitness(int(0)));
    }

    #[test]
    fn sign_at_root_examples() {
        let v = up(&[-2, 0, 1]);
        let root = IsolatingInterval { lo: int(1), hi: int(2), multiplicity: 1 };
        assert_eq!(sign_at_root(&up(&[0, 1]), &root, &v).unwrap(), Sign::Positive);
        assert_eq!(sign_at_root(&v, &root, &v).unwrap(), Sign::Zero);
        assert_eq!(sign_at_root(&up(&[-3, 0, 1]), &root, &v).unwrap(), Sign::Negative);
    }

    #[test]
    fn simplest_rational_in_gaps() {
        let q = |n, d| Bound::Rat(rat(n, d));
        assert_eq!(simplest_between(&q(1, 3), &q(1, 2)), rat(2, 5));
        assert_eq!(simplest_between(&q(3, 1), &Bound::PosInf), int(4));
        assert_eq!(simplest_between(&Bound::NegInf, &q(-7, 2)), int(-4));
        assert_eq!(simplest_between(&q(-1, 2), &q(1, 2)), int(0));
        assert_eq!(simplest_between(&q(1000, 1), &q(1002, 1)), int(1001));
        let sqrt2 = real_roots(&up(&[-2, 0, 1])).unwrap().pop().unwrap();
        assert_eq!(simplest_between(&Bound::Rat(int(1)), &Bound::Alg(sqrt2.clone())), rat(4, 3));
        assert_eq!(simplest_between(&Bound::Alg(sqrt2), &Bound::Rat(rat(3, 2))), rat(10, 7));
    }

    #[test]
    fn rational_roots_are_recognized() {
        let u = &up(&[-1, 3]) * &up(&[-2, 0, 1]);
        let roots = real_roots(&u).unwrap();
        let found: Vec<Option<Rat>> = roots.iter().map(|r| r.as_rat()).collect();
        assert_eq!(found, vec![None, Some(rat(1, 3)), None]);
    }
}
