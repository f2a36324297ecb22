//! Real common zeros of polynomial pairs.
//!
//! The `decide_*` procedures are sufficient conditions read off the first two
//! subresultants of pairs shaped as quadratic/cubic or quadratic/quadratic in
//! a main variable; they never assert nonexistence. [`critical_point_exists`]
//! is a complete decision procedure for the gradient of one polynomial.

mod critical;
mod fiber;

pub use critical::{critical_point_exists, critical_point_exists_with_width, default_width, WitnessBox};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{BPoly, Rat, Sign, UPoly, Var};
use crate::realroots::{real_roots, sign_certificate, RealAlgebraic, SignCertificate};
use crate::subres::SylvesterMatrix;
use fiber::shared_fiber_root;

/// `p = M t^2 + a t + b`, `q = N t^3 + c t^2 + d t + e`, where `t` is the
/// main variable and the coefficients are polynomials in the other one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapedPair23 {
    pub var: Var,
    pub m: UPoly,
    pub a: UPoly,
    pub b: UPoly,
    pub n: UPoly,
    pub c: UPoly,
    pub d: UPoly,
    pub e: UPoly,
}

/// `p = M t^2 + a t + b`, `q = N t^2 + c t + d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapedPair22 {
    pub var: Var,
    pub m: UPoly,
    pub a: UPoly,
    pub b: UPoly,
    pub n: UPoly,
    pub c: UPoly,
    pub d: UPoly,
}

fn padded(p: &BPoly, var: Var, len: usize, what: &str) -> Result<Vec<UPoly>> {
    let mut c = p.coeffs_in(var);
    if c.len() > len {
        return Err(Error::ShapeMismatch(format!(
            "{what} has degree {} in {var}, expected at most {}",
            c.len() - 1,
            len - 1
        )));
    }
    c.resize(len, UPoly::zero());
    Ok(c)
}

impl ShapedPair23 {
    /// Reads the shape off `p` (degree <= 2 in `var`) and `q` (degree <= 3).
    pub fn from_polys(p: &BPoly, q: &BPoly, var: Var) -> Result<Self> {
        let pc = padded(p, var, 3, "p")?;
        let qc = padded(q, var, 4, "q")?;
        Ok(ShapedPair23 {
            var,
            m: pc[2].clone(),
            a: pc[1].clone(),
            b: pc[0].clone(),
            n: qc[3].clone(),
            c: qc[2].clone(),
            d: qc[1].clone(),
            e: qc[0].clone(),
        })
    }

    fn p_coeffs(&self) -> Vec<UPoly> {
        vec![self.b.clone(), self.a.clone(), self.m.clone()]
    }

    fn q_coeffs(&self) -> Vec<UPoly> {
        vec![self.e.clone(), self.d.clone(), self.c.clone(), self.n.clone()]
    }

    /// `(R_0, R_1)` from the Sylvester matrix with formal degrees 2 and 3.
    pub fn r0_r1(&self) -> (UPoly, UPoly) {
        r0_r1_formal(&self.p_coeffs(), &self.q_coeffs())
    }
}

impl ShapedPair22 {
    /// Reads the shape off `p` and `q`, both of degree <= 2 in `var`.
    pub fn from_polys(p: &BPoly, q: &BPoly, var: Var) -> Result<Self> {
        let pc = padded(p, var, 3, "p")?;
        let qc = padded(q, var, 3, "q")?;
        Ok(ShapedPair22 {
            var,
            m: pc[2].clone(),
            a: pc[1].clone(),
            b: pc[0].clone(),
            n: qc[2].clone(),
            c: qc[1].clone(),
            d: qc[0].clone(),
        })
    }

    fn p_coeffs(&self) -> Vec<UPoly> {
        vec![self.b.clone(), self.a.clone(), self.m.clone()]
    }

    fn q_coeffs(&self) -> Vec<UPoly> {
        vec![self.d.clone(), self.c.clone(), self.n.clone()]
    }

    /// `(R_0, R_1)` from the Sylvester matrix with formal degrees 2 and 2.
    pub fn r0_r1(&self) -> (UPoly, UPoly) {
        r0_r1_formal(&self.p_coeffs(), &self.q_coeffs())
    }
}

fn r0_r1_formal(p: &[UPoly], q: &[UPoly]) -> (UPoly, UPoly) {
    let s = SylvesterMatrix::from_coeffs(p, q);
    let r0 = s.subresultant(0).expect("k = 0 in range");
    let r1 = s.subresultant(1).expect("k = 1 in range");
    (r0, r1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZeroTag {
    CommonRealZeroExists,
    NoCommonRealZeroOnLine,
    HypothesesNotMet,
}

/// Where a common real zero sits: the value of the non-main variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locator {
    Rational(Rat),
    Algebraic(RealAlgebraic),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroWitness {
    pub x: Locator,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroVerdict {
    pub tag: ZeroTag,
    pub witness: Option<ZeroWitness>,
    /// Which hypothesis failed, or how the conclusion was reached.
    pub reason: String,
}

impl ZeroVerdict {
    fn not_met(reason: impl Into<String>) -> Self {
        ZeroVerdict { tag: ZeroTag::HypothesesNotMet, witness: None, reason: reason.into() }
    }

    fn exists(p: &[UPoly], q: &[UPoly], r0: &UPoly, reason: impl Into<String>) -> Self {
        ZeroVerdict {
            tag: ZeroTag::CommonRealZeroExists,
            witness: locate(p, q, r0),
            reason: reason.into(),
        }
    }
}

/// Searches the real roots of `R_0` for a line carrying a common real zero.
/// Rational roots are preferred.
fn locate(p: &[UPoly], q: &[UPoly], r0: &UPoly) -> Option<ZeroWitness> {
    let roots = real_roots(r0).ok()?;
    let width = default_width();
    let mut algebraic = Vec::new();
    for alpha in roots {
        match alpha.as_rat() {
            Some(r) => {
                if shared_fiber_root(p, q, &RealAlgebraic::from_rat(&r), &width).is_some() {
                    return Some(ZeroWitness {
                        x: Locator::Rational(r),
                        note: "specializations share a real root".into(),
                    });
                }
            }
            None => algebraic.push(alpha),
        }
    }
    for alpha in algebraic {
        if let Some(root) = shared_fiber_root(p, q, &alpha, &width) {
            return Some(ZeroWitness {
                x: Locator::Algebraic(root.alpha),
                note: "specializations share a real root over Q(alpha)".into(),
            });
        }
    }
    None
}

/// "No common zeros" read over the complex numbers: the gcd is constant.
fn coprime(a: &UPoly, b: &UPoly) -> bool {
    a.gcd(b).is_constant()
}

/// Sufficient condition for a common real zero of a quadratic/cubic pair:
/// `R_0` coprime to `N`, and `b_l R_0` negative somewhere (`b_l` the leading
/// coefficient of `R_0`).
pub fn decide_thm_raiz23(pair: &ShapedPair23) -> ZeroVerdict {
    let (r0, _) = pair.r0_r1();
    let Some(bl) = r0.lead().cloned() else {
        return ZeroVerdict::not_met("R0 is identically zero");
    };
    if !coprime(&r0, &pair.n) {
        return ZeroVerdict::not_met("R0 and N have a common zero");
    }
    match sign_certificate(&r0.scale(&bl)) {
        SignCertificate::NegativeWitness(z) => ZeroVerdict::exists(
            &pair.p_coeffs(),
            &pair.q_coeffs(),
            &r0,
            format!("b_l R0({z}) < 0"),
        ),
        _ => ZeroVerdict::not_met("b_l R0 is nonnegative everywhere"),
    }
}

/// Which form of hypothesis (i) to apply to a quadratic/quadratic pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Raiz22Variant {
    Standard,
    /// `alpha` is a common zero of `R_0` and `M`.
    IPrime(Rat),
}

/// Quadratic/quadratic analogue of [`decide_thm_raiz23`]. The `IPrime`
/// variant decides the line `x = alpha` exactly.
pub fn decide_thm_raiz22(pair: &ShapedPair22, variant: &Raiz22Variant) -> Result<ZeroVerdict> {
    let (r0, _) = pair.r0_r1();
    match variant {
        Raiz22Variant::IPrime(alpha) => i_prime(pair, &r0, alpha),
        Raiz22Variant::Standard => {
            let Some(bl) = r0.lead().cloned() else {
                return Ok(ZeroVerdict::not_met("R0 is identically zero"));
            };
            if !coprime(&r0, &pair.m) || !coprime(&r0, &pair.n) {
                return Ok(ZeroVerdict::not_met("R0 has a common zero with M or N"));
            }
            Ok(match sign_certificate(&r0.scale(&bl)) {
                SignCertificate::NegativeWitness(z) => ZeroVerdict::exists(
                    &pair.p_coeffs(),
                    &pair.q_coeffs(),
                    &r0,
                    format!("b_l R0({z}) < 0"),
                ),
                _ => ZeroVerdict::not_met("b_l R0 is nonnegative everywhere"),
            })
        }
    }
}

fn i_prime(pair: &ShapedPair22, r0: &UPoly, alpha: &Rat) -> Result<ZeroVerdict> {
    if !r0.eval(alpha).is_zero() || !pair.m.eval(alpha).is_zero() {
        return Err(Error::AlphaNotCommonZero(alpha.clone()));
    }
    let on_line = |reason: String| ZeroVerdict {
        tag: ZeroTag::CommonRealZeroExists,
        witness: Some(ZeroWitness { x: Locator::Rational(alpha.clone()), note: reason.clone() }),
        reason,
    };
    if !pair.a.eval(alpha).is_zero() {
        return Ok(on_line(format!("a({alpha}) != 0")));
    }
    let p_line_zero = pair.b.eval(alpha).is_zero();
    let (n, c, d) = (pair.n.eval(alpha), pair.c.eval(alpha), pair.d.eval(alpha));
    let q_has_real_root = if n.is_zero() {
        // q(alpha, t) = c t + d is at most linear.
        !c.is_zero() || d.is_zero()
    } else {
        &c * &c - Rat::from_integer(4.into()) * &n * &d >= Rat::zero()
    };
    if p_line_zero && q_has_real_root {
        return Ok(on_line(format!("p({alpha}, t) = 0 and q({alpha}, t) has a real root")));
    }
    Ok(ZeroVerdict {
        tag: ZeroTag::NoCommonRealZeroOnLine,
        witness: None,
        reason: format!("no common real zero on the line through {alpha}"),
    })
}

/// Real roots `z` of `R_1` with the requested sign conditions.
fn r1_roots_where<F>(r1: &UPoly, mut ok: F) -> Option<RealAlgebraic>
where
    F: FnMut(&RealAlgebraic) -> bool,
{
    if r1.is_zero() {
        return None;
    }
    real_roots(r1).ok()?.into_iter().find(|z| ok(z))
}

/// Subresultant criterion for a quadratic/cubic pair: `R_0` coprime to `N`,
/// and a real root `z` of `R_1` with `b_l M(z) > 0` and `N(z) != 0`.
pub fn decide_cor_raiz23(pair: &ShapedPair23) -> ZeroVerdict {
    let (r0, r1) = pair.r0_r1();
    let Some(bl) = r0.lead().cloned() else {
        return ZeroVerdict::not_met("R0 is identically zero");
    };
    if !coprime(&r0, &pair.n) {
        return ZeroVerdict::not_met("R0 and N have a common zero");
    }
    let blm = pair.m.scale(&bl);
    let found = r1_roots_where(&r1, |z| {
        z.sign_of(&blm) == Sign::Positive && z.sign_of(&pair.n) != Sign::Zero
    });
    match found {
        Some(_) => ZeroVerdict::exists(
            &pair.p_coeffs(),
            &pair.q_coeffs(),
            &r0,
            "R1(z) = 0 with b_l M(z) > 0 and N(z) != 0",
        ),
        None => ZeroVerdict::not_met("no root z of R1 with b_l M(z) > 0 and N(z) != 0"),
    }
}

/// Subresultant criterion for a quadratic/quadratic pair: `R_0` coprime to
/// `M` and `N`, `b_l > 0`, and a real root `z` of `R_1` with `M(z)N(z) != 0`.
/// When `R_0` and `M` share a rational zero `alpha` (and `R_0`, `N` are
/// coprime), the line `x = alpha` is decided as in the `IPrime` variant.
pub fn decide_cor_raiz22(pair: &ShapedPair22) -> ZeroVerdict {
    let (r0, r1) = pair.r0_r1();
    let Some(bl) = r0.lead().cloned() else {
        return ZeroVerdict::not_met("R0 is identically zero");
    };
    if !coprime(&r0, &pair.n) {
        return ZeroVerdict::not_met("R0 and N have a common zero");
    }
    if coprime(&r0, &pair.m) {
        if bl <= Rat::zero() {
            return ZeroVerdict::not_met("b_l is not positive");
        }
        let mn = &pair.m * &pair.n;
        return match r1_roots_where(&r1, |z| z.sign_of(&mn) != Sign::Zero) {
            Some(_) => ZeroVerdict::exists(
                &pair.p_coeffs(),
                &pair.q_coeffs(),
                &r0,
                "b_l > 0 and R1(z) = 0 with M(z) N(z) != 0",
            ),
            None => ZeroVerdict::not_met("no root z of R1 with M(z) N(z) != 0"),
        };
    }
    let shared = r0.gcd(&pair.m);
    let rational = real_roots(&shared)
        .unwrap_or_default()
        .into_iter()
        .filter_map(|r| r.as_rat());
    for alpha in rational {
        if let Ok(v) = i_prime(pair, &r0, &alpha) {
            if v.tag == ZeroTag::CommonRealZeroExists {
                return v;
            }
        }
    }
    ZeroVerdict::not_met("R0 and M share zeros, none giving a common real zero")
}
