//! Half-Reeb-component regions of the canonical families, the exponents
//! that decide divergence of `∫ h` over them, and the refuter that shows a
//! candidate partner `q` does not give a positive Jacobian `det D(p, q)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::classify::Family;
use crate::error::{Error, Result};
use crate::poly::{int, BPoly, Rat, UPoly, Var};
use crate::realroots::{rat_to_f64, sign_certificate, SignCertificate};

/// `p_x q_y - p_y q_x`.
pub fn jacobian_det(p: &BPoly, q: &BPoly) -> BPoly {
    &(&p.diff(Var::X) * &q.diff(Var::Y)) - &(&p.diff(Var::Y) * &q.diff(Var::X))
}

/// The half-Reeb component used for each family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HrcRegion {
    pub family: Family,
}

impl HrcRegion {
    pub fn for_family(family: &Family) -> Self {
        HrcRegion { family: family.clone() }
    }
}

impl fmt::Display for HrcRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::One => f.write_str("{-1 <= y < 0, 0 <= x <= -1/y - y^2} union {(0, x) : x >= 0}"),
            Family::Two(a) => write!(f, "{{-1 <= y < 0, -1/y^2 - ({a})/y <= x <= {a} - 1}}"),
            Family::Three => f.write_str("{x >= 1, -1/x^2 <= y <= 0}"),
            Family::Four(a) => {
                write!(f, "{{-1 <= y < 0, sqrt(2 - ({a})) <= x <= sqrt(-1/y - ({a}) - y)}}")
            }
        }
    }
}

/// The family's exponent over the nonzero terms `b_ij x^i y^j` of `poly`:
/// `min(j - i - 1)` for family 1, `min(j - 2i - 2)` for family 2 and
/// `max(i - 2j - 3)` for families 3 and 4.
pub fn tau(family: &Family, poly: &BPoly) -> Result<i64> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let exps = poly.terms().map(|(i, j, _)| (i64::from(i), i64::from(j)));
    Ok(match family {
        Family::One => exps.map(|(i, j)| j - i - 1).min(),
        Family::Two(_) => exps.map(|(i, j)| j - 2 * i - 2).min(),
        Family::Three | Family::Four(_) => exps.map(|(i, j)| i - 2 * j - 3).max(),
    }
    .expect("nonzero polynomial has a term"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Divergence {
    Diverges(i64),
    FiniteOrUnknown(i64),
}

/// Whether `∫ h` over the family's region diverges for positive `h`. For
/// families 1 and 2 a nonzero constant term forces divergence; for 3 and 4
/// divergence follows from `τ >= -1`.
pub fn divergence_verdict(family: &Family, h: &BPoly) -> Result<Divergence> {
    let t = tau(family, h)?;
    match family {
        Family::One | Family::Two(_) => {
            if h.constant_term().is_zero() {
                return Err(Error::PreconditionFailed("h(0, 0) must be nonzero".into()));
            }
            Ok(Divergence::Diverges(t))
        }
        Family::Three | Family::Four(_) if t >= -1 => Ok(Divergence::Diverges(t)),
        Family::Three | Family::Four(_) => Ok(Divergence::FiniteOrUnknown(t)),
    }
}

/// Number of midpoint panels in the outer variable.
pub const PANELS: usize = 1 << 12;

/// `∫ h` over the family's region cut off near its unbounded edge: `y` in
/// `[-1, -eps]` for families 1, 2 and 4, `x` in `[1, 1/eps]` for family 3.
/// The inner integral is exact; the outer one uses [`PANELS`] midpoint
/// panels in a logarithmic variable, with error `O(PANELS^-2)`. Returns 0
/// when the truncated region is empty (`eps >= 1`).
pub fn truncated_integral(family: &Family, h: &BPoly, eps: &Rat) -> Result<f64> {
    if !eps.is_positive() {
        return Err(Error::PreconditionFailed("eps must be positive".into()));
    }
    if h.is_zero() || *eps >= Rat::one() {
        return Ok(0.0);
    }
    let log_eps = rat_to_f64(eps).ln();
    let inner_var = if *family == Family::Three { Var::Y } else { Var::X };
    let anti = Antiderivative::new(h, inner_var);
    let a = family.a02().map(rat_to_f64).unwrap_or(0.0);
    // Outer variable u = -e^t (y) or e^t (x family 3), t in [log_eps, 0] or
    // [0, -log_eps]; the Jacobian is e^t.
    let (t0, t1) = if *family == Family::Three { (0.0, -log_eps) } else { (log_eps, 0.0) };
    let step = (t1 - t0) / PANELS as f64;
    let mut total = 0.0;
    for k in 0..PANELS {
        let t = t0 + (k as f64 + 0.5) * step;
        let e = t.exp();
        let slice = match family {
            Family::One => {
                let y = -e;
                anti.between(0.0, -1.0 / y - y * y, y)
            }
            Family::Two(_) => {
                let y = -e;
                anti.between(-1.0 / (y * y) - a / y, a - 1.0, y)
            }
            Family::Three => {
                let x = e;
                anti.between(-1.0 / (x * x), 0.0, x)
            }
            Family::Four(_) => {
                let y = -e;
                anti.between((2.0 - a).sqrt(), (-1.0 / y - a - y).sqrt(), y)
            }
        };
        total += slice * e;
    }
    Ok(total * step)
}

/// Antiderivative of `h` in one variable, as floating-point coefficients.
struct Antiderivative {
    /// `(power of the integrated variable, power of the other, coefficient)`.
    terms: Vec<(i32, i32, f64)>,
}

impl Antiderivative {
    fn new(h: &BPoly, v: Var) -> Self {
        let terms = h
            .terms()
            .map(|(i, j, c)| {
                let (a, b) = if v == Var::X { (i, j) } else { (j, i) };
                (a as i32 + 1, b as i32, rat_to_f64(c) / f64::from(a + 1))
            })
            .collect();
        Antiderivative { terms }
    }

    fn at(&self, s: f64, other: f64) -> f64 {
        self.terms.iter().map(|&(a, b, c)| c * s.powi(a) * other.powi(b)).sum()
    }

    fn between(&self, lo: f64, hi: f64, other: f64) -> f64 {
        self.at(hi, other) - self.at(lo, other)
    }
}

/// `Σ b_ij (2(j - i)θ - i) θ^j` over the terms of `q` with `i = 2j + 1`.
#[allow(non_snake_case)]
pub fn L_theta(q: &BPoly) -> UPoly {
    q.terms()
        .filter(|&(i, j, _)| i == 2 * j + 1)
        .fold(UPoly::zero(), |acc, (i, j, c)| {
            let (i, j) = (i as i64, j as i64);
            let factor = UPoly::from_ints(&[-i, 2 * (j - i)]);
            let term = &factor * &UPoly::monomial(c.clone(), j as usize);
            &acc + &term
        })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// `h(x, y) = value <= 0`.
    PointWitness { x: Rat, y: Rat, value: Rat },
    /// `∫ h` over the region diverges if `h > 0`, which is impossible for a
    /// Jacobian of `p` with these level sets.
    DivergenceCertificate { family: Family, tau: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefutationCertificate {
    pub tag: Refutation,
    /// Steps taken, in order.
    pub trace: Vec<String>,
}

impl RefutationCertificate {
    /// Re-checks a point witness by exact evaluation, and a divergence
    /// certificate by recomputing its exponent.
    pub fn verify(&self, family: &Family, q: &BPoly) -> bool {
        let h = jacobian_det(&family.polynomial(), q);
        match &self.tag {
            Refutation::PointWitness { x, y, value } => {
                let v = h.eval(x, y);
                v == *value && !v.is_positive()
            }
            Refutation::DivergenceCertificate { family: f, tau: t } => {
                if f != family || !h.constant_term().is_positive() {
                    return false;
                }
                match family {
                    Family::One | Family::Two(_) => tau(family, &h).ok() == Some(*t),
                    Family::Three | Family::Four(_) => tau(family, q).ok() == Some(*t) && *t >= -1,
                }
            }
        }
    }
}

/// Largest `x` tried by the witness search.
fn search_limit() -> Rat {
    Rat::from_integer(BigInt::one() << 64)
}

/// Shows that `h = det D(p, q)` is not positive everywhere for the family's
/// polynomial `p`: a point with `h <= 0`, or a divergence certificate.
pub fn refute_pair(family: &Family, q: &BPoly) -> Result<RefutationCertificate> {
    let h = jacobian_det(&family.polynomial(), q);
    let mut trace = vec![format!("h = {h}")];
    let origin = h.constant_term();
    let witness = |x: Rat, y: Rat, value: Rat, trace: Vec<String>| RefutationCertificate {
        tag: Refutation::PointWitness { x, y, value },
        trace,
    };
    if !origin.is_positive() {
        trace.push(format!("h(0, 0) = {origin} <= 0"));
        return Ok(witness(Rat::zero(), Rat::zero(), origin, trace));
    }
    trace.push(format!("h(0, 0) = {origin} > 0"));
    if let Family::One | Family::Two(_) = family {
        let t = tau(family, &h)?;
        trace.push(format!("tau(h) = {t} < 0: the integral of h over the region diverges"));
        return Ok(RefutationCertificate {
            tag: Refutation::DivergenceCertificate { family: family.clone(), tau: t },
            trace,
        });
    }
    let t = tau(family, q)?;
    if t >= -1 {
        trace.push(format!("tau(q) = {t} >= -1: the integral of h over the region diverges"));
        return Ok(RefutationCertificate {
            tag: Refutation::DivergenceCertificate { family: family.clone(), tau: t },
            trace,
        });
    }
    trace.push(format!("tau(q) = {t} < -1"));
    let l = L_theta(q);
    if l.is_zero() {
        // Then b_10 = 0 and h(0, 0) = -b_10 = 0, already handled above.
        trace.push("L = 0".into());
        return Ok(witness(Rat::zero(), Rat::zero(), origin, trace));
    }
    trace.push(format!("L(t) = {l}"));
    let theta = match sign_certificate(&l) {
        SignCertificate::NegativeWitness(theta) => theta,
        other => {
            return Err(Error::LemmaViolation(format!("L = {l} has no negative value: {other:?}")))
        }
    };
    trace.push(format!("L({theta}) = {} < 0", l.eval(&theta)));
    let limit = search_limit();
    let mut x = Rat::one();
    while x <= limit {
        let y = &theta / (&x * &x);
        let value = h.eval(&x, &y);
        if !value.is_positive() {
            trace.push(format!("h({x}, {y}) = {value} <= 0"));
            return Ok(witness(x, y, value, trace));
        }
        x *= int(2);
    }
    Err(Error::WitnessSearchExhausted)
}
