//! Classification of degree-4 submersions: the case of the quartic part, the
//! four canonical families with disconnected level sets, and the combined
//! verdict.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hrc::HrcRegion;
use crate::levelsets::{decide_connected, ConnectednessCertificate, ConnectednessTag};
use crate::poly::{int, rat, AffineEquivalence, AffineMap, BPoly, Rat, Sign, UPoly, Var};
use crate::realroots::{count_real_roots, squarefree_decomposition, Sturm};
use crate::zeros::{critical_point_exists, WitnessBox};

/// Normal-form cases of a real binary quartic up to linear changes of
/// variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 9] = [
        CaseLabel::I,
        CaseLabel::II,
        CaseLabel::III,
        CaseLabel::IV,
        CaseLabel::V,
        CaseLabel::VI,
        CaseLabel::VII,
        CaseLabel::VIII,
        CaseLabel::IX,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseLabel::I => "I",
            CaseLabel::II => "II",
            CaseLabel::III => "III",
            CaseLabel::IV => "IV",
            CaseLabel::V => "V",
            CaseLabel::VI => "VI",
            CaseLabel::VII => "VII",
            CaseLabel::VIII => "VIII",
            CaseLabel::IX => "IX",
        }
    }

    /// A representative quartic form for the case.
    pub fn seed(self) -> BPoly {
        let f = |t: &[(u32, u32, i64)]| BPoly::from_ints(t);
        match self {
            CaseLabel::I => f(&[(4, 0, 1), (2, 2, -6), (0, 4, 1)]),
            CaseLabel::II => f(&[(4, 0, 1), (0, 4, 1)]),
            CaseLabel::III => f(&[(4, 0, 1), (0, 4, -1)]),
            CaseLabel::IV => f(&[(2, 2, 6), (0, 4, 1)]),
            CaseLabel::V => f(&[(2, 2, 6), (0, 4, -1)]),
            CaseLabel::VI => f(&[(4, 0, 1), (2, 2, 2), (0, 4, 1)]),
            CaseLabel::VII => f(&[(2, 2, 6)]),
            CaseLabel::VIII => f(&[(3, 1, 4)]),
            CaseLabel::IX => f(&[(4, 0, 1)]),
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One projective root class of the quartic part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootClass {
    pub multiplicity: u32,
    pub real: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuarticCase {
    pub label: CaseLabel,
    /// Projective roots of the quartic part, complex roots listed once per
    /// root (so a conjugate pair appears twice), sorted.
    pub pattern: Vec<RootClass>,
}

/// Case of the degree-4 homogeneous part of `p`.
pub fn quartic_case(p: &BPoly) -> Result<QuarticCase> {
    let degree = p.total_degree();
    if degree != Some(4) {
        return Err(Error::DegreeNotFour(degree));
    }
    let q4 = p.homogeneous_part(4);
    if q4.is_zero() {
        return Err(Error::QuarticPartZero);
    }
    // The root [1 : 0] has multiplicity equal to the power of y dividing q4.
    let at_infinity = q4.terms().map(|(_, j, _)| j).min().unwrap_or(0);
    let mut pattern = Vec::new();
    if at_infinity > 0 {
        pattern.push(RootClass { multiplicity: at_infinity, real: true });
    }
    let affine = q4.specialize(Var::Y, &Rat::one());
    for (part, m) in squarefree_decomposition(&affine)? {
        let degree = part.degree().unwrap_or(0);
        let real = count_real_roots(&part, None)?;
        pattern.extend((0..real).map(|_| RootClass { multiplicity: m, real: true }));
        pattern.extend((real..degree).map(|_| RootClass { multiplicity: m, real: false }));
    }
    pattern.sort();
    let label = label_for(&pattern)?;
    Ok(QuarticCase { label, pattern })
}

fn label_for(pattern: &[RootClass]) -> Result<CaseLabel> {
    let mults: Vec<u32> = {
        // Multiplicities of distinct roots, descending.
        let mut m: Vec<u32> = pattern.iter().map(|r| r.multiplicity).collect();
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    };
    let real_with = |k: u32| pattern.iter().filter(|r| r.multiplicity == k && r.real).count();
    let label = match mults.as_slice() {
        [1, 1, 1, 1] => match real_with(1) {
            4 => CaseLabel::I,
            2 => CaseLabel::III,
            _ => CaseLabel::II,
        },
        [2, 1, 1] if real_with(1) == 2 => CaseLabel::V,
        [2, 1, 1] => CaseLabel::IV,
        [2, 2] if real_with(2) == 2 => CaseLabel::VII,
        [2, 2] => CaseLabel::VI,
        [3, 1] => CaseLabel::VIII,
        [4] => CaseLabel::IX,
        _ => {
            return Err(Error::PreconditionFailed(format!(
                "root pattern {pattern:?} does not describe a binary quartic"
            )))
        }
    };
    Ok(label)
}

/// The canonical degree-4 submersions with a disconnected level set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `y + x y^2 + y^4`.
    One,
    /// `y + a02 y^2 + x y^3` with `a02` in `{0, 1}`.
    Two(Rat),
    /// `y + x^2 y^2`.
    Three,
    /// `y + a02 y^2 + y^3 + x^2 y^2` with `a02^2 < 3`.
    Four(Rat),
}

impl Family {
    /// Validates the parameter: required for families 2 and 4, absent for
    /// 1 and 3.
    pub fn new(id: u8, a02: Option<Rat>) -> Result<Family> {
        match (id, a02) {
            (1, None) => Ok(Family::One),
            (3, None) => Ok(Family::Three),
            (2, Some(a)) if a.is_zero() || a.is_one() => Ok(Family::Two(a)),
            (2, Some(a)) => Err(Error::InvalidFamily(format!("family 2 needs a02 in {{0, 1}}, got {a}"))),
            (4, Some(a)) if &a * &a < int(3) => Ok(Family::Four(a)),
            (4, Some(a)) => Err(Error::InvalidFamily(format!("family 4 needs a02^2 < 3, got {a}"))),
            (1 | 3, Some(_)) => Err(Error::InvalidFamily(format!("family {id} takes no parameter"))),
            (2 | 4, None) => Err(Error::InvalidFamily(format!("family {id} needs a02"))),
            _ => Err(Error::InvalidFamily(format!("no family {id}"))),
        }
    }

    pub fn id(&self) -> u8 {
        match self {
            Family::One => 1,
            Family::Two(_) => 2,
            Family::Three => 3,
            Family::Four(_) => 4,
        }
    }

    pub fn a02(&self) -> Option<&Rat> {
        match self {
            Family::Two(a) | Family::Four(a) => Some(a),
            Family::One | Family::Three => None,
        }
    }

    pub fn polynomial(&self) -> BPoly {
        let y = BPoly::from_ints(&[(0, 1, 1)]);
        let rest = match self {
            Family::One => BPoly::from_ints(&[(1, 2, 1), (0, 4, 1)]),
            Family::Two(a) => &BPoly::monomial(a.clone(), 0, 2) + &BPoly::from_ints(&[(1, 3, 1)]),
            Family::Three => BPoly::from_ints(&[(2, 2, 1)]),
            Family::Four(a) => {
                &BPoly::monomial(a.clone(), 0, 2) + &BPoly::from_ints(&[(0, 3, 1), (2, 2, 1)])
            }
        };
        &y + &rest
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.a02() {
            Some(a) => write!(f, "family {} (a02 = {a})", self.id()),
            None => write!(f, "family {}", self.id()),
        }
    }
}

/// `p = equivalence.apply_to(family.polynomial())`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMatch {
    pub family: Family,
    pub equivalence: AffineEquivalence,
}

/// Recognizes `p` as `M F(T(x, y)) + N` for a canonical family `F`, where
/// `T` is a rational translation followed by a diagonal scaling, possibly
/// after swapping the variables. Matches needing irrational scalings are
/// not found.
pub fn canonical_family_match(p: &BPoly) -> Option<FamilyMatch> {
    if p.total_degree() != Some(4) {
        return None;
    }
    for swapped in [false, true] {
        let q = if swapped { p.swap_vars() } else { p.clone() };
        let candidates = [match_one(&q), match_two(&q), match_three(&q), match_four(&q)];
        for found in candidates.into_iter().flatten() {
            let Proposal { family, scale, s, t, translation, shift } = found;
            // q(x, y) = q'(x - u0, y - v0) with q' = M F(s x, t y) + N.
            let t_map = AffineMap::diagonal(s, t).compose(&translation.inverse());
            let full = if swapped { t_map.compose(&AffineMap::swap()) } else { t_map };
            let equivalence = AffineEquivalence::new(full.inverse(), scale, shift).ok()?;
            if equivalence.apply_to(&family.polynomial()) == *p {
                return Some(FamilyMatch { family, equivalence });
            }
        }
    }
    None
}

struct Proposal {
    family: Family,
    scale: Rat,
    s: Rat,
    t: Rat,
    translation: AffineMap,
    shift: Rat,
}

/// The translated polynomial `q(x + u0, y + v0)` split into its constant
/// term and the rest, when the rest has support in `allowed`.
struct Translated {
    core: BPoly,
    map: AffineMap,
    shift: Rat,
}

fn translated(q: &BPoly, u0: Rat, v0: Rat, allowed: &[(u32, u32)]) -> Option<Translated> {
    let map = AffineMap::translation(u0, v0);
    let moved = q.affine_substitute(&map);
    let shift = moved.constant_term();
    let core = &moved - &BPoly::constant(shift.clone());
    let fits = core.terms().all(|(i, j, _)| allowed.contains(&(i, j)));
    fits.then_some(Translated { core, map, shift })
}

fn match_one(q: &BPoly) -> Option<Proposal> {
    let (lambda, a12) = (q.coeff(0, 4), q.coeff(1, 2));
    if lambda.is_zero() || a12.is_zero() {
        return None;
    }
    let v0 = -q.coeff(0, 3) / (&lambda * int(4));
    let b02 = q.affine_substitute(&AffineMap::translation(Rat::zero(), v0.clone())).coeff(0, 2);
    let u0 = -b02 / &a12;
    let Translated { core, map: translation, shift } = translated(q, u0, v0, &[(0, 1), (1, 2), (0, 4)])?;
    let c01 = core.coeff(0, 1);
    if c01.is_zero() {
        return None;
    }
    let t = rational_root(&(&lambda / &c01), 3)?;
    let scale = &c01 / &t;
    let s = &a12 / (&scale * &t * &t);
    Some(Proposal { family: Family::One, scale, s, t, translation, shift })
}

fn match_two(q: &BPoly) -> Option<Proposal> {
    let lambda = q.coeff(1, 3);
    if lambda.is_zero() {
        return None;
    }
    let u0 = -q.coeff(0, 3) / &lambda;
    let v0 = -q.coeff(1, 2) / (&lambda * int(3));
    let Translated { core, map: translation, shift } = translated(q, u0, v0, &[(0, 1), (0, 2), (1, 3)])?;
    let (c01, b02) = (core.coeff(0, 1), core.coeff(0, 2));
    if c01.is_zero() {
        return None;
    }
    let (a02, t) = if b02.is_zero() { (Rat::zero(), Rat::one()) } else { (Rat::one(), &b02 / &c01) };
    let scale = &c01 / &t;
    let s = &lambda / (&scale * t.pow(3));
    Some(Proposal { family: Family::Two(a02), scale, s, t, translation, shift })
}

fn match_three(q: &BPoly) -> Option<Proposal> {
    let lambda = q.coeff(2, 2);
    if lambda.is_zero() {
        return None;
    }
    let u0 = -q.coeff(1, 2) / (&lambda * int(2));
    let v0 = -q.coeff(2, 1) / (&lambda * int(2));
    let Translated { core, map: translation, shift } = translated(q, u0, v0, &[(0, 1), (2, 2)])?;
    let c01 = core.coeff(0, 1);
    if c01.is_zero() {
        return None;
    }
    let t = &lambda / &c01;
    let scale = &c01 / &t;
    Some(Proposal { family: Family::Three, scale, s: Rat::one(), t, translation, shift })
}

fn match_four(q: &BPoly) -> Option<Proposal> {
    let lambda = q.coeff(2, 2);
    if lambda.is_zero() {
        return None;
    }
    let u0 = -q.coeff(1, 2) / (&lambda * int(2));
    let v0 = -q.coeff(2, 1) / (&lambda * int(2));
    let Translated { core, map: translation, shift } = translated(q, u0, v0, &[(0, 1), (0, 2), (0, 3), (2, 2)])?;
    let (c01, b02, a03) = (core.coeff(0, 1), core.coeff(0, 2), core.coeff(0, 3));
    if c01.is_zero() || a03.is_zero() {
        return None;
    }
    let t_abs = rational_root(&(&a03 / &c01), 2)?;
    for t in [t_abs.clone(), -t_abs] {
        let scale = &c01 / &t;
        let Some(s) = rational_root(&(&lambda / (&scale * &t * &t)), 2) else {
            continue;
        };
        let a02 = &b02 / (&scale * &t * &t);
        if let Ok(family) = Family::new(4, Some(a02)) {
            return Some(Proposal { family, scale, s, t, translation, shift: shift.clone() });
        }
    }
    None
}

/// The rational `k`-th root of `r`, when there is one (positive for even `k`).
fn rational_root(r: &Rat, k: u32) -> Option<Rat> {
    if r.is_zero() {
        return None;
    }
    if r.is_negative() {
        return (k % 2 == 1).then(|| rational_root(&-r, k)).flatten().map(|v| -v);
    }
    let root = |n: &BigInt| {
        let m = n.nth_root(k);
        (num_traits::Pow::pow(&m, k) == *n).then_some(m)
    };
    Some(Rat::new(root(r.numer())?, root(r.denom())?))
}

/// A curve that meets the level set nowhere and has the two points on
/// opposite sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separator {
    /// The graph `y = num(x) / den(x)` with `den` free of real roots.
    Graph { num: UPoly, den: UPoly },
    /// The boundary of the open quadrant `{x_sign * x > 0, y_sign * y > 0}`.
    QuadrantBoundary { x_sign: Sign, y_sign: Sign },
}

impl Separator {
    /// Which side of the separator the point lies on; `None` on the curve.
    pub fn side(&self, x: &Rat, y: &Rat) -> Option<bool> {
        match self {
            Separator::Graph { num, den } => {
                let s = Sign::of(&(y * den.eval(x) - num.eval(x))).times(den.sign_at(x));
                (s != Sign::Zero).then_some(s == Sign::Positive)
            }
            Separator::QuadrantBoundary { x_sign, y_sign } => {
                let (sx, sy) = (Sign::of(x).times(*x_sign), Sign::of(y).times(*y_sign));
                if (sx == Sign::Zero && sy != Sign::Negative) || (sy == Sign::Zero && sx != Sign::Negative) {
                    return None;
                }
                Some(sx == Sign::Positive && sy == Sign::Positive)
            }
        }
    }

    /// Whether `f` has no zero on the separator, by univariate root counting.
    pub fn avoids_zeros_of(&self, f: &BPoly) -> bool {
        match self {
            Separator::Graph { num, den } => {
                if den.is_zero() || count_real_roots(den, None) != Ok(0) {
                    return false;
                }
                // den^d f(x, num/den) with d = deg_y f is a polynomial in x.
                let d = f.degree_in(Var::Y).unwrap_or(0) as usize;
                let on_curve = f
                    .coeffs_in(Var::Y)
                    .iter()
                    .enumerate()
                    .fold(UPoly::zero(), |acc, (j, c)| {
                        &acc + &(&(c * &num.pow(j as u32)) * &den.pow((d - j) as u32))
                    });
                !on_curve.is_zero() && count_real_roots(&on_curve, None) == Ok(0)
            }
            Separator::QuadrantBoundary { x_sign, y_sign } => {
                let ray = |v: Var, s: Sign| {
                    // f on the ray {other = 0, s * v >= 0}, reparametrized by s * v.
                    let g = f.specialize(v.other(), &Rat::zero());
                    let g = if s == Sign::Negative { g.compose(&UPoly::from_ints(&[0, -1])) } else { g };
                    !g.is_zero() && !g.eval(&Rat::zero()).is_zero() && Sturm::new(&g).count_above(&Rat::zero()) == 0
                };
                ray(Var::X, *x_sign) && ray(Var::Y, *y_sign)
            }
        }
    }
}

impl fmt::Display for Separator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Separator::Graph { num, den } => {
                write!(f, "graph y = ({}) / ({})", num.to_string().replace('t', "x"), den.to_string().replace('t', "x"))
            }
            Separator::QuadrantBoundary { x_sign, y_sign } => {
                let s = |v: &str, sign: &Sign| match sign {
                    Sign::Negative => format!("{v} < 0"),
                    _ => format!("{v} > 0"),
                };
                write!(f, "boundary of the quadrant {}, {}", s("x", x_sign), s("y", y_sign))
            }
        }
    }
}

/// Two points of one level set separated by a curve the level set avoids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisconnectionCertificate {
    pub family: Family,
    pub level: Rat,
    pub point_a: (Rat, Rat),
    pub point_b: (Rat, Rat),
    pub separator: Separator,
}

impl DisconnectionCertificate {
    /// Exact check: both points lie on the level set, on opposite sides of
    /// the separator, and the level set does not meet the separator.
    pub fn verify(&self) -> bool {
        let p = self.family.polynomial();
        let shifted = &p - &BPoly::constant(self.level.clone());
        let on_level = |(x, y): &(Rat, Rat)| shifted.eval(x, y).is_zero();
        let (Some(sa), Some(sb)) = (
            self.separator.side(&self.point_a.0, &self.point_a.1),
            self.separator.side(&self.point_b.0, &self.point_b.1),
        ) else {
            return false;
        };
        on_level(&self.point_a) && on_level(&self.point_b) && sa != sb && self.separator.avoids_zeros_of(&shifted)
    }
}

/// The stored disconnection recipe for a family.
pub fn disconnection_certificate(family: &Family) -> DisconnectionCertificate {
    let bump = |c: i64| Separator::Graph { num: UPoly::from_ints(&[c]), den: UPoly::from_ints(&[1, 0, 1]) };
    let (level, point_a, point_b, separator) = match family {
        Family::One => (int(0), (int(0), int(0)), (int(-2), int(1)), bump(1)),
        Family::Two(a) if a.is_zero() => (int(0), (int(0), int(0)), (int(-1), int(1)), bump(1)),
        Family::Two(_) => (int(0), (int(0), int(0)), (int(-2), int(1)), bump(1)),
        Family::Three => (
            int(0),
            (int(0), int(0)),
            (int(2), rat(-1, 4)),
            Separator::Graph { num: UPoly::from_ints(&[-1]), den: UPoly::from_ints(&[2, 0, 2]) },
        ),
        Family::Four(a) => (
            a + int(2),
            (int(2), int(-1)),
            (int(-2), int(-1)),
            Separator::QuadrantBoundary { x_sign: Sign::Positive, y_sign: Sign::Negative },
        ),
    };
    DisconnectionCertificate { family: family.clone(), level, point_a, point_b, separator }
}

/// Why a submersion has all level sets connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectedReason {
    /// Degree at most 2.
    Elementary,
    /// `p` depends on one variable and is strictly monotone in it.
    OneVariable(Var),
    Certificate(ConnectednessCertificate),
}

impl fmt::Display for ConnectedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectedReason::Elementary => f.write_str("Elementary"),
            ConnectedReason::OneVariable(v) => write!(f, "OneVariable({v})"),
            ConnectedReason::Certificate(c) => match c.rule {
                Some(rule) => write!(f, "{rule:?}"),
                None => f.write_str("Undetermined"),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    NotSubmersion(WitnessBox),
    SubmersionAllConnected(ConnectedReason),
    SubmersionDisconnected { family_match: FamilyMatch, hrc: String },
    Undetermined { case: Option<CaseLabel>, note: String },
}

/// Decides a polynomial of total degree at most 4: critical points first,
/// then connectedness rules, then the canonical families.
pub fn classify_degree4(p: &BPoly) -> Result<Verdict> {
    let degree = match p.total_degree() {
        None | Some(0) => return Err(Error::ConstantInput),
        Some(d) if d > 4 => return Err(Error::DegreeTooHigh { found: d, max: 4 }),
        Some(d) => d,
    };
    if let Some(witness) = critical_point_exists(p)? {
        return Ok(Verdict::NotSubmersion(witness));
    }
    for v in [Var::X, Var::Y] {
        if !p.depends_on(v.other()) {
            // No critical point: the derivative never vanishes, so p is
            // strictly monotone in v and each level set is a line or empty.
            return Ok(Verdict::SubmersionAllConnected(ConnectedReason::OneVariable(v)));
        }
    }
    if degree <= 2 {
        return Ok(Verdict::SubmersionAllConnected(ConnectedReason::Elementary));
    }
    let cert = decide_connected(p, &Rat::zero());
    if cert.tag == ConnectednessTag::ConnectedAllLevels {
        return Ok(Verdict::SubmersionAllConnected(ConnectedReason::Certificate(cert)));
    }
    if let Some(found) = canonical_family_match(p) {
        let hrc = HrcRegion::for_family(&found.family).to_string();
        return Ok(Verdict::SubmersionDisconnected { family_match: found, hrc });
    }
    let case = if degree == 4 { Some(quartic_case(p)?.label) } else { None };
    let note = match case {
        Some(label) => format!(
            "submersion of degree 4, quartic case {label}: no connectedness rule applies and no rational match to a canonical family"
        ),
        None => format!("submersion of degree {degree}: no connectedness rule applies"),
    };
    Ok(Verdict::Undetermined { case, note })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, u32, i64)]) -> BPoly {
        BPoly::from_ints(terms)
    }

    #[test]
    fn quartic_case_examples() {
        assert_eq!(quartic_case(&p(&[(0, 1, 1), (2, 2, 1)])).unwrap().label, CaseLabel::VII);
        assert_eq!(quartic_case(&p(&[(0, 1, 1), (1, 2, 1), (0, 4, 1)])).unwrap().label, CaseLabel::IX);
        assert_eq!(quartic_case(&p(&[(0, 1, 1), (4, 0, 1), (0, 4, 1)])).unwrap().label, CaseLabel::II);
        assert_eq!(quartic_case(&p(&[(0, 1, 1)])), Err(Error::DegreeNotFour(Some(1))));
    }

    #[test]
    fn seeds_have_their_labels() {
        for label in CaseLabel::ALL {
            assert_eq!(quartic_case(&label.seed()).unwrap().label, label);
        }
    }

    #[test]
    fn families_validate_parameters() {
        assert!(Family::new(2, Some(int(2))).is_err());
        assert!(Family::new(4, Some(int(2))).is_err());
        assert!(Family::new(4, Some(rat(3, 2))).is_ok());
        assert!(Family::new(1, Some(int(0))).is_err());
        assert!(Family::new(5, None).is_err());
    }

    #[test]
    fn canonical_match_examples() {
        let m = canonical_family_match(&p(&[(0, 1, 1), (1, 2, 1), (0, 4, 1)])).unwrap();
        assert_eq!(m.family, Family::One);
        let m = canonical_family_match(&p(&[(0, 1, 1), (0, 2, 1), (1, 3, 1)])).unwrap();
        assert_eq!(m.family, Family::Two(int(1)));
        assert!(canonical_family_match(&p(&[(0, 1, 1), (0, 2, 2), (0, 3, 1), (2, 2, 1)])).is_none());
        let m = canonical_family_match(&p(&[(0, 1, 1), (0, 2, 1), (0, 3, 1), (2, 2, 1)])).unwrap();
        assert_eq!(m.family, Family::Four(int(1)));
        // Family shapes without the linear term are not submersions of that family.
        assert!(canonical_family_match(&p(&[(1, 2, -1), (0, 4, 1)])).is_none());
        assert!(canonical_family_match(&p(&[(0, 2, 1), (1, 3, 1)])).is_none());
        assert!(canonical_family_match(&p(&[(2, 2, 1)])).is_none());
    }

    #[test]
    fn canonical_match_through_affine_maps() {
        let t = AffineMap::new(int(2), int(0), int(0), rat(-1, 3), int(1), int(5)).unwrap();
        for family in [Family::One, Family::Two(int(0)), Family::Two(int(1)), Family::Three, Family::Four(rat(1, 2))] {
            let e = AffineEquivalence::new(t.clone(), rat(-3, 7), int(4)).unwrap();
            let q = e.apply_to(&family.polynomial()).swap_vars();
            let m = canonical_family_match(&q).unwrap_or_else(|| panic!("{family}: {q}"));
            assert_eq!(m.family, family);
            assert_eq!(m.equivalence.apply_to(&family.polynomial()), q);
        }
    }

    #[test]
    fn disconnection_certificates_verify() {
        for family in [Family::One, Family::Two(int(0)), Family::Two(int(1)), Family::Three, Family::Four(int(0)), Family::Four(rat(-3, 2)), Family::Four(rat(5, 3))] {
            let cert = disconnection_certificate(&family);
            assert!(cert.verify(), "{family}");
        }
        let mut cert = disconnection_certificate(&Family::Three);
        cert.separator = Separator::Graph { num: UPoly::from_ints(&[-2]), den: UPoly::one() };
        assert!(!cert.verify());
    }

    #[test]
    fn classify_examples() {
        match classify_degree4(&p(&[(0, 1, 1), (2, 2, 1)])).unwrap() {
            Verdict::SubmersionDisconnected { family_match, .. } => {
                assert_eq!(family_match.family, Family::Three)
            }
            v => panic!("{v:?}"),
        }
        match classify_degree4(&p(&[(0, 1, 1), (2, 2, 1), (4, 0, 1)])).unwrap() {
            Verdict::SubmersionAllConnected(ConnectedReason::Certificate(c)) => {
                assert_eq!(c.rule, Some(crate::levelsets::Rule::Quadratic22tt))
            }
            v => panic!("{v:?}"),
        }
        let q = p(&[(1, 1, 1), (0, 3, 1), (4, 0, 1), (2, 2, -1)]);
        match classify_degree4(&q).unwrap() {
            Verdict::NotSubmersion(w) => assert!(w.brackets_zero_of_gradient(&q)),
            v => panic!("{v:?}"),
        }
        assert_eq!(classify_degree4(&BPoly::constant(int(2))), Err(Error::ConstantInput));
        assert_eq!(
            classify_degree4(&p(&[(5, 0, 1)])),
            Err(Error::DegreeTooHigh { found: 5, max: 4 })
        );
    }

    #[test]
    fn low_degree_verdicts() {
        assert_eq!(
            classify_degree4(&p(&[(1, 0, 1), (0, 2, 1)])).unwrap(),
            Verdict::SubmersionAllConnected(ConnectedReason::Elementary)
        );
        assert_eq!(
            classify_degree4(&p(&[(3, 0, 1), (1, 0, 1)])).unwrap(),
            Verdict::SubmersionAllConnected(ConnectedReason::OneVariable(Var::X))
        );
        // y + x y^2 is a cubic submersion with disconnected level sets.
        assert!(matches!(
            classify_degree4(&p(&[(0, 1, 1), (1, 2, 1)])).unwrap(),
            Verdict::Undetermined { case: None, .. }
        ));
    }
}
