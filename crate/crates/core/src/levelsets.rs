//! Connectedness certificates for level sets from quadratic and cubic
//! discriminants, and a strip bound for the zeros of a polynomial.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{int, rat, round_up_dyadic, BPoly, Rat, RatInterval, Sign, UPoly, Var};
use crate::realroots::{count_real_roots, rat_to_f64, real_roots, RealAlgebraic};

/// Coefficients `(A, B, C)` of `p = A v^2 + B v + C` in the main variable
/// `v`, with `Δ = B^2 - 4AC`. All are polynomials in the other variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadDiscriminant {
    pub a: UPoly,
    pub b: UPoly,
    pub c: UPoly,
    pub delta: UPoly,
}

pub fn quad_discriminant(p: &BPoly, mainvar: Var) -> Result<QuadDiscriminant> {
    let deg = p.degree_in(mainvar).unwrap_or(0);
    if deg > 2 {
        return Err(Error::DegreeTooHigh { found: deg, max: 2 });
    }
    let mut coeffs = p.coeffs_in(mainvar);
    coeffs.resize(3, UPoly::zero());
    let (c, b, a) = (coeffs[0].clone(), coeffs[1].clone(), coeffs[2].clone());
    let delta = &(&b * &b) - &(&(&a * &c).scale(&int(4)));
    Ok(QuadDiscriminant { a, b, c, delta })
}

/// Discriminant `D = Q^2/4 + P^3/27` of `v^3 + A v^2 + B v + C`, where
/// `P = B - A^2/3` and `Q = C - AB/3 + 2A^3/27`. `D < 0`: three distinct real
/// roots; `D = 0`: a repeated root; `D > 0`: one real root.
pub fn cubic_discriminant(a: &UPoly, b: &UPoly, c: &UPoly) -> UPoly {
    let (pp, q) = cubic_pq(a, b, c);
    &(&q * &q).scale(&rat(1, 4)) + &pp.pow(3).scale(&rat(1, 27))
}

fn cubic_pq(a: &UPoly, b: &UPoly, c: &UPoly) -> (UPoly, UPoly) {
    let pp = b - &(a * a).scale(&rat(1, 3));
    let q = &(c - &(a * b).scale(&rat(1, 3))) + &a.pow(3).scale(&rat(2, 27));
    (pp, q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnectednessTag {
    /// Every level set `p = c` is connected.
    ConnectedAllLevels,
    /// The requested level set is connected.
    ConnectedZeroLevel,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Quadratic2ttt,
    Quadratic22tt,
    Cubic3,
    LinearInY,
}

/// Range of levels a verified hypothesis covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LevelScope {
    GivenLevel,
    AllLevels,
}

/// A hypothesis checked on the certificate data. "Lead" is the leading
/// coefficient in the main variable, "discriminant" the stored `Δ` or `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fact {
    LeadNonzeroConstant,
    LeadHasNoRealRoots,
    LeadHasOneRealRoot,
    /// The next coefficient is nonzero at the root of the lead, so that line
    /// meets every level set in exactly one point.
    LineMeetsLevelOnce,
    DiscriminantOddDegree(usize),
    DiscriminantEvenDegree(usize),
    DiscriminantLeadNegative,
    DiscriminantLeadPositive,
    /// Changing the level changes only terms of degree below the
    /// discriminant's degree, so the parity and sign facts hold at every
    /// level.
    LevelIndependent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectednessCertificate {
    pub tag: ConnectednessTag,
    pub rule: Option<Rule>,
    /// Main variable of the quadratic, cubic or linear form.
    pub var: Option<Var>,
    pub level: Rat,
    /// Coefficients of `p - level` in the main variable, ascending; monic for
    /// the cubic rule.
    pub coeffs: Vec<UPoly>,
    pub discriminant: Option<UPoly>,
    pub facts: Vec<Fact>,
    pub scope: LevelScope,
}

impl ConnectednessCertificate {
    fn undetermined(level: &Rat) -> Self {
        ConnectednessCertificate {
            tag: ConnectednessTag::Undetermined,
            rule: None,
            var: None,
            level: level.clone(),
            coeffs: Vec::new(),
            discriminant: None,
            facts: Vec::new(),
            scope: LevelScope::GivenLevel,
        }
    }

    fn build(rule: Rule, var: Var, level: &Rat, coeffs: Vec<UPoly>, facts: Vec<Fact>) -> Self {
        let discriminant = stored_discriminant(rule, &coeffs);
        let scope = if facts.contains(&Fact::LevelIndependent) {
            LevelScope::AllLevels
        } else {
            LevelScope::GivenLevel
        };
        let tag = match scope {
            LevelScope::AllLevels => ConnectednessTag::ConnectedAllLevels,
            LevelScope::GivenLevel => ConnectednessTag::ConnectedZeroLevel,
        };
        ConnectednessCertificate {
            tag,
            rule: Some(rule),
            var: Some(var),
            level: level.clone(),
            coeffs,
            discriminant,
            facts,
            scope,
        }
    }

    /// Re-checks every stored fact from the stored coefficients alone.
    pub fn check(&self) -> bool {
        let Some(rule) = self.rule else {
            return self.tag == ConnectednessTag::Undetermined;
        };
        if self.discriminant != stored_discriminant(rule, &self.coeffs) {
            return false;
        }
        let expected = match rule {
            Rule::LinearInY => linear_facts(&self.coeffs),
            Rule::Quadratic2ttt => quad_2ttt_facts(&self.coeffs),
            Rule::Quadratic22tt => quad_22tt_facts(&self.coeffs),
            Rule::Cubic3 => cubic_facts(&self.coeffs),
        };
        let Some(expected) = expected else {
            return false;
        };
        let all_levels = self.scope == LevelScope::AllLevels;
        self.facts.iter().all(|f| expected.contains(f))
            && required_facts(rule).iter().all(|f| fact_present(&self.facts, f))
            && (!all_levels || self.facts.contains(&Fact::LevelIndependent))
            && (self.tag == ConnectednessTag::ConnectedAllLevels) == all_levels
    }

    /// [`ConnectednessCertificate::check`] plus agreement of the stored
    /// coefficients with `p`.
    pub fn revalidate(&self, p: &BPoly) -> bool {
        let (Some(rule), Some(var)) = (self.rule, self.var) else {
            return self.check();
        };
        match level_coeffs(p, &self.level, var, rule == Rule::Cubic3) {
            Some(c) => c == self.coeffs && self.check(),
            None => false,
        }
    }
}

/// Coefficients of `p - level` in `var`; for the cubic rule divided by a
/// constant leading coefficient.
fn level_coeffs(p: &BPoly, level: &Rat, var: Var, monic: bool) -> Option<Vec<UPoly>> {
    let shifted = p - &BPoly::constant(level.clone());
    let mut coeffs = shifted.coeffs_in(var);
    if monic {
        let lead = coeffs.last()?;
        if !lead.is_constant() || lead.is_zero() {
            return None;
        }
        let inv = lead.coeff(0).recip();
        coeffs = coeffs.iter().map(|c| c.scale(&inv)).collect();
    }
    Some(coeffs)
}

fn stored_discriminant(rule: Rule, coeffs: &[UPoly]) -> Option<UPoly> {
    match rule {
        Rule::LinearInY => None,
        Rule::Quadratic2ttt | Rule::Quadratic22tt => {
            let [c, b, a] = coeffs else { return None };
            Some(&(b * b) - &(a * c).scale(&int(4)))
        }
        Rule::Cubic3 => {
            let [c, b, a, _] = coeffs else { return None };
            Some(cubic_discriminant(a, b, c))
        }
    }
}

fn required_facts(rule: Rule) -> Vec<Fact> {
    match rule {
        Rule::LinearInY => vec![Fact::LeadHasNoRealRoots],
        Rule::Quadratic2ttt => vec![Fact::LeadHasNoRealRoots, Fact::DiscriminantOddDegree(0)],
        Rule::Quadratic22tt => vec![
            Fact::LeadHasOneRealRoot,
            Fact::LineMeetsLevelOnce,
            Fact::DiscriminantEvenDegree(0),
            Fact::DiscriminantLeadNegative,
        ],
        Rule::Cubic3 => vec![
            Fact::LeadNonzeroConstant,
            Fact::DiscriminantEvenDegree(0),
            Fact::DiscriminantLeadPositive,
        ],
    }
}

/// Presence of a fact, ignoring the degree payload.
fn fact_present(facts: &[Fact], wanted: &Fact) -> bool {
    facts.iter().any(|f| std::mem::discriminant(f) == std::mem::discriminant(wanted))
}

fn no_real_roots(u: &UPoly) -> bool {
    !u.is_zero() && count_real_roots(u, None) == Ok(0)
}

fn deg(u: &UPoly) -> Option<usize> {
    u.degree()
}

/// Facts for `p - level = A v + B` with `A` free of real roots.
fn linear_facts(coeffs: &[UPoly]) -> Option<Vec<Fact>> {
    let [_, a] = coeffs else { return None };
    no_real_roots(a).then(|| vec![Fact::LeadHasNoRealRoots, Fact::LevelIndependent])
}

fn quad_2ttt_facts(coeffs: &[UPoly]) -> Option<Vec<Fact>> {
    let [c, b, a] = coeffs else { return None };
    if !no_real_roots(a) {
        return None;
    }
    let delta = &(b * b) - &(a * c).scale(&int(4));
    let d = deg(&delta)?;
    if d % 2 == 0 {
        return None;
    }
    let mut facts = vec![Fact::LeadHasNoRealRoots, Fact::DiscriminantOddDegree(d)];
    // The level enters Δ as 4·level·A.
    if Some(d) > deg(a) {
        facts.push(Fact::LevelIndependent);
    }
    Some(facts)
}

fn quad_22tt_facts(coeffs: &[UPoly]) -> Option<Vec<Fact>> {
    let [c, b, a] = coeffs else { return None };
    if a.is_zero() {
        return None;
    }
    let roots = real_roots(a).ok()?;
    let [y1] = roots.as_slice() else { return None };
    // On the line through the root of A the equation is B(y1) v + C(y1) = 0,
    // which has exactly one solution for every level iff B(y1) != 0.
    if y1.sign_of(b) == Sign::Zero {
        return None;
    }
    let delta = &(b * b) - &(a * c).scale(&int(4));
    let d = deg(&delta)?;
    if d % 2 != 0 || delta.lead()?.is_positive() {
        return None;
    }
    let mut facts = vec![
        Fact::LeadHasOneRealRoot,
        Fact::LineMeetsLevelOnce,
        Fact::DiscriminantEvenDegree(d),
        Fact::DiscriminantLeadNegative,
    ];
    if Some(d) > deg(a) {
        facts.push(Fact::LevelIndependent);
    }
    Some(facts)
}

fn cubic_facts(coeffs: &[UPoly]) -> Option<Vec<Fact>> {
    let [c, b, a, lead] = coeffs else { return None };
    if *lead != UPoly::one() {
        return None;
    }
    let disc = cubic_discriminant(a, b, c);
    let d = deg(&disc)?;
    if d % 2 != 0 || !disc.lead()?.is_positive() {
        return None;
    }
    let mut facts = vec![
        Fact::LeadNonzeroConstant,
        Fact::DiscriminantEvenDegree(d),
        Fact::DiscriminantLeadPositive,
    ];
    // The level enters D through Q -> Q - s, changing D by (s^2 - 2sQ)/4.
    let (_, q) = cubic_pq(a, b, c);
    if d > deg(&q).unwrap_or(0) {
        facts.push(Fact::LevelIndependent);
    }
    Some(facts)
}

fn try_rule(p: &BPoly, level: &Rat, rule: Rule, var: Var) -> Option<ConnectednessCertificate> {
    let dv = p.degree_in(var).unwrap_or(0);
    let fits = match rule {
        Rule::LinearInY => dv == 1,
        Rule::Quadratic2ttt | Rule::Quadratic22tt => dv == 2,
        Rule::Cubic3 => dv == 3,
    };
    if !fits {
        return None;
    }
    let coeffs = level_coeffs(p, level, var, rule == Rule::Cubic3)?;
    let facts = match rule {
        Rule::LinearInY => linear_facts(&coeffs),
        Rule::Quadratic2ttt => quad_2ttt_facts(&coeffs),
        Rule::Quadratic22tt => quad_22tt_facts(&coeffs),
        Rule::Cubic3 => cubic_facts(&coeffs),
    }?;
    Some(ConnectednessCertificate::build(rule, var, level, coeffs, facts))
}

/// Tries the linear, 2ttt, 22tt and cubic rules in that order, each with `y`
/// and then `x` as main variable. An all-levels certificate is preferred;
/// otherwise the first certificate for the given level is returned. The
/// rules assume `p` is a submersion; that is not checked here.
pub fn decide_connected(p: &BPoly, level: &Rat) -> ConnectednessCertificate {
    let mut found = Vec::new();
    for rule in [Rule::LinearInY, Rule::Quadratic2ttt, Rule::Quadratic22tt, Rule::Cubic3] {
        for var in [Var::Y, Var::X] {
            if let Some(cert) = try_rule(p, level, rule, var) {
                if cert.tag == ConnectednessTag::ConnectedAllLevels {
                    return cert;
                }
                found.push(cert);
            }
        }
    }
    found.into_iter().next().unwrap_or_else(|| ConnectednessCertificate::undetermined(level))
}

/// Bound `B` with every zero of `p` whose cross coordinate lies in
/// `[lo, hi]` satisfying `|var| <= B`, from `B = 1 + Σ (n A_{n-k})^{1/k}`
/// with `A_i = sup |a_i / a_n|`. Every term is rounded up to a multiple of
/// `2^-16`.
pub fn strip_bound(p: &BPoly, var: Var, interval: (&Rat, &Rat)) -> Result<Rat> {
    let (lo, hi) = interval;
    if lo > hi {
        return Err(Error::EmptyInterval { lo: lo.clone(), hi: hi.clone() });
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs = p.coeffs_in(var);
    let n = coeffs.len() - 1;
    let an = &coeffs[n];
    if an.eval(lo).is_zero() || an.eval(hi).is_zero() {
        return Err(Error::LeadingCoeffVanishesOnStrip);
    }
    if lo < hi && count_real_roots(an, Some((lo, hi)))? > 0 {
        return Err(Error::LeadingCoeffVanishesOnStrip);
    }
    let nn = Rat::from_integer(BigInt::from(n));
    let mut bound = Rat::one();
    for k in 1..=n {
        let a = sup_ratio(&coeffs[n - k], an, lo, hi)?;
        bound += root_upper(&(&nn * &a), k as u32);
    }
    Ok(bound)
}

/// Upper bound for `sup |num / den|` on `[lo, hi]`, where `den` has no root
/// there: the maximum over the endpoints and the critical points.
fn sup_ratio(num: &UPoly, den: &UPoly, lo: &Rat, hi: &Rat) -> Result<Rat> {
    if num.is_zero() {
        return Ok(Rat::zero());
    }
    let at = |t: &Rat| (num.eval(t) / den.eval(t)).abs();
    let mut best = at(lo).max(at(hi));
    let crit = &(&num.derivative() * den) - &(num * &den.derivative());
    if crit.is_zero() || lo == hi {
        return Ok(round_up_dyadic(&best, 16));
    }
    for root in real_roots(&crit)? {
        if let Some(b) = ratio_bound_near(num, den, root, lo, hi) {
            best = best.max(b);
        }
    }
    Ok(round_up_dyadic(&best, 16))
}

/// Interval bound on `|num / den|` over the part of the root's isolating
/// interval inside `[lo, hi]`, refined until `den` stays away from zero.
fn ratio_bound_near(
    num: &UPoly,
    den: &UPoly,
    mut root: RealAlgebraic,
    lo: &Rat,
    hi: &Rat,
) -> Option<Rat> {
    loop {
        let a = root.lo().max(lo).clone();
        let b = root.hi().min(hi).clone();
        if a > b {
            return None;
        }
        let j = RatInterval::new(a, b);
        let dj = RatInterval::eval_upoly(den, &j);
        if !dj.contains_zero() {
            let dmin = dj.lo.abs().min(dj.hi.abs());
            return Some(RatInterval::eval_upoly(num, &j).mag() / dmin);
        }
        root.bisect();
    }
}

/// Smallest `m / 2^16 >= x^(1/k)` for `x >= 0`.
fn root_upper(x: &Rat, k: u32) -> Rat {
    if x.is_zero() {
        return Rat::zero();
    }
    let scale = 1u64 << 16;
    let unit = rat(1, scale as i64);
    let guess = rat_to_f64(x).powf(1.0 / f64::from(k));
    let mut m = if guess.is_finite() {
        round_up_dyadic(&Rat::from_float(guess).unwrap_or_else(Rat::one), 16)
    } else {
        round_up_dyadic(&x.clone().max(Rat::one()), 16)
    };
    while m.pow(k as i32) < *x {
        m += &unit;
    }
    while m > unit && (&m - &unit).pow(k as i32) >= *x {
        m -= &unit;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, u32, i64)]) -> BPoly {
        BPoly::from_ints(terms)
    }

    fn up(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn quad_discriminant_examples() {
        // x^2 y^2 + y + x^4 - c in y, with c = 3.
        let q = quad_discriminant(&p(&[(2, 2, 1), (0, 1, 1), (4, 0, 1), (0, 0, -3)]), Var::Y)
            .unwrap();
        assert_eq!(q.a, up(&[0, 0, 1]));
        assert_eq!(q.b, up(&[1]));
        assert_eq!(q.delta, up(&[1, 0, 12, 0, 0, 0, -4]));
        let q = quad_discriminant(&BPoly::y(), Var::Y).unwrap();
        assert_eq!(q.delta, UPoly::one());
        // (1/4) y^2 + x^2 y + x^3 + x^4 - c with c = 2: Δ = -x^3 + 2.
        let poly = &BPoly::from_terms(vec![(0, 2, rat(1, 4))])
            + &p(&[(2, 1, 1), (3, 0, 1), (4, 0, 1), (0, 0, -2)]);
        assert_eq!(quad_discriminant(&poly, Var::Y).unwrap().delta, up(&[2, 0, 0, -1]));
        assert_eq!(
            quad_discriminant(&p(&[(0, 3, 1)]), Var::Y),
            Err(Error::DegreeTooHigh { found: 3, max: 2 })
        );
    }

    #[test]
    fn cubic_discriminant_examples() {
        let z = UPoly::zero();
        assert_eq!(cubic_discriminant(&z, &up(&[-1]), &z), UPoly::constant(rat(-1, 27)));
        assert_eq!(cubic_discriminant(&z, &z, &z), z);
        assert_eq!(cubic_discriminant(&z, &z, &up(&[2])), UPoly::one());
    }

    #[test]
    fn linear_in_y_certificate() {
        let poly = p(&[(0, 1, 1), (2, 1, 1), (4, 0, 1)]);
        let cert = decide_connected(&poly, &int(5));
        assert_eq!(cert.tag, ConnectednessTag::ConnectedAllLevels);
        assert_eq!(cert.rule, Some(Rule::LinearInY));
        assert!(cert.revalidate(&poly));
    }

    #[test]
    fn quadratic_22tt_certificate() {
        let poly = p(&[(0, 1, 1), (2, 2, 1), (4, 0, 1)]);
        let cert = decide_connected(&poly, &int(0));
        assert_eq!(cert.tag, ConnectednessTag::ConnectedAllLevels);
        assert_eq!(cert.rule, Some(Rule::Quadratic22tt));
        assert_eq!(cert.var, Some(Var::Y));
        let d = cert.discriminant.clone().unwrap();
        assert_eq!(d.degree(), Some(6));
        assert_eq!(d.lead(), Some(&int(-4)));
        assert!(cert.revalidate(&poly));
        assert!(!cert.revalidate(&(&poly + &BPoly::x())));
    }

    #[test]
    fn family_three_is_undetermined() {
        let cert = decide_connected(&p(&[(0, 1, 1), (2, 2, 1)]), &int(0));
        assert_eq!(cert.tag, ConnectednessTag::Undetermined);
        assert!(cert.check());
    }

    #[test]
    fn quadratic_2ttt_certificate() {
        // (1 + y^2) x^2 + y^3: Δ = -4 (1 + y^2) y^3 has odd degree 5.
        let poly = p(&[(2, 0, 1), (2, 2, 1), (0, 3, 1)]);
        let cert = decide_connected(&poly, &int(1));
        assert_eq!(cert.rule, Some(Rule::Quadratic2ttt));
        assert_eq!(cert.var, Some(Var::X));
        assert_eq!(cert.tag, ConnectednessTag::ConnectedAllLevels);
        assert!(cert.revalidate(&poly));
    }

    #[test]
    fn cubic_certificate() {
        // x^3 + x + y^4: P = 1, Q = y^4 - c, D = (y^4 - c)^2 / 4 + 1/27.
        let poly = p(&[(3, 0, 1), (1, 0, 1), (0, 4, 1)]);
        let cert = decide_connected(&poly, &int(2));
        assert_eq!(cert.rule, Some(Rule::Cubic3));
        assert_eq!(cert.tag, ConnectednessTag::ConnectedAllLevels);
        assert!(cert.revalidate(&poly));
    }

    #[test]
    fn tampered_certificates_fail() {
        let poly = p(&[(0, 1, 1), (2, 2, 1), (4, 0, 1)]);
        let mut cert = decide_connected(&poly, &int(0));
        cert.facts.push(Fact::DiscriminantLeadPositive);
        assert!(!cert.check());
        let mut cert = decide_connected(&poly, &int(0));
        cert.discriminant = Some(UPoly::one());
        assert!(!cert.check());
        let mut cert = decide_connected(&poly, &int(0));
        cert.level = int(1);
        assert!(!cert.revalidate(&poly));
    }

    #[test]
    fn strip_bound_examples() {
        let (zero, one) = (int(0), int(1));
        let b = strip_bound(&p(&[(2, 0, 1), (0, 1, -1)]), Var::X, (&zero, &one)).unwrap();
        assert!(rat_to_f64(&b) >= 1.0 + 2f64.sqrt());
        assert!(b < rat(5, 2));
        let b = strip_bound(&p(&[(1, 0, 1), (0, 1, -1)]), Var::X, (&zero, &one)).unwrap();
        assert!(b >= int(2));
        let b = strip_bound(&p(&[(2, 0, 2)]), Var::X, (&int(-7), &int(3))).unwrap();
        assert_eq!(b, one);
        assert_eq!(
            strip_bound(&p(&[(2, 1, 1), (0, 0, 1)]), Var::X, (&int(-1), &one)),
            Err(Error::LeadingCoeffVanishesOnStrip)
        );
    }

    #[test]
    fn strip_bound_interior_maximum() {
        // a_0 / a_1 = (y - y^2) / 1 peaks at y = 1/2 inside [0, 1].
        let poly = p(&[(1, 0, 1), (0, 1, 1), (0, 2, -1)]);
        let b = strip_bound(&poly, Var::X, (&int(0), &int(1))).unwrap();
        assert!(b >= rat(5, 4));
    }
}
