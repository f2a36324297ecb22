//! JSON payloads. Rationals are strings (`"-3/4"`), polynomials use the
//! canonical printing, and object keys come out sorted.

use plansub::classify::{ConnectedReason, DisconnectionCertificate, FamilyMatch, Verdict};
use plansub::hrc::{Refutation, RefutationCertificate};
use plansub::levelsets::ConnectednessCertificate;
use plansub::zeros::WitnessBox;
use plansub::{BPoly, Rat, RatInterval, UPoly, Var};
use serde_json::{json, Map, Value};

pub fn rat(r: &Rat) -> Value {
    Value::String(r.to_string())
}

pub fn opt_rat(r: Option<&Rat>) -> Value {
    r.map_or(Value::Null, rat)
}

pub fn rats<'a>(rs: impl IntoIterator<Item = &'a Rat>) -> Value {
    Value::Array(rs.into_iter().map(rat).collect())
}

/// A polynomial in the single variable `v`.
pub fn upoly_in(v: Var, u: &UPoly) -> Value {
    Value::String(BPoly::from_upoly(v, u).to_string())
}

fn interval(i: &RatInterval) -> Value {
    json!([rat(&i.lo), rat(&i.hi)])
}

pub fn witness_box(w: &WitnessBox) -> Value {
    json!({
        "x": interval(&w.x),
        "y": interval(&w.y),
        "x_exact": opt_rat(w.x_exact.as_ref()),
        "y_exact": opt_rat(w.y_exact.as_ref()),
    })
}

pub fn connectedness(c: &ConnectednessCertificate) -> Value {
    // Coefficients are polynomials in the variable that is not the main one.
    let cross = c.var.map_or(Var::X, Var::other);
    json!({
        "tag": format!("{:?}", c.tag),
        "rule": c.rule.map(|r| format!("{r:?}")),
        "var": c.var.map(Var::name),
        "level": rat(&c.level),
        "coeffs": c.coeffs.iter().map(|u| upoly_in(cross, u)).collect::<Vec<_>>(),
        "discriminant": c.discriminant.as_ref().map(|u| upoly_in(cross, u)),
        "facts": c.facts.iter().map(|f| format!("{f:?}")).collect::<Vec<_>>(),
        "scope": format!("{:?}", c.scope),
    })
}

fn family_match(m: &FamilyMatch) -> Value {
    let e = &m.equivalence;
    json!({
        "map": rats(e.map.entries()),
        "scale": rat(&e.scale),
        "shift": rat(&e.shift),
    })
}

pub fn disconnection(d: &DisconnectionCertificate) -> Value {
    json!({
        "level": rat(&d.level),
        "point_a": rats([&d.point_a.0, &d.point_a.1]),
        "point_b": rats([&d.point_b.0, &d.point_b.1]),
        "separator": d.separator.to_string(),
        "verified": d.verify(),
    })
}

/// Fields describing a classification verdict.
pub fn verdict(v: &Verdict) -> Map<String, Value> {
    let mut m = Map::new();
    match v {
        Verdict::NotSubmersion(w) => {
            m.insert("verdict".into(), "NotSubmersion".into());
            m.insert("witness".into(), witness_box(w));
        }
        Verdict::SubmersionAllConnected(reason) => {
            m.insert("verdict".into(), "SubmersionAllConnected".into());
            m.insert("reason".into(), reason.to_string().into());
            let cert = match reason {
                ConnectedReason::Certificate(c) => connectedness(c),
                ConnectedReason::Elementary | ConnectedReason::OneVariable(_) => Value::Null,
            };
            m.insert("certificate".into(), cert);
        }
        Verdict::SubmersionDisconnected { family_match: fm, hrc } => {
            m.insert("verdict".into(), "SubmersionDisconnected".into());
            m.insert("family".into(), fm.family.id().into());
            m.insert("a02".into(), opt_rat(fm.family.a02()));
            m.insert("equivalence".into(), family_match(fm));
            m.insert("hrc".into(), hrc.clone().into());
            let cert = plansub::classify::disconnection_certificate(&fm.family);
            m.insert("disconnection".into(), disconnection(&cert));
        }
        Verdict::Undetermined { case, note } => {
            m.insert("verdict".into(), "Undetermined".into());
            m.insert("case".into(), case.map_or(Value::Null, |c| c.to_string().into()));
            m.insert("note".into(), note.clone().into());
        }
    }
    m
}

/// Fields describing a refutation certificate.
pub fn refutation(c: &RefutationCertificate) -> Map<String, Value> {
    let mut m = Map::new();
    match &c.tag {
        Refutation::PointWitness { x, y, value } => {
            m.insert("tag".into(), "PointWitness".into());
            m.insert("point".into(), rats([x, y]));
            m.insert("value".into(), rat(value));
        }
        Refutation::DivergenceCertificate { tau, .. } => {
            m.insert("tag".into(), "DivergenceCertificate".into());
            m.insert("tau".into(), (*tau).into());
        }
    }
    m.insert("trace".into(), c.trace.clone().into());
    m
}
