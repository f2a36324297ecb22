use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::fiber::{shared_fiber_root, FiberRoot};
use crate::error::{Error, Result};
use crate::poly::{BPoly, Rat, RatInterval, UPoly, Var};
use crate::realroots::{real_roots, simplest_between, Bound, RealAlgebraic};
use crate::subres::resultant;

/// A box `x × y` containing a real common zero of both partial derivatives.
/// Exact coordinates are given when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessBox {
    pub x: RatInterval,
    pub y: RatInterval,
    pub x_exact: Option<Rat>,
    pub y_exact: Option<Rat>,
}

impl WitnessBox {
    fn from_fiber(root: FiberRoot) -> Self {
        let x = match &root.alpha_exact {
            Some(r) => RatInterval::point(r.clone()),
            None => RatInterval::new(root.alpha.lo().clone(), root.alpha.hi().clone()),
        };
        WitnessBox { x, y: root.t, x_exact: root.alpha_exact, y_exact: root.t_exact }
    }

    fn swapped(self) -> Self {
        WitnessBox { x: self.y, y: self.x, x_exact: self.y_exact, y_exact: self.x_exact }
    }

    pub fn width(&self) -> Rat {
        self.x.width().max(self.y.width())
    }

    /// Interval evaluation of both partials over the box contains zero.
    pub fn brackets_zero_of_gradient(&self, p: &BPoly) -> bool {
        [Var::X, Var::Y].iter().all(|&v| {
            RatInterval::eval_bpoly(&p.diff(v), &self.x, &self.y).contains_zero()
        })
    }
}

/// Default witness box width, `2^-20`.
pub fn default_width() -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << 20)
}

/// Whether `p_x` and `p_y` share a real zero, with a box around one.
pub fn critical_point_exists(p: &BPoly) -> Result<Option<WitnessBox>> {
    critical_point_exists_with_width(p, &default_width())
}

pub fn critical_point_exists_with_width(p: &BPoly, width: &Rat) -> Result<Option<WitnessBox>> {
    if p.is_constant() {
        return Err(Error::ConstantInput);
    }
    let px = p.diff(Var::X);
    let py = p.diff(Var::Y);
    if px.is_zero() || py.is_zero() {
        // One-variable polynomial: critical points are the roots of the one
        // nonzero partial, at any value of the other coordinate.
        let (v, d) = if px.is_zero() { (Var::Y, &py) } else { (Var::X, &px) };
        let u = d.as_univariate(v).expect("depends on one variable");
        let Some(root) = real_roots(&u)?.into_iter().next() else {
            return Ok(None);
        };
        let fiber = FiberRoot {
            alpha_exact: root.as_rat(),
            alpha: root.refined(width),
            t: RatInterval::point(Rat::zero()),
            t_exact: Some(Rat::zero()),
        };
        let b = WitnessBox::from_fiber(fiber);
        return Ok(Some(if v == Var::X { b } else { b.swapped() }));
    }
    if eliminate_x_is_cheaper(&px, &py) {
        let found = common_real_zero(&px.swap_vars(), &py.swap_vars(), width)?;
        return Ok(found.map(WitnessBox::swapped));
    }
    common_real_zero(&px, &py, width)
}

/// Degree bound for the resultant eliminating `v`.
fn resultant_degree_estimate(a: &BPoly, b: &BPoly, v: Var) -> u32 {
    let d = |p: &BPoly, w: Var| p.degree_in(w).unwrap_or(0);
    d(a, v) * d(b, v.other()) + d(b, v) * d(a, v.other())
}

fn eliminate_x_is_cheaper(a: &BPoly, b: &BPoly) -> bool {
    resultant_degree_estimate(a, b, Var::X) < resultant_degree_estimate(a, b, Var::Y)
}

/// Real common zero of two nonzero polynomials, eliminating `y`.
fn common_real_zero(a0: &BPoly, b0: &BPoly, width: &Rat) -> Result<Option<WitnessBox>> {
    let g = a0.gcd(b0);
    if !g.is_constant() {
        if let Some(w) = curve_real_point(&g, width)? {
            return Ok(Some(w));
        }
    }
    let a = a0.exact_div(&g).expect("gcd divides");
    let b = b0.exact_div(&g).expect("gcd divides");
    if !a.depends_on(Var::Y) && !b.depends_on(Var::Y) {
        // Coprime polynomials in x alone have no common root.
        return Ok(None);
    }
    let r = resultant(&a, &b, Var::Y)?;
    let (ac, bc) = (a.coeffs_in(Var::Y), b.coeffs_in(Var::Y));
    for alpha in real_roots(&r)? {
        if let Some(root) = shared_fiber_root(&ac, &bc, &alpha, width) {
            return Ok(Some(WitnessBox::from_fiber(root)));
        }
    }
    Ok(None)
}

/// A real point on the curve `g = 0`, if there is one.
fn curve_real_point(g: &BPoly, width: &Rat) -> Result<Option<WitnessBox>> {
    let coeffs = g.coeffs_in(Var::Y);
    let content = coeffs.iter().fold(UPoly::zero(), |acc, c| acc.gcd(c));
    if !content.is_constant() {
        if let Some(alpha) = real_roots(&content)?.into_iter().next() {
            // g(alpha, y) = 0 for every y.
            let fiber = FiberRoot {
                alpha_exact: alpha.as_rat(),
                alpha: alpha.refined(width),
                t: RatInterval::point(Rat::zero()),
                t_exact: Some(Rat::zero()),
            };
            return Ok(Some(WitnessBox::from_fiber(fiber)));
        }
    }
    let prim = BPoly::from_coeffs_in(
        Var::Y,
        &coeffs
            .iter()
            .map(|c| c.exact_div(&content).expect("content divides"))
            .collect::<Vec<_>>(),
    );
    if !prim.depends_on(Var::Y) {
        return Ok(None);
    }
    let dy = prim.diff(Var::Y);
    let sq = prim.exact_div(&prim.gcd(&dy)).expect("gcd divides");
    let sc = sq.coeffs_in(Var::Y);
    // The number of real roots in y is constant between consecutive roots of
    // lead * discriminant; sample each gap and each root.
    let lead = sc.last().expect("depends on y").clone();
    let disc = resultant(&sq, &sq.diff(Var::Y), Var::Y)?;
    let critical = &lead * &disc;
    let roots = real_roots(&critical)?;
    let mut bounds = vec![Bound::NegInf];
    bounds.extend(roots.iter().cloned().map(Bound::Alg));
    bounds.push(Bound::PosInf);
    for gap in bounds.windows(2) {
        let x0 = simplest_between(&gap[0], &gap[1]);
        let alpha = RealAlgebraic::from_rat(&x0);
        if let Some(root) = shared_fiber_root(&sc, &[], &alpha, width) {
            return Ok(Some(WitnessBox::from_fiber(root)));
        }
    }
    for alpha in roots {
        if let Some(root) = shared_fiber_root(&sc, &[], &alpha, width) {
            return Ok(Some(WitnessBox::from_fiber(root)));
        }
    }
    Ok(None)
}
