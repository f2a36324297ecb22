//! Seeded random inputs shared by the integration tests.

#![allow(dead_code)]

use plansub::{int, rat, AffineMap, BPoly, Rat, UPoly};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `n / d` with `|n| <= 9` and `1 <= d <= 4`.
pub fn small_rat(r: &mut impl Rng) -> Rat {
    rat(r.gen_range(-9..=9), r.gen_range(1..=4))
}

pub fn nonzero_rat(r: &mut impl Rng) -> Rat {
    loop {
        let v = small_rat(r);
        if v != int(0) {
            return v;
        }
    }
}

/// Univariate polynomial of degree at most `max_deg`; each coefficient is
/// zero with probability 1/4.
pub fn upoly(r: &mut impl Rng, max_deg: usize) -> UPoly {
    let d = r.gen_range(0..=max_deg);
    UPoly::from_coeffs(
        (0..=d)
            .map(|_| if r.gen_bool(0.25) { int(0) } else { small_rat(r) })
            .collect(),
    )
}

/// Univariate polynomial of exact degree `deg`.
pub fn upoly_exact(r: &mut impl Rng, deg: usize) -> UPoly {
    let mut c: Vec<Rat> = (0..deg).map(|_| small_rat(r)).collect();
    c.push(nonzero_rat(r));
    UPoly::from_coeffs(c)
}

/// Bivariate polynomial with total degree at most `max_deg` and about
/// `terms` random terms.
pub fn bpoly(r: &mut impl Rng, max_deg: u32, terms: usize) -> BPoly {
    BPoly::from_terms((0..terms).map(|_| {
        let i = r.gen_range(0..=max_deg);
        let j = r.gen_range(0..=max_deg - i);
        (i, j, small_rat(r))
    }))
}

/// Invertible linear map with small rational entries.
pub fn linear_map(r: &mut impl Rng) -> AffineMap {
    loop {
        let e: Vec<Rat> = (0..4).map(|_| small_rat(r)).collect();
        if let Ok(m) = AffineMap::linear(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()) {
            return m;
        }
    }
}

/// Invertible affine map with small rational entries.
pub fn affine_map(r: &mut impl Rng) -> AffineMap {
    let l = linear_map(r);
    let [a, b, c, d, _, _] = l.entries();
    AffineMap::new(a.clone(), b.clone(), c.clone(), d.clone(), small_rat(r), small_rat(r))
        .expect("linear part is invertible")
}

pub mod strategies {
    //! proptest strategies mirroring the seeded generators above.

    use plansub::{rat, AffineMap, BPoly, Rat, UPoly};
    use proptest::collection::vec;
    use proptest::prelude::*;

    pub fn small_rat() -> impl Strategy<Value = Rat> {
        (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
    }

    pub fn nonzero_rat() -> impl Strategy<Value = Rat> {
        small_rat().prop_filter("nonzero", |r| *r != rat(0, 1))
    }

    pub fn upoly(max_deg: usize) -> impl Strategy<Value = UPoly> {
        vec(small_rat(), 1..=max_deg + 1).prop_map(UPoly::from_coeffs)
    }

    pub fn bpoly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BPoly> {
        vec((0..=max_deg, 0..=max_deg, small_rat()), 0..=max_terms).prop_map(move |ts| {
            BPoly::from_terms(ts.into_iter().filter(|&(i, j, _)| i + j <= max_deg))
        })
    }

    pub fn affine_map() -> impl Strategy<Value = AffineMap> {
        (vec(small_rat(), 4), small_rat(), small_rat()).prop_filter_map("invertible", |(m, e, f)| {
            AffineMap::new(m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone(), e, f).ok()
        })
    }
}
