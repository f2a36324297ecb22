//! Exact decision procedures for planar polynomial submersions.
//!
//! Given a polynomial `p(x, y)` with rational coefficients, the crate decides
//! whether `p` has a critical point, whether its level sets are connected,
//! which canonical degree-4 family it belongs to, and refutes candidate
//! Jacobian partners `q` for the disconnected families. Every answer carries
//! a certificate that can be checked with exact rational arithmetic.

pub mod bareiss;
pub mod classify;
pub mod error;
pub mod hrc;
pub mod levelsets;
pub mod poly;
pub mod positivity;
pub mod realroots;
pub mod subres;
pub mod zeros;

pub use error::{Error, Result};
pub use poly::{int, rat, AffineEquivalence, AffineMap, BPoly, Rat, RatInterval, Sign, UPoly, Var};
