//! Exact invariants of symmetric products of surfaces.
//!
//! Betti numbers, Euler characteristics, signatures, χ_y and elliptic
//! genera of `SP^n(X)` are computed from generating functions over a
//! truncated rational power-series kernel, and each formula has a
//! combinatorial oracle in [`topology`] to check it against.

pub mod error;
pub mod invariants;
pub mod orbifold;
pub mod series;
pub mod topology;

pub use error::{Error, Result};
pub use series::{Exponents, Rational, Selector, TruncatedSeries, TruncationProfile, Var};
pub use topology::{CycleType, GradedSpace, SpaceSpec};
