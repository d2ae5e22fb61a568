//! Exact-arithmetic monomial and truncated power-series algebra: the
//! substrate every other module computes over.
//!
//! All types here are immutable values and all operations are pure, so
//! instances can be shared and used concurrently without restriction.

mod exponent;
mod map;
mod multi;
mod uni;

pub use exponent::ExponentVector;
pub use map::MonomialMap;
pub use multi::{MultiSeries, EXACT_TRUNCATION};
pub use uni::UniSeries;
