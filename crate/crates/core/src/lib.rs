//! Decides real-analyticity of meromorphic germs `F = g/h` at the origin by
//! the finite monomial-curve criterion, over exact rational arithmetic.
//!
//! The crate is organized in five layers:
//!
//! - [`algebra`]: exponent vectors, truncated multivariate and univariate
//!   series, monomial substitution matrices.
//! - [`semigroup`]: numerical semigroups, Apéry sets, Frobenius numbers, and
//!   the unique-representation tuple search.
//! - [`blowup`]: elementary monomial coordinate changes, their pullback
//!   calculus, liftability, and monomial-curve transport.
//! - [`principalize`]: monomial-ideal principalization by chart search and
//!   regularization of series tuples.
//! - [`analyticity`]: the curve test, witness construction and transport,
//!   and the top-level `decide` pipeline producing a checkable verdict.
//!
//! Everything is an immutable value and every operation is a pure function,
//! so all types can be shared freely across threads.

pub mod algebra;
pub mod analyticity;
pub mod blowup;
pub mod error;
pub mod principalize;
pub mod semigroup;

pub use algebra::{ExponentVector, MonomialMap, MultiSeries, UniSeries};
pub use analyticity::{
    curve_check, decide, liftability_scan, required_truncation, step3_witness, verify_witness,
    witness_transport, AnalyticCertificate, CertificateKind, CurveCheckReport, DerivationStep,
    InconclusiveReason, MeromorphicGerm, Step3Witness, Verdict,
};
pub use blowup::{ElementaryMove, Lift, MonomialCurve, MoveSequence};
pub use error::{Error, Result};
pub use principalize::{
    principalize_all_leaves, principalize_search, regularize_tuple, support_ideal, MonomialIdeal,
    PrincipalizationResult, RegularizedTuple,
};
pub use semigroup::{
    choose_unique_tuple, enumerate_representations, prime_tuple_candidates, NumericalSemigroup,
};
