//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by series arithmetic, the chart calculus and the
/// decision pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("series has zero constant term and is not a unit")]
    NotAUnit,

    #[error("monomial {divisor:?} does not divide the term {term:?}")]
    NotDivisible { divisor: Vec<u64>, term: Vec<u64> },

    #[error("monomial curve exponents must be positive")]
    NonpositiveCurveExponent,

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("semigroup generators must be positive")]
    ZeroGenerator,

    #[error("all series in the tuple are zero")]
    AllSeriesZero,

    #[error("no unique-representation tuple found within {budget} candidates")]
    SearchBudgetExceeded { budget: usize },

    #[error("principalization budget of {budget} chart expansions exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("curve lies in the pole locus: the denominator vanishes identically along it")]
    CurveInPoleLocus,

    #[error("stored truncation {stored} is insufficient; need total degree {needed}")]
    InsufficientTruncation { needed: u64, stored: u64 },

    #[error("denominator is zero within its truncation")]
    ZeroDenominator,

    #[error("exponent is liftable (A_r >= 0); no witness can be built from it")]
    ExponentLiftable,

    #[error("invalid elementary move: {0}")]
    InvalidMove(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
