//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the library.
///
/// Every public operation validates its inputs up front and reports through
/// this enum; once validation passes, the exact-arithmetic kernels cannot
/// fail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    /// Division by an integer coefficient that vanishes in the ambient
    /// characteristic, e.g. the 1/2 of the splitting constructions in
    /// characteristic 2.
    #[error("characteristic {p} obstructs division by {divisor}")]
    CharacteristicObstruction { p: u64, divisor: u32 },

    #[error("constraint violated: {0}")]
    ConstraintViolated(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("search space of {required} candidates exceeds budget {budget}")]
    SearchSpaceTooLarge { required: u128, budget: u128 },

    /// A bilinear form that must be invertible is singular.
    #[error("singular form")]
    SingularForm,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
