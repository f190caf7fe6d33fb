use thiserror::Error;

/// Errors for the fallible entry points of the crate. Contract violations
/// (division by zero, mismatched moduli, coordinate overflow) panic instead:
/// they indicate caller bugs, and exact arithmetic must never degrade
/// silently.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse {input:?} as a Hurwitz integer: {reason}")]
    Parse { input: String, reason: String },

    #[error("model {model:?} multiplies to {product}, but the element has norm {norm}")]
    ModelNormMismatch {
        model: Vec<i64>,
        product: i128,
        norm: i64,
    },

    #[error("model entry {0} is not a rational prime")]
    ModelEntryNotPrime(i64),

    #[error("zero has no factorization")]
    FactorZero,
}
