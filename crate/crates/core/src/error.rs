use thiserror::Error;

/// Errors produced by the library. Verdicts (a TPP that fails, a matching
/// that does not verify) are ordinary return values, not errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCap { order: u128, cap: usize },

    #[error("subgroup is not normal: {g} * {n} * {g}^-1 leaves the subgroup")]
    NotNormal { g: usize, n: usize },

    #[error("group of order {order} is not a {p}-group")]
    NotPGroup { order: usize, p: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("work estimate {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("product vector {vector:?} is not contained in the target subspace")]
    Containment { vector: Vec<u32> },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
