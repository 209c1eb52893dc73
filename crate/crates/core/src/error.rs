use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the algebra and census engines.
///
/// Variants split into bad input (caller errors), ceiling violations
/// (the search is too large for exhaustive mode) and internal
/// consistency failures (which indicate a bug, never a valid result).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be positive")]
    ZeroInput,
    #[error("{value} exceeds the integer ceiling {ceiling}")]
    AboveCeiling { value: u128, ceiling: u64 },
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomial {0} is not irreducible")]
    NotIrreducible(String),
    #[error("polynomial {0} has the wrong degree (expected {1})")]
    WrongDegree(String, usize),
    #[error("element does not generate the top field (degree {degree}, need {needed})")]
    NotGenerator { degree: usize, needed: usize },
    #[error("vectors are linearly dependent")]
    DependentBasis,
    #[error("element is zero")]
    ZeroElement,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{what}: search space of {size} exceeds exhaustive ceiling; rerun with --mode sample (ceiling {ceiling})")]
    CeilingExceeded { what: String, size: u128, ceiling: u64 },
    #[error("Fermat-prime exclusion: q = {0}, and q - 1 has no odd prime factor, so the hypothesis fails")]
    FermatExclusion(u64),
    #[error("no irreducible polynomial X^{degree} - aX - b exists over F_{q}")]
    NoTrinomial { q: u64, degree: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("criterion disagreement: {0}")]
    CriterionDisagreement(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
