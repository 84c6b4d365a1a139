use alloc::string::String;

/// Errors raised by the algebra and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("characteristic {0} is out of the supported range")]
    CharacteristicTooLarge(u64),
    #[error("extension degree {0} is not supported (only 1 and 2)")]
    UnsupportedDegree(u32),
    #[error("modulus polynomial is reducible over GF({0})")]
    ReducibleModulus(u64),
    #[error("malformed modulus: {0}")]
    BadModulus(String),
    #[error("frobenius involution needs a quadratic extension")]
    FrobeniusNeedsQuadratic,
    #[error("operation needs a finite field")]
    InfiniteField,
    #[error("bad field element: {0}")]
    BadElement(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("contraction order {p} exceeds operand degrees {left} and {right}")]
    ContractionTooLarge { p: usize, left: usize, right: usize },
    #[error("pseudo-tensor product needs even degrees, got {0}")]
    OddDegree(usize),
    #[error("pseudo-tensor power must be at least 1")]
    ZeroPower,
    #[error("tensor of dimension {dim} and degree {degree} exceeds the size cap of {cap} entries")]
    SizeCap { dim: usize, degree: usize, cap: usize },
    #[error("entry count {got} does not match dimension {dim} and degree {degree}")]
    EntryCount { dim: usize, degree: usize, got: usize },
    #[error("tensor is not alternating")]
    NotAlternating,
    #[error("the zero tensor has no decomposition")]
    ZeroTensor,
    #[error("rank {k} is out of range for dimension {n}")]
    RankOutOfRange { k: usize, n: usize },
    #[error("rows are linearly dependent")]
    DependentRows,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("form is invalid: {0}")]
    InvalidForm(String),
    #[error("identity suite needs 1 <= N <= 4, got {0}")]
    SuiteDimension(usize),
    #[error("enumeration budget of {budget} exceeded (needs {needed})")]
    BudgetExceeded { budget: u128, needed: u128 },
}

pub type Result<T> = core::result::Result<T, Error>;
