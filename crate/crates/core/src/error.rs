use thiserror::Error;

/// Everything that can go wrong while building fields, codes and bounds.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field of size {p}^{degree} exceeds the supported limit")]
    FieldTooLarge { p: u64, degree: u32 },
    #[error("operands live in different fields of the tower")]
    LevelMismatch,
    #[error("inverse of zero")]
    DivisionByZero,
    #[error("expected length {expected}, got {got}")]
    InvalidLength { expected: usize, got: usize },
    #[error("symbol {symbol} is not an element of a field of size {size}")]
    SymbolOutOfRange { symbol: u64, size: u64 },
    #[error("evaluation points are not distinct")]
    DuplicatePoints,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("generator matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("enumeration of {needed} words exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("distance {d} outside 1..={max}")]
    DistanceOutOfRange { d: usize, max: usize },
    #[error("defect is only defined when all blocks have the same column count")]
    UnequalColumnSizes,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
