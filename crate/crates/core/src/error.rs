use thiserror::Error;

/// Errors raised by the polynomial engines and the supporting combinatorics.
#[derive(Debug, Error)]
pub enum JackError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("box ({row},{col}) is not in the diagram of {shape}")]
    BoxOutsideDiagram { row: usize, col: usize, shape: String },

    #[error("operation requires a nonzero composition")]
    ZeroComposition,

    #[error("{0} is not a partition (parts must be weakly decreasing)")]
    NotPartition(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("variable x{0} carries a negative exponent and cannot be set to zero")]
    LaurentInZeroedVariable(usize),

    #[error("polynomial is not symmetric under s{0}")]
    NotSymmetric(usize),

    #[error("non-integral coefficient: {0}")]
    NonIntegral(String),

    #[error("need at least {need} variables, got {got}")]
    InsufficientVariables { need: usize, got: usize },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("singular linear system: {0}")]
    SingularSystem(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache format error: {0}")]
    Cache(String),

    #[error("unsupported cache version {found} (expected {expected})")]
    CacheVersion { found: u64, expected: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = JackError> = std::result::Result<T, E>;
