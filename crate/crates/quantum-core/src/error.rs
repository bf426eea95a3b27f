use thiserror::Error;

/// Errors raised by state construction, gates, measurement and circuits.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error("qubit count {0} is outside the supported range 1..=3")]
    QubitCount(usize),
    #[error("qubit index {index} is out of range for a {qubit_count}-qubit system")]
    IndexOutOfRange { index: usize, qubit_count: usize },
    #[error("qubit index {0} is used more than once")]
    DuplicateIndex(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),
    #[error("trace is {0}, expected 1")]
    BadTrace(f64),
    #[error("operator is not Hermitian (residual {0:e})")]
    NotHermitian(f64),
    #[error("operator is not positive semidefinite (eigenvalue {0:e})")]
    NotPositive(f64),
    #[error("direction vector has length {0}, expected 1")]
    InvalidDirection(f64),
    #[error("gate time fraction {0} is outside [0, 1]")]
    InvalidTime(f64),
    #[error("gate {gate} expects {expected} qubit(s), got {found}")]
    GateArity { gate: String, expected: usize, found: usize },
    #[error("partial trace needs at least one kept qubit")]
    EmptyKeep,
    #[error("branch list is empty")]
    EmptyBranches,
    #[error("branch probabilities sum to {0}, expected 1")]
    BranchProbabilities(f64),
    #[error("shot count must be at least 1")]
    NoShots,
    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
