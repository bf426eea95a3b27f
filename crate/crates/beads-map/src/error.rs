use lisa_basis::LisaError;
use quantum_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BeadsError {
    #[error(transparent)]
    Lisa(#[from] LisaError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("spherical harmonic j={j}, m={m} is outside the supported range")]
    Harmonic { j: usize, m: i32 },
    #[error("polar angle {0} is outside [0, π]")]
    PolarAngle(f64),
    #[error("bead set is missing label {0}")]
    MissingLabel(String),
    #[error("state is not invariant under qubit permutations")]
    NotSymmetric,
    #[error("unknown scaling mode {0}")]
    UnknownMode(String),
}

pub type Result<T> = std::result::Result<T, BeadsError>;
