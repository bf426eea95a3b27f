use beads_map::BeadsError;
use lisa_basis::LisaError;
use quantum_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CorrelationError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Lisa(#[from] LisaError),
    #[error(transparent)]
    Beads(#[from] BeadsError),
    #[error("connected/compound separation is defined for pure states only (purity {0})")]
    MixedState(f64),
    #[error("connected correlations need 2 or 3 qubits, got {0}")]
    SubsetSize(usize),
    #[error("{qubits} qubits but {directions} directions")]
    DirectionCount { qubits: usize, directions: usize },
}

pub type Result<T> = std::result::Result<T, CorrelationError>;
