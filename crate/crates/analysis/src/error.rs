use beads_map::BeadsError;
use lisa_basis::LisaError;
use quantum_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Lisa(#[from] LisaError),
    #[error(transparent)]
    Beads(#[from] BeadsError),
    #[error("bead set lacks label {0}")]
    IncompleteBeads(String),
    #[error("expected a {expected}-qubit state, got {found} qubits")]
    QubitCount { expected: usize, found: usize },
    #[error("{qubits} qubits but {directions} directions")]
    DirectionCount { qubits: usize, directions: usize },
    #[error("invalid search: {solutions} solutions in a space of size {size}")]
    InvalidSearch { solutions: u64, size: u64 },
    #[error("vertex {vertex} is not in a graph with {count} vertices")]
    InvalidVertex { vertex: usize, count: usize },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("directions do not determine rank {rank} of {label}")]
    RankDeficient { label: String, rank: usize },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, AnalysisError>;
