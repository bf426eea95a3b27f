use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LisaError {
    #[error("invalid bead label {0}")]
    InvalidLabel(String),
    #[error("label {label} has no component j={j}, m={m}")]
    InvalidComponent { label: String, j: usize, m: i32 },
    #[error("qubit count {0} is outside the supported range 1..=3")]
    QubitCount(usize),
    #[error("matrix dimension {0} is not 2, 4 or 8")]
    Dimension(usize),
    #[error("operator is not Hermitian (residual {0:e})")]
    NotHermitian(f64),
    #[error("coefficient has imaginary residue {0:e}")]
    ComplexCoefficient(f64),
    #[error("unknown basis element {0}")]
    UnknownKey(String),
}

pub type Result<T> = std::result::Result<T, LisaError>;
