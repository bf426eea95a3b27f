use beads_map::BeadsError;
use correlations::CorrelationError;
use lisa_basis::LisaError;
use quantum_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RenderError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Lisa(#[from] LisaError),
    #[error(transparent)]
    Beads(#[from] BeadsError),
    #[error(transparent)]
    Correlation(#[from] CorrelationError),
    #[error("sphere resolution {rings}x{segments} is below the minimum 8x16")]
    Resolution { rings: usize, segments: usize },
    #[error("unknown display variant {0}")]
    UnknownVariant(String),
    #[error("unknown plot variant {0}")]
    UnknownPlot(String),
    #[error("variant {0} does not carry enough beads to rebuild the state")]
    Incomplete(String),
    #[error("scene is inconsistent: {0}")]
    Scene(String),
    #[error("PLY: {0}")]
    Ply(String),
    #[error("JSON: {0}")]
    Json(String),
    #[error("I/O: {0}")]
    Io(String),
}

impl From<std::io::Error> for RenderError {
    fn from(e: std::io::Error) -> Self {
        RenderError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for RenderError {
    fn from(e: serde_json::Error) -> Self {
        RenderError::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, RenderError>;
