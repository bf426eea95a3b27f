use thiserror::Error;

/// Errors of the command-line tool and the session server.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed JSON, with the 1-based position serde reports.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    /// Well-formed input that does not describe a valid state or circuit.
    #[error("invalid input: {0}")]
    Input(String),
    #[error("unknown preset {0}")]
    UnknownPreset(String),
    #[error(transparent)]
    Render(#[from] render_export::RenderError),
    #[error("{0}")]
    Runtime(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit code: 2 for bad input, 1 for failures while running.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Input(_) | CliError::UnknownPreset(_) => 2,
            CliError::Render(render_export::RenderError::Resolution { .. }) => 2,
            _ => 1,
        }
    }

    pub fn parse(e: &serde_json::Error) -> Self {
        let text = e.to_string();
        let message = match text.rfind(" at line ") {
            Some(i) => text[..i].to_string(),
            None => text,
        };
        CliError::Parse {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

impl From<quantum_core::CoreError> for CliError {
    fn from(e: quantum_core::CoreError) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
