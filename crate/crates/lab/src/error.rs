use algext::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {source}")]
    Build {
        line: usize,
        #[source]
        source: AlgebraError,
    },

    #[error("{0}")]
    Algebra(#[from] AlgebraError),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("unknown output format `{0}`")]
    Format(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("malformed structured output: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, LabError>;

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> LabError {
    LabError::Parse {
        line,
        message: message.into(),
    }
}
