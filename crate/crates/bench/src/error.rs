use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error(transparent)]
    Matroid(#[from] matroid_lab::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl BenchError {
    /// 2 for bad input or size caps, 3 for internal invariant violations,
    /// 1 for I/O trouble.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Parse { .. } | BenchError::Invalid(_) | BenchError::Usage(_) => 2,
            BenchError::Matroid(matroid_lab::Error::WitnessRejected { .. }) => 3,
            BenchError::Matroid(_) => 2,
            BenchError::Invariant(_) => 3,
            BenchError::Io { .. } | BenchError::Csv(_) => 1,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        BenchError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, BenchError>;
