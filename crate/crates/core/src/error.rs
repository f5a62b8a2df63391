use thiserror::Error;

use crate::game::{Vertex, Violation};

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid game: {}", join(.0))]
    InvalidGame(Vec<Violation>),
    #[error("vertex {0} is missing")]
    MissingVertex(Vertex),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),
    #[error("strategy undefined at reached vertex {0}")]
    UndefinedStrategy(Vertex),
    #[error("proximity order is strict; cannot compare {0} with itself")]
    EqualVertices(Vertex),
    #[error("minimum of an empty vertex set")]
    EmptySet,
    #[error("partition is not stable: {0}")]
    UnstablePartition(String),
    #[error("brute-force solver bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("lifted strategy failed verification: {0}")]
    LiftFailed(String),
    #[error("winner mismatch on {game}: {detail}")]
    WinnerMismatch { game: String, detail: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

fn join(violations: &[Violation]) -> String {
    violations.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
