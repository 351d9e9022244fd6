use thiserror::Error;

/// Malformed input: tables that reference cells which do not exist, or
/// tables that are missing entries they are required to have.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("table `{table}`: key {key} refers to unknown {kind} {id}")]
    Dangling {
        table: &'static str,
        key: String,
        kind: &'static str,
        id: usize,
    },
    #[error("table `{table}`: missing entry for {key}")]
    Missing { table: &'static str, key: String },
    #[error("table `{table}`: unexpected entry for {key}")]
    Extra { table: &'static str, key: String },
    #[error("table `{table}` has length {found}, expected {expected}")]
    Length {
        table: &'static str,
        expected: usize,
        found: usize,
    },
}

/// Failures of operations other than validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Structural(#[from] StructuralError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search budget of {budget} exceeded in {context}")]
    Budget { context: String, budget: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not composable: {0}")]
    NotComposable(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("unknown identifier `{0}`")]
    Unknown(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
