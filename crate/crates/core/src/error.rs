use thiserror::Error;

/// Errors reported by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("state has width {found}, expected {expected}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("reaction index {index} out of range (system has {len} reactions)")]
    ReactionIndex { index: usize, len: usize },

    #[error("entity index {index} out of range (background has {len} entities)")]
    EntityIndex { index: usize, len: usize },

    #[error("reaction {index} has an empty product set")]
    EmptyProducts { index: usize },

    #[error("duplicate entity name `{0}`")]
    DuplicateEntity(String),

    #[error("invalid entity name `{0}`")]
    InvalidEntityName(String),

    #[error("unknown entity `{0}`")]
    UnknownEntity(String),

    #[error("systems have different background sets")]
    BackgroundMismatch,

    #[error("system is not {expected}")]
    WrongClass { expected: &'static str },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} of size {size} exceeds the cap of {cap}; {hint}")]
    Capability {
        what: &'static str,
        size: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("formula error: {0}")]
    Formula(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("external solver: {message}\n--- captured output ---\n{output}")]
    Solver { message: String, output: String },

    #[error("witness re-check failed: {0}")]
    Recheck(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
