use thiserror::Error;

/// Errors raised by graph construction, query parsing and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid token {0:?}: tokens are nonempty and made of ASCII letters, digits and '_'")]
    InvalidToken(String),

    #[error("line {line}: {message}")]
    GraphFormat { line: usize, message: String },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("cannot concatenate: walk ends in {left} but next walk starts in {right}")]
    Concat { left: String, right: String },

    #[error("renaming error: {0}")]
    Renaming(String),

    #[error("characteristic construction: {0}")]
    Characteristic(String),

    #[error("input error: {0}")]
    Input(String),

    #[error("walk is not consistent with the database: {0}")]
    InconsistentWalk(String),

    #[error("result cap of {cap} walks exceeded")]
    ResultCap { cap: usize },

    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
