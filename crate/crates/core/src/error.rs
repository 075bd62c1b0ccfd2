use std::fmt;

use thiserror::Error;

/// Position of a malformed token in a text input, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("instance too large: size {size} exceeds limit {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("isomorphism oracle returned a bad answer: {0}")]
    OracleIntegrity(String),

    #[error("bit oracle inconsistency: {0}")]
    Inconsistency(String),

    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
