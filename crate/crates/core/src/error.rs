use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {0} lies outside [0,1]")]
    Domain(Rational),

    #[error("invalid piecewise-linear function: {0}")]
    InvalidFunction(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("variable X{index} is out of range for arity {arity}")]
    Arity { index: usize, arity: usize },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("line {line}: {message}")]
    FamilyFile { line: usize, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("invalid rational literal `{0}`")]
    RationalLiteral(String),

    /// Raised when an equivalence that must hold by construction is observed
    /// to fail. Always indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
