use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("leading term of zero")]
    LeadingTermOfZero,
    #[error("determinant of non-square matrix ({rows} rows, {cols} columns)")]
    NonSquare { rows: usize, cols: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("malformed index tuple: {0}")]
    MalformedIndices(String),
    #[error("variable {0} is not in the ring")]
    UnknownVariable(String),
    #[error("ring has {0} variables, at most {max} supported", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("basis is not reduced")]
    NotReduced,
    #[error("inconclusive: budget exceeded")]
    BudgetExceeded,
}
