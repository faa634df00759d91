use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("out of domain: {0}")]
    Domain(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("size {size} exceeds cap {cap} for {what}")]
    SizeCap { what: &'static str, size: usize, cap: usize },
    #[error("scalar kind is not a field; {0} needs division")]
    NotAField(&'static str),
    #[error("degenerate input at index {index}: {what}")]
    Degenerate { index: usize, what: String },
    #[error("vanishing leading principal minor of order {0}")]
    SingularMinor(usize),
    #[error("duplicate interpolation point at index {0}")]
    DuplicatePoint(usize),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("truncation too short: {0}")]
    Truncation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown identity id `{0}`")]
    UnknownId(String),
    #[error("{0}")]
    Insufficient(String),
}

pub type Result<T> = std::result::Result<T, Error>;
