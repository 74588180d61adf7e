use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("0/0 is not a value")]
    Indeterminate,
}

/// Syntax error in fraction, expansion or diagram text. `position` is a byte
/// offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("q must be positive, got {0}")]
    NonPositive(String),
    #[error("q = {0} is even: S(q,p) is a two-component link")]
    EvenDenominator(String),
    #[error("p = {p} and q = {q} are not coprime")]
    NotCoprime { p: String, q: String },
    #[error("1/0 does not name a knot")]
    Infinite,
}

/// A value was outside the domain an operation is defined on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("domain error: {0}")]
pub struct DomainError(pub String);

/// A rewrite was requested at a position where its pattern does not occur.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("pattern mismatch: {0}")]
pub struct PatternMismatch(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("corrupt table data at row {row}: {message}")]
    Corrupt { row: usize, message: String },
    #[error("unknown knot name {0:?}")]
    UnknownName(String),
}

/// Failure of a name-or-fraction lookup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LookupError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("invalid fraction: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Knot(#[from] KnotError),
}

/// Exhaustive search found no expansion inside the requested bounds.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no expansion of {value} with length <= {max_len} and |b_i| <= {bound}")]
pub struct NotFound {
    pub value: String,
    pub max_len: usize,
    pub bound: i64,
}
