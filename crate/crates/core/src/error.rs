use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("period {0} is smaller than 2")]
    PeriodTooSmall(u64),

    #[error("signature {signature} has non-positive area {area}")]
    NonPositiveArea { signature: String, area: String },

    #[error("signature {0} has a parabolic class; its area is not a finite rational")]
    ParabolicPeriod(String),

    #[error("inconsistent group parameters: {0}")]
    InconsistentParameters(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("position {index} is out of range for a vector of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("kernel genus is not a non-negative integer (2g - 2 = {0})")]
    NonIntegralGenus(String),

    #[error("group has order {found}, expected {expected}")]
    WrongOrder { expected: usize, found: usize },

    #[error("group order {order} exceeds the search cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
