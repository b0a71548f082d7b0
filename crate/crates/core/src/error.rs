use thiserror::Error;

/// Errors raised by the algebra engine.
///
/// Resource exhaustion is kept separate from mathematical failure so callers
/// can report an indeterminate outcome instead of a wrong answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid number field: {0}")]
    InvalidField(String),
    #[error("{0}")]
    NotARoot(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("resource cap exceeded: {0}")]
    Budget(String),
    #[error("ideal is not zero-dimensional: {0}")]
    NotZeroDimensional(String),
    #[error("curve is not reduced")]
    NonReduced,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is a smooth point of the curve")]
    SmoothPoint,
    #[error("point is a singular point of the curve")]
    SingularPoint,
    #[error("line is contained in the curve")]
    LineInCurve,
    #[error("curves share a common component")]
    CommonComponent,
    #[error("curve is contracted by the map")]
    Contracted,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("missing data: {0}")]
    Missing(String),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for resource-cap outcomes, which are indeterminate rather than false.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
