use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {left:?} times {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("invalid minor: {0}")]
    InvalidMinor(String),

    #[error("polynomial syntax: {0}")]
    PolynomialSyntax(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("path is not composable: {0}")]
    NonComposablePath(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("variable {0} is not a coordinate of this representation")]
    ForeignVariable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("resource guard: {0}")]
    ResourceGuard(String),

    #[error("invariance oracles disagree on {0}")]
    OracleDisagreement(String),
}

impl Error {
    /// Resource-guard aborts are reported separately from ordinary failures.
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::ResourceGuard(_))
    }
}
