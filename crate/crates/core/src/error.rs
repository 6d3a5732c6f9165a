use thiserror::Error;

/// Errors raised by the algebra, tensor, lift and definition layers.
///
/// Failed identities are never errors: checkers record them as report
/// entries. Errors are reserved for malformed inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable lists {left:?} and {right:?} cannot be aligned")]
    VariableMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),

    #[error("epsilon mismatch: {0} vs {1}")]
    EpsilonMismatch(i8, i8),

    #[error("epsilon must be -1 or +1, got {0}")]
    InvalidEpsilon(i64),

    #[error("matrix is not unimodular: determinant is {0}")]
    NotUnimodular(String),

    #[error("chart mismatch: `{0}` vs `{1}`")]
    ChartMismatch(String, String),

    #[error("valence mismatch: expected {expected}, found {found}")]
    ValenceMismatch { expected: String, found: String },

    #[error("horizontal lift requires a connection")]
    MissingConnection,

    #[error("structure has no metric")]
    MissingMetric,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("chart dimension {0} is odd")]
    OddDimension(usize),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn shape(message: impl Into<String>) -> Self {
        Error::Shape(message.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
