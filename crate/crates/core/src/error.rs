use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: unknown generator `{name}`")]
    UnknownGenerator { line: usize, name: String },

    #[error("monomial {monomial} occurs in more than one relation")]
    DuplicateMonomial { monomial: String },

    #[error("relation {relation} has a zero coefficient")]
    ZeroCoefficient { relation: String },

    #[error("relation {relation} has the same monomial on both sides")]
    DegenerateRelation { relation: String },

    #[error("{0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    /// Two sides of an equivalence that must agree came out different.
    /// Seeing this means an implementation bug, not bad input.
    #[error("equivalence violated ({statement}): {details}")]
    TheoremViolation { statement: String, details: String },
}

impl Error {
    pub(crate) fn violation(statement: impl Into<String>, details: impl Into<String>) -> Self {
        Error::TheoremViolation {
            statement: statement.into(),
            details: details.into(),
        }
    }

    /// True for the error class that the CLI maps to exit code 1.
    pub fn is_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation { .. })
    }
}
