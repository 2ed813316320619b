use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("grade mismatch: {0}")]
    GradeMismatch(String),
    #[error("expected a {expected}, found a {found}")]
    VarianceMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// True for errors caused by bad caller input rather than a broken invariant.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::InvariantViolation(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
