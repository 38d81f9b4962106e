use thiserror::Error;

use crate::partitions::Partition;
use crate::qring::LaurentV;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("not divisible, remainder {remainder}")]
    NotDivisible { remainder: LaurentV },

    #[error("coefficient a_{lambda} is not a Laurent polynomial (remainder {remainder})")]
    NotLaurent { lambda: Partition, remainder: LaurentV },

    #[error("insufficient bound: {0}")]
    InsufficientBound(String),

    #[error("odd v-exponent in {0}, expected a polynomial in q")]
    OddExponent(LaurentV),

    #[error("partition {lambda} has more than {nvars} parts")]
    TooManyParts { lambda: Partition, nvars: usize },

    #[error("missing color {0} below the declared bound")]
    MissingColor(Partition),

    #[error("value at the empty partition must be 1, found {0}")]
    NotNormalized(LaurentV),

    #[error("table violates the gl_2 collapse rule at {0}")]
    CollapseViolation(Partition),

    #[error("mismatched number of variables: {0} vs {1}")]
    NvarsMismatch(usize, usize),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Failures of a mathematical certificate, as opposed to bad input.
    pub fn is_integrity_failure(&self) -> bool {
        matches!(
            self,
            Error::NotDivisible { .. } | Error::NotLaurent { .. } | Error::InsufficientBound(_)
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::NotDivisible { .. } => "NotDivisible",
            Error::NotLaurent { .. } => "NotLaurent",
            Error::InsufficientBound(_) => "InsufficientBound",
            Error::OddExponent(_) => "OddExponent",
            Error::TooManyParts { .. } => "TooManyParts",
            Error::MissingColor(_) => "MissingColor",
            Error::NotNormalized(_) => "NotNormalized",
            Error::CollapseViolation(_) => "CollapseViolation",
            Error::NvarsMismatch(..) => "NvarsMismatch",
            Error::OutOfRange(_) => "OutOfRange",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Schema(_) => "Schema",
            Error::Io(_) => "Io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Schema(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
