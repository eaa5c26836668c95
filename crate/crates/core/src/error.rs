use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error in `{input}`: {message}")]
    Parse { input: String, message: String },

    #[error("polynomial degree {degree} is below the minimum of 3")]
    DegreeTooSmall { degree: usize },

    #[error("polynomial is not monic (leading coefficient {0})")]
    NotMonic(Box<Scalar>),

    #[error("leading coefficient {found} of P does not equal deg P + 1 = {expected}")]
    LeadingTerm { expected: usize, found: Box<Scalar> },

    #[error("leading coefficient {0} is not a square in Q(i)")]
    NotASquare(Box<Scalar>),

    #[error("the zero element has no degree")]
    ZeroElement,

    #[error("operation requires deg Q = 3, got {0}")]
    NotCubic(usize),

    #[error("operation requires a D-algebra")]
    NotDAlgebra,

    #[error("Q and P do not satisfy the evenness condition")]
    PolynomialMismatch,

    #[error("generator images do not satisfy the relations of the source: {0}")]
    NotAHomomorphism(String),

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable variant name, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::Parse { .. } => "Parse",
            Error::DegreeTooSmall { .. } => "DegreeTooSmall",
            Error::NotMonic(_) => "NotMonic",
            Error::LeadingTerm { .. } => "LeadingTerm",
            Error::NotASquare(_) => "NotASquare",
            Error::ZeroElement => "ZeroElement",
            Error::NotCubic(_) => "NotCubic",
            Error::NotDAlgebra => "NotDAlgebra",
            Error::PolynomialMismatch => "PolynomialMismatch",
            Error::NotAHomomorphism(_) => "NotAHomomorphism",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
