use crate::arith::Int;

/// Errors raised by the exact-arithmetic and expansion layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A named precondition of an operation does not hold.
    #[error("precondition `{precondition}` violated: {detail}")]
    Domain {
        precondition: &'static str,
        detail: String,
    },
    #[error("precondition `same field` violated: sqrt({0}) and sqrt({1}) generate different quadratic fields")]
    MixedFields(Int, Int),
    #[error("precondition `divisor != 0` violated: division by zero")]
    DivisionByZero,
    /// The form has a perfect-square discriminant, so its root is rational.
    #[error(
        "precondition `non-square discriminant` violated: discriminant {0} is a perfect square"
    )]
    SquareDiscriminant(Int),
    /// An expansion hit its step limit before closing its period.
    #[error("expansion truncated after {steps} steps; result is indeterminate")]
    Indeterminate { steps: usize },
    #[error("internal invariant failure: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn domain(precondition: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            precondition,
            detail: detail.into(),
        }
    }

    /// Name of the violated precondition, if this error has one.
    pub fn precondition(&self) -> Option<&'static str> {
        match self {
            Error::Domain { precondition, .. } => Some(precondition),
            Error::MixedFields(..) => Some("same field"),
            Error::DivisionByZero => Some("divisor != 0"),
            Error::SquareDiscriminant(_) => Some("non-square discriminant"),
            Error::Indeterminate { .. } | Error::Invariant(_) => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
