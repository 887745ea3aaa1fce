use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter lies outside the domain of the operation.
    Domain(String),
    /// An exhaustive search visited more nodes than allowed.
    BudgetExceeded { budget: u64 },
    /// A structure violates one of its invariants.
    InvalidShape(String),
    /// A power series expansion produced a non-integer coefficient.
    NonIntegral { index: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::InvalidShape(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::BudgetExceeded { budget } => {
                write!(f, "search exceeded the node budget of {budget} states")
            }
            Error::InvalidShape(msg) => write!(f, "invalid shape: {msg}"),
            Error::NonIntegral { index } => {
                write!(f, "series coefficient {index} is not an integer")
            }
        }
    }
}

impl core::error::Error for Error {}
