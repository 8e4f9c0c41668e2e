use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared by every operation in the crate.
///
/// The variants fall into four families which the command-line front end maps
/// onto distinct exit codes: bad input, exhausted resources, legitimate
/// negative findings, and violated invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("permutation degree must be positive")]
    EmptyDegree,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error at column {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("element {0} is not in the group")]
    NotAMember(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("operation requires a non-trivial group: {0}")]
    TrivialGroup(&'static str),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("{what} exceeds cap {cap} (value {value})")]
    CapExceeded { what: &'static str, cap: u64, value: u64 },
    #[error("search budget of {budget} steps exhausted in {what}")]
    BudgetExceeded { what: &'static str, budget: u64 },
    #[error("group order does not fit in 64 bits")]
    OrderOverflow,
    #[error("no witness: {0}")]
    NoWitness(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

/// Coarse classification used for exit codes and report verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    Resource,
    Negative,
    Violation,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::CapExceeded { .. } | Error::BudgetExceeded { .. } | Error::OrderOverflow => ErrorClass::Resource,
            Error::NoWitness(_) => ErrorClass::Negative,
            Error::InvariantViolation(_) => ErrorClass::Violation,
            _ => ErrorClass::Input,
        }
    }

    pub(crate) fn cap(what: &'static str, cap: u64, value: u64) -> Self {
        Error::CapExceeded { what, cap, value }
    }
}
