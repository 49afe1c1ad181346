use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the group algorithms.
///
/// Variants are grouped by how a caller should react: input errors
/// (`Syntax`, `UnknownGenerator`, `InvalidPermutation`, `BadParameters`, ...),
/// resource limits (`BoundExceeded`, `BudgetExceeded`, `TooLarge`) and internal
/// consistency failures that indicate a bug (`RelatorViolation`,
/// `SplitFailure`, `LiftFailure`, `PropositionViolation`, `Internal`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    Syntax { pos: usize, msg: String },
    UnknownGenerator { name: String, pos: usize },
    InvalidPermutation(String),
    BadParameters(String),
    NotNormal,
    ActionNotAutomorphism(String),
    ActionNotHomomorphic(String),
    BoundExceeded { bound: usize },
    BudgetExceeded { what: &'static str, budget: u64 },
    TooLarge(String),
    NoSuitablePrime,
    RelatorViolation(String),
    SplitFailure(String),
    LiftFailure(String),
    PropositionViolation(String),
    Internal(String),
}

impl Error {
    /// True for errors caused by malformed input text or parameters.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownGenerator { .. }
                | Error::InvalidPermutation(_)
                | Error::BadParameters(_)
                | Error::NotNormal
                | Error::ActionNotAutomorphism(_)
                | Error::ActionNotHomomorphic(_)
        )
    }

    /// True for errors caused by a configured limit.
    pub fn is_limit_error(&self) -> bool {
        matches!(
            self,
            Error::BoundExceeded { .. } | Error::BudgetExceeded { .. } | Error::TooLarge(_)
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax { pos, msg } => write!(f, "syntax error at {pos}: {msg}"),
            Error::UnknownGenerator { name, pos } => {
                write!(f, "unknown generator `{name}` at {pos}")
            }
            Error::InvalidPermutation(m) => write!(f, "invalid permutation: {m}"),
            Error::BadParameters(m) => write!(f, "bad parameters: {m}"),
            Error::NotNormal => f.write_str("subgroup is not normal"),
            Error::ActionNotAutomorphism(m) => write!(f, "action is not an automorphism: {m}"),
            Error::ActionNotHomomorphic(m) => write!(f, "action is not a homomorphism: {m}"),
            Error::BoundExceeded { bound } => write!(f, "group order exceeds bound {bound}"),
            Error::BudgetExceeded { what, budget } => {
                write!(f, "{what} budget of {budget} exceeded")
            }
            Error::TooLarge(m) => write!(f, "input too large: {m}"),
            Error::NoSuitablePrime => f.write_str("no suitable prime below 2^31"),
            Error::RelatorViolation(m) => write!(f, "relator violated in realized group: {m}"),
            Error::SplitFailure(m) => write!(f, "eigenspace splitting failed: {m}"),
            Error::LiftFailure(m) => write!(f, "indicator lift failed: {m}"),
            Error::PropositionViolation(m) => write!(f, "cross-check violated: {m}"),
            Error::Internal(m) => write!(f, "internal invariant violated: {m}"),
        }
    }
}

impl core::error::Error for Error {}
