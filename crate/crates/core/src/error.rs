use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a series needs at least one coefficient")]
    EmptySeries,

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant term {0} is not a unit (expected 1 or -1)")]
    NonUnitConstant(String),

    #[error("constant term {0} must be 1")]
    ConstantNotOne(String),

    #[error("not realizable at N={index}, remainder {remainder}")]
    NotRealizable { index: usize, remainder: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("p = 2 is not supported here; an odd prime is required")]
    EvenPrime,

    #[error("invalid range [{lo}, {hi}]")]
    InvalidRange { lo: u64, hi: u64 },

    #[error("parameter out of range: {0}")]
    InvalidParameter(String),

    #[error("identity violated: {0}")]
    IdentityViolation(String),

    #[error("malformed record: {0}")]
    Malformed(String),
}
