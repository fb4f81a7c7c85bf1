use thiserror::Error;

use pcdyn_ffield::FfError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PcError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("relative order {0} of generator {1} is not prime")]
    NotPrime(u64, usize),
    #[error("invalid exponent vector {0}")]
    InvalidVector(String),
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("map is not bijective: images generate a subgroup of index > 1")]
    NotBijective,
    #[error("the identity cannot be used as a new pcgs element")]
    IdentityElement,
    #[error("sequence is not a pcgs of the group: {0}")]
    NotAPcgs(String),
    #[error("affine maps can only be raised to positive powers")]
    ZeroPower,
    #[error("presentations differ")]
    PresentationMismatch,
    #[error("enumeration budget of {budget} elements exceeded (group order {order})")]
    BudgetExceeded { budget: u64, order: String },
    #[error("invariant breach: {0}")]
    Invariant(String),
    #[error(transparent)]
    Field(#[from] FfError),
}

pub type Result<T> = std::result::Result<T, PcError>;
