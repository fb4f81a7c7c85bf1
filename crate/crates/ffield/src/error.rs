use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FfError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("operands live over different fields (p={0} vs p={1})")]
    ModulusMismatch(u64, u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("polynomial is divisible by X; its order is undefined")]
    DivisibleByX,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("integer overflow computing {0}")]
    Overflow(String),
    #[error("certificate failed: {0}")]
    Certificate(String),
}
