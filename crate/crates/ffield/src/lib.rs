//! Linear and polynomial algebra over prime fields `F_p`.
//!
//! This crate provides what the orbit computations on elementary abelian
//! sections need: integer factorization for numbers of the form `p^d - 1`,
//! polynomial factorization (Rabin irreducibility test plus deterministic
//! Berlekamp splitting), rational canonical forms with an explicit basis
//! change, polynomial and matrix orders, and the cycle length of the zero
//! vector under an affine map `v -> Mv + t`.
//!
//! Orders are returned in factored form ([`IntFactorization`]) so callers
//! can certify minimality (`x^(n/q) != 1` for every prime `q | n`) without
//! refactoring.

pub mod arith;
mod error;
pub mod factor;
pub mod intfact;
pub mod matrix;
pub mod order;
pub mod poly;
pub mod rcf;

pub use error::FfError;
pub use factor::{berlekamp_factor, is_irreducible, squarefree_decomposition, PolyFactorization};
pub use intfact::{factor_integer, is_prime, IntFactorization};
pub use matrix::{FFMatrix, FFVector};
pub use order::{
    affine_cycle_length_zero, affine_power, matrix_order, poly_order,
    poly_order_of_irreducible_power,
};
pub use poly::FFPolynomial;
pub use rcf::{rcf, RcfDecomposition};

pub type Result<T> = std::result::Result<T, FfError>;
