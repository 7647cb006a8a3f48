//! Exact scalars, dense matrices and subspaces over `F_p` (p odd) and `Q`.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{FieldSpec, Scalar};
pub use subspace::{Decomposition, Subspace};

pub(crate) use matrix::dot;
pub(crate) use subspace::unit;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be below 2^32)")]
    ModulusTooLarge(u64),
    #[error("cannot read scalar {0:?}")]
    BadScalar(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entries belong to different fields")]
    FieldMismatch,
    #[error("subspaces are not complementary")]
    NotComplementary,
    #[error("subspace is not contained in the outer space")]
    NotASubspace,
}
