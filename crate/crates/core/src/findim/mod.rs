//! Finite-dimensional associative unital algebras given by structure constants.

mod algebra;
mod validate;

pub use algebra::{direct_sum, matrix_algebra, scalars, AVector, AlgebraSpec, Block, BlockKind};
pub use validate::{validate_algebra, AssociativityFailure, UnitFailure, ValidationReport};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum FindimError {
    #[error("algebra axioms fail: {0}")]
    ValidationFailure(ValidationReport),
    #[error("malformed algebra: {0}")]
    Shape(String),
}
