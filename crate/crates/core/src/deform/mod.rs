//! The deformation pipeline: evaluate `f`, echelonize `im f`, extract the
//! structure polynomials `σ = ζ + t·ξ`, specialize, and certify.

mod family;
mod generators;
mod pipeline;

pub use family::{DeformationFamily, Presentation, StructureRelation};
pub use generators::{evaluate_f, evaluate_word, GeneratorSpec};
pub use pipeline::{
    build_family, BuildLog, BuildOptions, Deformation, IsoVerdict, LevelLog, SaturationReason,
};

use thiserror::Error;

use crate::findim::FindimError;

#[derive(Debug, Clone, Error)]
pub enum DeformError {
    #[error("saturation failed: {0}; raise max_len or t_cap")]
    Saturation(SaturationReason),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid generators: {0}")]
    Generators(String),
    #[error(transparent)]
    Algebra(#[from] FindimError),
}
