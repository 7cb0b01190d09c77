//! Elements of `A[t]` and the valuation-pivoted echelon of a `ℂ[t]`-submodule.

mod basis;
pub mod oracle;
mod tvector;

pub use basis::{GradedBasis, InsertOutcome, PivotRecord, PivotSummary, Reduction, TrimStats};
pub use oracle::minimal_valuations_oracle;
pub use tvector::TVector;

use thiserror::Error;

use crate::scalars::UniPoly;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TmodError {
    #[error("pivot at coordinate {coordinate} is {pivot}, not a power of t")]
    NonMonomialPivot { coordinate: usize, pivot: UniPoly },
}
