//! Noncommutative rewriting: monomial orders, overlap completion, normal
//! forms, quotient dimensions, and presentation checks.

mod dimension;
mod order;
mod parse;
mod system;
mod verify;

pub use dimension::{QuotientDimension, QuotientValue};
pub use order::WordOrder;
pub use parse::{parse_relation, parse_relations};
pub use system::{complete, default_degree_bound, CompletionStatus, RewriteRule, RewriteSystem};
pub use verify::{verify_presentation, PresentationStatus, PresentationVerdict, RelationCheck, VerifyError};

use thiserror::Error;

use crate::freealg::Word;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RewriteError {
    #[error("word {word:?} of weight {weight} exceeds the degree bound {bound}")]
    DegreeBoundExceeded { word: Word, weight: u64, bound: u64 },
    #[error("relation must be nonzero")]
    ZeroRelation,
    #[error("cannot parse relation `{text}`: {reason}")]
    Parse { text: String, reason: String },
}
