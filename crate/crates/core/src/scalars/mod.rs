//! Scalar backends (exact Gaussian rationals, tolerance-aware complex floats),
//! univariate polynomials in `t`, and root finding.

mod context;
pub mod linalg;
mod poly;
mod roots;
mod scalar;

pub use context::{Backend, FieldContext, DEFAULT_ARITH_EPS, DEFAULT_PIPELINE_EPS, DEFAULT_ROOT_ITERATIONS};
pub use poly::UniPoly;
pub(crate) use poly::join_term;
pub use roots::{poly_roots, RootSet};
pub use scalar::{GaussRat, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial with valuation {valuation} is not divisible by t^{divisor_power}")]
    InexactDivision { valuation: usize, divisor_power: usize },
    #[error("root finder did not converge after {iterations} iterations (step criterion met: {converged})")]
    NonConvergence { iterations: usize, converged: bool },
    #[error("root finding requires the approximate backend")]
    ExactBackendUnsupported,
    #[error("root finding requires degree at least 1")]
    DegreeTooSmall,
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}
