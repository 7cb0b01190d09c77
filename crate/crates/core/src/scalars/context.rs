use serde::{Deserialize, Serialize};

use super::Scalar;

/// Tolerance used for arithmetic zero tests on the approximate backend.
pub const DEFAULT_ARITH_EPS: f64 = 1e-12;
/// Tolerance used for pipeline-level decisions (relation checks, ranks).
pub const DEFAULT_PIPELINE_EPS: f64 = 1e-8;
pub const DEFAULT_ROOT_ITERATIONS: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    #[default]
    Exact,
    Approx,
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Approx => f.write_str("approx"),
        }
    }
}

/// Backend selection plus the tolerance that defines "zero" on it.
///
/// The exact backend always carries `eps == 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldContext {
    pub backend: Backend,
    pub eps: f64,
    pub root_iteration_cap: usize,
}

impl Default for FieldContext {
    fn default() -> Self {
        Self::exact()
    }
}

impl FieldContext {
    pub fn exact() -> Self {
        FieldContext { backend: Backend::Exact, eps: 0.0, root_iteration_cap: DEFAULT_ROOT_ITERATIONS }
    }

    /// Approximate backend with the given tolerance. Non-positive or non-finite
    /// tolerances fall back to [`DEFAULT_ARITH_EPS`].
    pub fn approx(eps: f64) -> Self {
        let eps = if eps.is_finite() && eps > 0.0 { eps } else { DEFAULT_ARITH_EPS };
        FieldContext { backend: Backend::Approx, eps, root_iteration_cap: DEFAULT_ROOT_ITERATIONS }
    }

    pub fn is_exact(&self) -> bool {
        self.backend == Backend::Exact
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match self.backend {
            Backend::Exact => s.is_exact_zero(),
            Backend::Approx => s.modulus() <= self.eps,
        }
    }

    /// Zero test relative to a magnitude: `|s| <= eps * (1 + scale)`.
    pub fn is_negligible(&self, s: &Scalar, scale: f64) -> bool {
        match self.backend {
            Backend::Exact => s.is_exact_zero(),
            Backend::Approx => s.modulus() <= self.eps * (1.0 + scale),
        }
    }

    /// Converts a scalar into this context's backend.
    pub fn lift(&self, s: &Scalar) -> Scalar {
        match self.backend {
            Backend::Exact => s.clone(),
            Backend::Approx => Scalar::Approx(s.to_complex()),
        }
    }
}
