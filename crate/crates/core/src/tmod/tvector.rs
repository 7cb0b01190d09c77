use serde::Serialize;

use crate::findim::{AVector, AlgebraSpec};
use crate::scalars::{FieldContext, Scalar, UniPoly};

/// An element of `A[t]`: one polynomial in `t` per basis coordinate.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct TVector(pub Vec<UniPoly>);

impl TVector {
    pub fn zero(n: usize) -> Self {
        TVector(vec![UniPoly::zero(); n])
    }

    /// `t^k · a`.
    pub fn from_avector(a: &AVector, k: usize) -> Self {
        TVector(a.0.iter().map(|c| UniPoly::monomial(c.clone(), k)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coord(&self, j: usize) -> &UniPoly {
        &self.0[j]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(UniPoly::is_zero)
    }

    /// Highest `t`-degree over all coordinates (`None` for zero).
    pub fn degree(&self) -> Option<usize> {
        self.0.iter().filter_map(UniPoly::degree).max()
    }

    pub fn valuation(&self) -> Option<usize> {
        self.0.iter().filter_map(UniPoly::valuation).min()
    }

    pub fn add(&self, other: &TVector) -> Self {
        TVector(self.0.iter().zip(&other.0).map(|(a, b)| a.add(b)).collect())
    }

    pub fn sub(&self, other: &TVector) -> Self {
        TVector(self.0.iter().zip(&other.0).map(|(a, b)| a.sub(b)).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TVector(self.0.iter().map(|a| a.scale(c)).collect())
    }

    pub fn scale_poly(&self, p: &UniPoly) -> Self {
        TVector(self.0.iter().map(|a| a.mul(p)).collect())
    }

    /// Product in `A[t]` through the structure tensor.
    pub fn mul(&self, other: &TVector, spec: &AlgebraSpec) -> Self {
        let mut out = vec![UniPoly::zero(); spec.dim()];
        for (i, u) in self.0.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (j, v) in other.0.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let entries = spec.product(i, j);
                if entries.is_empty() {
                    continue;
                }
                let uv = u.mul(v);
                for (k, c) in entries {
                    out[*k] = out[*k].add(&uv.scale(c));
                }
            }
        }
        TVector(out)
    }

    pub fn eval(&self, z: &Scalar) -> AVector {
        AVector(self.0.iter().map(|p| p.eval(z)).collect())
    }

    /// Drops context-negligible coefficients; returns the largest discarded modulus.
    pub fn trim(&mut self, ctx: &FieldContext) -> f64 {
        self.0.iter_mut().map(|p| p.trim(ctx)).fold(0.0, f64::max)
    }

    pub fn max_modulus(&self) -> f64 {
        self.0.iter().map(UniPoly::max_modulus).fold(0.0, f64::max)
    }
}
