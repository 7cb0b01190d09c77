use super::DeformError;
use crate::findim::AlgebraSpec;
use crate::freealg::{FreeTPoly, Word};
use crate::scalars::UniPoly;
use crate::tmod::TVector;

/// Named generator images `x_i ↦ Σ_l a_{i,l} t^l` in `A[t]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    names: Vec<String>,
    images: Vec<TVector>,
}

impl GeneratorSpec {
    pub fn new(names: Vec<String>, images: Vec<TVector>, spec: &AlgebraSpec) -> Result<Self, DeformError> {
        if images.is_empty() {
            return Err(DeformError::Generators("at least one generator is required".into()));
        }
        if names.len() != images.len() {
            return Err(DeformError::Generators(format!("{} names for {} images", names.len(), images.len())));
        }
        for (name, img) in names.iter().zip(&images) {
            if img.len() != spec.dim() {
                return Err(DeformError::Generators(format!(
                    "image of {name} has {} coordinates, the algebra has {}",
                    img.len(),
                    spec.dim()
                )));
            }
        }
        let mut sorted = names.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) || names.iter().any(String::is_empty) {
            return Err(DeformError::Generators("generator names must be nonempty and distinct".into()));
        }
        Ok(GeneratorSpec { names, images })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn images(&self) -> &[TVector] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Largest `t`-degree among the images.
    pub fn max_degree(&self) -> usize {
        self.images.iter().filter_map(TVector::degree).max().unwrap_or(0)
    }

    /// Least `t`-valuation of each image (0 for a zero image).
    pub fn valuations(&self) -> Vec<usize> {
        self.images.iter().map(|v| v.valuation().unwrap_or(0)).collect()
    }
}

/// `f(w)`: the ordered product of generator images, the unit for the empty word.
pub fn evaluate_word(gens: &GeneratorSpec, w: &Word, spec: &AlgebraSpec) -> TVector {
    let mut image = TVector::from_avector(spec.unit(), 0);
    for g in w.letters() {
        image = image.mul(&gens.images[g], spec);
    }
    image
}

/// The algebra homomorphism `f` with `t ↦ t·1`, extended linearly.
pub fn evaluate_f(gens: &GeneratorSpec, p: &FreeTPoly, spec: &AlgebraSpec) -> TVector {
    if let Some(m) = p.max_letter() {
        assert!(m < gens.len(), "generator index {m} out of range");
    }
    let mut out = TVector::zero(spec.dim());
    for w in p.support() {
        let image = evaluate_word(gens, w, spec);
        let coeffs: Vec<_> = p.terms().filter(|(v, _, _)| *v == w).map(|(_, d, c)| (d, c.clone())).collect();
        let mut tpoly = UniPoly::zero();
        for (d, c) in coeffs {
            tpoly = tpoly.add(&UniPoly::monomial(c, d as usize));
        }
        out = out.add(&image.scale_poly(&tpoly));
    }
    out
}
