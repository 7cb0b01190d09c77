use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::deform::GeneratorSpec;
use crate::findim::{direct_sum, matrix_algebra, scalars, AVector, AlgebraSpec, BlockKind};
use crate::scalars::{Backend, FieldContext, Scalar, DEFAULT_PIPELINE_EPS};
use crate::tmod::TVector;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmitFormat {
    #[default]
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockConfig {
    Matrix(usize),
    Scalars(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraConfig {
    Blocks {
        blocks: Vec<BlockConfig>,
    },
    Explicit {
        /// Dense `c[i][j][k]`.
        structure_constants: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

/// One block's entries: matrix rows for a matrix block, a tuple otherwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BlockEntry {
    Matrix(Vec<Vec<Scalar>>),
    Tuple(Vec<Scalar>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementConfig {
    Coords(Vec<Scalar>),
    Blocks(Vec<BlockEntry>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermConfig {
    pub t_power: usize,
    pub element: ElementConfig,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorConfig {
    pub name: String,
    pub terms: Vec<TermConfig>,
}

/// A declarative pipeline run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub algebra: AlgebraConfig,
    pub generators: Vec<GeneratorConfig>,
    #[serde(default)]
    pub backend: Backend,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, alias = "max_len", skip_serializing_if = "Option::is_none")]
    pub max_word_len: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_cap: Option<usize>,
    /// Points `z` at which `N_z` is built; `[1]` when empty.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub specialize: Vec<Scalar>,
    /// Relations of a claimed presentation of `N_0`, in the relation grammar.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<String>,
    /// File with one relation per line, checked as a second presentation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify_presentation: Option<String>,
    /// Word-order weights for rewriting; defaults to the generators' `t`-valuations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word_weights: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<u64>,
    #[serde(default)]
    pub emit: EmitFormat,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let cfg: RunConfig = serde_json::from_str(text).map_err(|e| CliError::Config(format!("bad config: {e}")))?;
        cfg.check()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn check(&self) -> Result<(), CliError> {
        if self.generators.is_empty() {
            return Err(CliError::Config("at least one generator is required".into()));
        }
        for (a, z) in self.specialize.iter().enumerate() {
            if self.specialize[..a].contains(z) {
                return Err(CliError::Config(format!("specialization point {z} is listed twice")));
            }
        }
        if let Some(t) = self.tol {
            if !(t.is_finite() && t > 0.0) {
                return Err(CliError::Config(format!("tolerance must be positive, got {t}")));
            }
        }
        if self.backend == Backend::Exact && !self.is_exact_input() {
            return Err(CliError::Config("floating-point entries require backend \"approx\"".into()));
        }
        if let Some(w) = &self.word_weights {
            if w.len() != self.generators.len() {
                return Err(CliError::Config(format!(
                    "word_weights has {} entries for {} generators",
                    w.len(),
                    self.generators.len()
                )));
            }
        }
        Ok(())
    }

    fn is_exact_input(&self) -> bool {
        let exact_entry = |e: &BlockEntry| match e {
            BlockEntry::Matrix(rows) => rows.iter().flatten().all(Scalar::is_exact),
            BlockEntry::Tuple(xs) => xs.iter().all(Scalar::is_exact),
        };
        let gens = self.generators.iter().flat_map(|g| &g.terms).all(|t| match &t.element {
            ElementConfig::Coords(xs) => xs.iter().all(Scalar::is_exact),
            ElementConfig::Blocks(es) => es.iter().all(exact_entry),
        });
        let alg = match &self.algebra {
            AlgebraConfig::Blocks { .. } => true,
            AlgebraConfig::Explicit { structure_constants, unit, .. } => {
                structure_constants.iter().flatten().flatten().all(Scalar::is_exact) && unit.iter().all(Scalar::is_exact)
            }
        };
        gens && alg && self.specialize.iter().all(Scalar::is_exact)
    }

    pub fn field_context(&self) -> FieldContext {
        match self.backend {
            Backend::Exact => FieldContext::exact(),
            Backend::Approx => FieldContext::approx(self.tol.unwrap_or(DEFAULT_PIPELINE_EPS)),
        }
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn build_algebra(&self) -> Result<AlgebraSpec, CliError> {
        match &self.algebra {
            AlgebraConfig::Blocks { blocks } => {
                if blocks.is_empty() {
                    return Err(CliError::Config("algebra needs at least one block".into()));
                }
                let mut parts = Vec::with_capacity(blocks.len());
                for b in blocks {
                    parts.push(match *b {
                        BlockConfig::Matrix(d) if d >= 1 => matrix_algebra(d),
                        BlockConfig::Scalars(k) if k >= 1 => scalars(k),
                        _ => return Err(CliError::Config("block sizes must be at least 1".into())),
                    });
                }
                Ok(direct_sum(&parts))
            }
            AlgebraConfig::Explicit { structure_constants, unit, labels } => {
                let n = unit.len();
                let labels = labels.clone().unwrap_or_else(|| (1..=n).map(|i| format!("e{i}")).collect());
                AlgebraSpec::from_dense(labels, structure_constants.clone(), unit.clone())
                    .map_err(|e| CliError::Config(e.to_string()))
            }
        }
    }

    fn element(&self, spec: &AlgebraSpec, e: &ElementConfig, who: &str) -> Result<AVector, CliError> {
        let n = spec.dim();
        match e {
            ElementConfig::Coords(xs) => {
                if xs.len() != n {
                    return Err(CliError::Config(format!("{who}: {} coordinates for dimension {n}", xs.len())));
                }
                Ok(AVector(xs.clone()))
            }
            ElementConfig::Blocks(entries) => {
                let blocks = spec.blocks();
                if entries.len() != blocks.len() {
                    return Err(CliError::Config(format!(
                        "{who}: {} block entries for {} blocks",
                        entries.len(),
                        blocks.len()
                    )));
                }
                let mut coords = Vec::with_capacity(n);
                for (b, (blk, entry)) in blocks.iter().zip(entries).enumerate() {
                    let flat: Vec<Scalar> = match (blk.kind, entry) {
                        (BlockKind::Matrix(d), BlockEntry::Matrix(rows)) => {
                            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                                return Err(CliError::Config(format!("{who}: block {b} must be a {d}x{d} matrix")));
                            }
                            rows.iter().flatten().cloned().collect()
                        }
                        (BlockKind::Matrix(1), BlockEntry::Tuple(xs)) if xs.len() == 1 => xs.clone(),
                        (kind, BlockEntry::Tuple(xs)) if !matches!(kind, BlockKind::Matrix(_)) => {
                            if xs.len() != kind.dim() {
                                return Err(CliError::Config(format!(
                                    "{who}: block {b} needs {} entries, got {}",
                                    kind.dim(),
                                    xs.len()
                                )));
                            }
                            xs.clone()
                        }
                        _ => return Err(CliError::Config(format!("{who}: block {b} has the wrong shape"))),
                    };
                    coords.extend(flat);
                }
                Ok(AVector(coords))
            }
        }
    }

    /// Generator images `Σ t^p · element`, summing repeated powers.
    pub fn build_generators(&self, spec: &AlgebraSpec) -> Result<GeneratorSpec, CliError> {
        let mut images = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            if g.terms.is_empty() {
                return Err(CliError::Config(format!("generator {} has no terms", g.name)));
            }
            let mut merged: BTreeMap<usize, AVector> = BTreeMap::new();
            for t in &g.terms {
                let e = self.element(spec, &t.element, &g.name)?;
                let slot = merged.entry(t.t_power).or_insert_with(|| AVector::zero(spec.dim()));
                *slot = slot.add(&e);
            }
            let mut image = TVector::zero(spec.dim());
            for (p, e) in merged {
                image = image.add(&TVector::from_avector(&e, p));
            }
            images.push(image);
        }
        GeneratorSpec::new(self.generator_names(), images, spec).map_err(|e| CliError::Config(e.to_string()))
    }
}
