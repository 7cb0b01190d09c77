use std::fmt;

use serde::Serialize;

use super::{evaluate_f, DeformError, DeformationFamily, GeneratorSpec, Presentation};
use crate::findim::{validate_algebra, AVector, AlgebraSpec};
use crate::freealg::{FreePoly, FreeTPoly, Word};
use crate::scalars::linalg::{dependency, rank};
use crate::scalars::{FieldContext, Scalar, UniPoly};
use crate::tmod::{GradedBasis, InsertOutcome, TVector, TmodError, TrimStats};

/// Search bounds; `None` picks the defaults `max_len = 2n` and
/// `t_cap = 4 · (max generator degree) · max_len`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BuildOptions {
    pub max_len: Option<usize>,
    pub t_cap: Option<usize>,
}

impl BuildOptions {
    pub fn resolve(&self, n: usize, gens: &GeneratorSpec) -> (usize, usize) {
        let max_len = self.max_len.unwrap_or(2 * n);
        let t_cap = self.t_cap.unwrap_or(4 * gens.max_degree().max(1) * max_len.max(1));
        (max_len, t_cap)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SaturationReason {
    TooFewPivots { found: usize, n: usize, pivots: Vec<(usize, usize)> },
    NonMonomialPivot(TmodError),
    GeneratorNotInSpan { generator: String },
    UnitNotInSpan,
    ProductNotInSpan { left: usize, right: usize },
    ClassNotInSpan { element: String },
    TCapExceeded { what: String, degree: usize, t_cap: usize },
}

impl fmt::Display for SaturationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SaturationReason::TooFewPivots { found, n, pivots } => {
                write!(f, "only {found} of {n} pivots found (coordinate, valuation): {pivots:?}")
            }
            SaturationReason::NonMonomialPivot(e) => write!(f, "{e}"),
            SaturationReason::GeneratorNotInSpan { generator } => {
                write!(f, "image of generator {generator} is not in the span of the graded basis")
            }
            SaturationReason::UnitNotInSpan => f.write_str("the unit is not in the span of the graded basis"),
            SaturationReason::ProductNotInSpan { left, right } => {
                write!(f, "product of basis elements {left} and {right} leaves a nonzero remainder")
            }
            SaturationReason::ClassNotInSpan { element } => {
                write!(f, "image of {element} leaves a nonzero remainder")
            }
            SaturationReason::TCapExceeded { what, degree, t_cap } => {
                write!(f, "{what} has t-degree {degree}, above t_cap = {t_cap}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LevelLog {
    pub length: usize,
    pub candidates: usize,
    pub enlarged: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BuildLog {
    pub max_len: usize,
    pub t_cap: usize,
    pub levels: Vec<LevelLog>,
    /// A word length added nothing, so no longer word can either.
    pub closed: bool,
    pub max_degree_seen: usize,
    pub tolerance_trimmed: TrimStats,
}

/// Outcome of checking that `d_i ↦ f(q_i)(z)` is an isomorphism `N_z → A`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsoVerdict {
    pub z: Scalar,
    pub pass: bool,
    pub rank: usize,
    pub n: usize,
    /// Row `i` holds the `A`-coordinates of `f(q_i)(z)`.
    pub change_of_basis: Vec<AVector>,
    /// Products agree: `f(q_k)(z)·f(q_m)(z) = Σ_i σ_{i,k,m}(z) f(q_i)(z)`.
    pub multiplicative: bool,
    /// A nontrivial relation among the rows when the rank is deficient.
    pub dependency: Option<Vec<Scalar>>,
}

/// A completed pipeline run: target algebra, generators, graded basis and family.
#[derive(Clone, Debug)]
pub struct Deformation {
    pub spec: AlgebraSpec,
    pub gens: GeneratorSpec,
    pub basis: GradedBasis,
    pub family: DeformationFamily,
    pub log: BuildLog,
    ctx: FieldContext,
}

fn saturation(r: SaturationReason) -> DeformError {
    DeformError::Saturation(r)
}

fn check_cap(v: &TVector, t_cap: usize, what: impl FnOnce() -> String) -> Result<usize, DeformError> {
    let degree = v.degree().unwrap_or(0);
    if degree > t_cap {
        return Err(saturation(SaturationReason::TCapExceeded { what: what(), degree, t_cap }));
    }
    Ok(degree)
}

/// Label of the `d`-basis element for a witness: `d[w]` for a plain word, else `d{i}`.
fn d_label(witness: &FreeTPoly, index: usize, names: &[String]) -> String {
    match witness.as_plain_word() {
        Some(w) => format!("d[{}]", w.render(names)),
        None => format!("d{}", index + 1),
    }
}

/// Enumerates words breadth-first in shortlex order, extending only words
/// whose image enlarged the module, then certifies saturation and tabulates
/// `σ_{·,k,m}` by reducing every product of basis images.
pub fn build_family(
    spec: &AlgebraSpec,
    gens: &GeneratorSpec,
    opts: BuildOptions,
    ctx: &FieldContext,
) -> Result<Deformation, DeformError> {
    validate_algebra(spec, ctx)?;
    let n = spec.dim();
    let (max_len, t_cap) = opts.resolve(n, gens);
    let names = gens.names();
    let mut basis = GradedBasis::new(n, *ctx);
    let unit = TVector::from_avector(spec.unit(), 0);
    basis.insert(FreeTPoly::one(), unit.clone());
    let mut frontier = vec![(Word::empty(), unit.clone())];
    let mut levels = Vec::new();
    let mut closed = false;
    let mut max_degree_seen = 0;
    for length in 1..=max_len {
        let mut words = Vec::new();
        let mut items = Vec::new();
        for (w, img) in &frontier {
            for (g, gimg) in gens.images().iter().enumerate() {
                let mut wg = w.clone();
                wg.push(g);
                let image = img.mul(gimg, spec);
                let deg = check_cap(&image, t_cap, || format!("image of word {}", wg.render(names)))?;
                max_degree_seen = max_degree_seen.max(deg);
                items.push((FreeTPoly::word(wg.clone()), image.clone()));
                words.push((wg, image));
            }
        }
        let outcomes = basis.insert_batch(items);
        let candidates = words.len();
        frontier = words
            .into_iter()
            .zip(&outcomes)
            .filter(|(_, o)| **o == InsertOutcome::Enlarged)
            .map(|(wi, _)| wi)
            .collect();
        levels.push(LevelLog { length, candidates, enlarged: frontier.len() });
        if frontier.is_empty() {
            closed = true;
            break;
        }
    }

    if basis.len() < n {
        return Err(saturation(SaturationReason::TooFewPivots { found: basis.len(), n, pivots: basis.pivots() }));
    }
    basis.check_monomial_pivots().map_err(|e| saturation(SaturationReason::NonMonomialPivot(e)))?;

    let mut generator_expansions = Vec::with_capacity(gens.len());
    for (name, img) in names.iter().zip(gens.images()) {
        let red = basis.reduce(img);
        if !red.is_member() {
            return Err(saturation(SaturationReason::GeneratorNotInSpan { generator: name.clone() }));
        }
        generator_expansions.push(red.sigma);
    }
    let unit_red = basis.reduce(&unit);
    if !unit_red.is_member() {
        return Err(saturation(SaturationReason::UnitNotInSpan));
    }

    let records = basis.records();
    let mut sigma = vec![vec![Vec::new(); n]; n];
    for k in 0..n {
        for m in 0..n {
            let prod = records[k].image.mul(&records[m].image, spec);
            let deg = check_cap(&prod, t_cap, || format!("product of basis elements {k} and {m}"))?;
            max_degree_seen = max_degree_seen.max(deg);
            let red = basis.reduce(&prod);
            if !red.is_member() {
                return Err(saturation(SaturationReason::ProductNotInSpan { left: k, right: m }));
            }
            sigma[k][m] = red.sigma;
        }
    }
    let labels = records.iter().enumerate().map(|(i, r)| d_label(&r.witness, i, names)).collect();
    let family = DeformationFamily::new(labels, sigma, generator_expansions, unit_red.sigma);
    let log = BuildLog { max_len, t_cap, levels, closed, max_degree_seen, tolerance_trimmed: basis.trims() };
    Ok(Deformation { spec: spec.clone(), gens: gens.clone(), basis, family, log, ctx: *ctx })
}

impl Deformation {
    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn evaluate_f(&self, p: &FreeTPoly) -> TVector {
        evaluate_f(&self.gens, p, &self.spec)
    }

    pub fn n0_algebra(&self) -> Result<AlgebraSpec, DeformError> {
        Ok(self.family.n0_algebra(&self.ctx)?)
    }

    pub fn specialize(&self, z: &Scalar) -> AlgebraSpec {
        self.family.specialize(z)
    }

    pub fn emit_presentation(&self) -> Presentation {
        self.family.emit_presentation()
    }

    /// Rank test of the evaluated basis images at `t = z`.
    pub fn verify_specialization_iso(&self, z: &Scalar) -> Result<IsoVerdict, DeformError> {
        if self.ctx.is_zero(z) {
            return Err(DeformError::Precondition("specialization isomorphism needs z != 0".into()));
        }
        let n = self.dim();
        let images: Vec<AVector> = self.basis.records().iter().map(|r| r.image.eval(z)).collect();
        let rows: Vec<Vec<Scalar>> = images.iter().map(|a| a.0.clone()).collect();
        let r = rank(&rows, &self.ctx);
        let dep = if r < n { dependency(&rows, &self.ctx) } else { None };
        let mut multiplicative = true;
        'outer: for k in 0..n {
            for m in 0..n {
                let lhs = self.spec.mul(&images[k], &images[m]);
                let mut rhs = AVector::zero(n);
                for (i, p) in self.family.product(k, m).iter().enumerate() {
                    rhs = rhs.add(&images[i].scale(&p.eval(z)));
                }
                let scale = lhs.max_modulus().max(rhs.max_modulus());
                if !lhs.sub(&rhs).0.iter().all(|c| self.ctx.is_negligible(c, scale)) {
                    multiplicative = false;
                    break 'outer;
                }
            }
        }
        Ok(IsoVerdict {
            z: z.clone(),
            pass: r == n && multiplicative,
            rank: r,
            n,
            change_of_basis: images,
            multiplicative,
            dependency: dep,
        })
    }

    /// `σ(0)` of the reduction of `f(p)`; zero exactly when `p` is a relation of `N_0`.
    pub fn class_in_n0(&self, p: &FreePoly) -> Result<Vec<Scalar>, DeformError> {
        Ok(self.class_in_family(p)?.iter().map(|s| s.coeff(0)).collect())
    }

    /// Coordinates of the class of `p` over the `d`-basis, as polynomials in `t`.
    pub fn class_in_family(&self, p: &FreePoly) -> Result<Vec<UniPoly>, DeformError> {
        let v = self.evaluate_f(&FreeTPoly::from(p.clone()));
        let red = self.basis.reduce(&v);
        if !red.is_member() {
            return Err(saturation(SaturationReason::ClassNotInSpan { element: p.render(self.gens.names()) }));
        }
        Ok(red.sigma)
    }

    /// Pairs `(k, m)` with `f(q_k) f(q_m) ≠ Σ_i σ_{i,k,m} f(q_i)`.
    pub fn membership_defects(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        let recs = self.basis.records();
        let mut out = Vec::new();
        for k in 0..n {
            for m in 0..n {
                let mut diff = recs[k].image.mul(&recs[m].image, &self.spec);
                for (i, p) in self.family.product(k, m).iter().enumerate() {
                    diff = diff.sub(&recs[i].image.scale_poly(p));
                }
                if diff.0.iter().any(|p| p.coeffs().iter().any(|c| !self.ctx.is_zero(c))) {
                    out.push((k, m));
                }
            }
        }
        out
    }
}
