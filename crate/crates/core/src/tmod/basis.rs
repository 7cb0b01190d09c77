use std::cmp::Ordering;

use serde::Serialize;

use super::{TVector, TmodError};
use crate::freealg::{FreeTPoly, Word};
use crate::scalars::{FieldContext, Scalar, UniPoly};

/// One row of the echelon: `image` has the monic polynomial `pivot` at
/// `coordinate` and `image = f(witness)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PivotRecord {
    pub coordinate: usize,
    pub valuation: usize,
    pub pivot: UniPoly,
    pub witness: FreeTPoly,
    pub image: TVector,
}

impl PivotRecord {
    pub fn is_monomial(&self) -> bool {
        self.pivot.is_t_power()
    }

    pub fn summary(&self, labels: &[String], names: &[String]) -> PivotSummary {
        PivotSummary {
            pivot_label: labels[self.coordinate].clone(),
            valuation: self.valuation,
            witness: self.witness.render(names),
            image: self.image.0.iter().map(|p| p.render("t")).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PivotSummary {
    pub pivot_label: String,
    pub valuation: usize,
    pub witness: String,
    pub image: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InsertOutcome {
    /// `v` already lay in the span.
    Absorbed,
    Enlarged,
}

/// `v = Σ σ_i · image_i + remainder`.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction {
    pub sigma: Vec<UniPoly>,
    pub remainder: TVector,
}

impl Reduction {
    pub fn is_member(&self) -> bool {
        self.remainder.is_zero()
    }
}

/// Coefficients dropped as tolerance-zero on the approximate backend.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct TrimStats {
    pub count: usize,
    pub max_magnitude: f64,
}

impl TrimStats {
    fn record(&mut self, magnitude: f64) {
        if magnitude > 0.0 {
            self.count += 1;
            self.max_magnitude = self.max_magnitude.max(magnitude);
        }
    }
}

/// The echelon of `im f` as a `ℂ[t]`-module.
///
/// Records are kept in selection order: each record's coordinate is the
/// untaken coordinate of least attainable valuation in the submodule vanishing
/// at all earlier pivot coordinates (lower index on ties). Every record has
/// zero entries at earlier pivot coordinates, and its entries at later pivot
/// coordinates are reduced below the degree of that pivot.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    n: usize,
    ctx: FieldContext,
    records: Vec<PivotRecord>,
    trims: TrimStats,
}

#[derive(Clone)]
struct Gen {
    witness: FreeTPoly,
    image: TVector,
}

/// Witness preference: fewer terms, then smaller support compared from the
/// top word down.
fn witness_cmp(a: &FreeTPoly, b: &FreeTPoly) -> Ordering {
    let key = |p: &FreeTPoly| -> Vec<(Word, u32)> {
        let mut ks: Vec<(Word, u32)> = p.terms().map(|(w, d, _)| (w.clone(), d)).collect();
        ks.reverse();
        ks
    };
    a.len().cmp(&b.len()).then_with(|| key(a).cmp(&key(b)))
}

impl GradedBasis {
    pub fn new(n: usize, ctx: FieldContext) -> Self {
        GradedBasis { n, ctx, records: Vec::new(), trims: TrimStats::default() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn records(&self) -> &[PivotRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn trims(&self) -> TrimStats {
        self.trims
    }

    /// `(coordinate, valuation)` per record, in selection order.
    pub fn pivots(&self) -> Vec<(usize, usize)> {
        self.records.iter().map(|r| (r.coordinate, r.valuation)).collect()
    }

    /// Full rank with every pivot a power of `t`.
    pub fn is_saturated(&self) -> bool {
        self.records.len() == self.n && self.records.iter().all(PivotRecord::is_monomial)
    }

    /// Fails on the first pivot that is not a power of `t`.
    pub fn check_monomial_pivots(&self) -> Result<(), TmodError> {
        match self.records.iter().find(|r| !r.is_monomial()) {
            Some(r) => Err(TmodError::NonMonomialPivot { coordinate: r.coordinate, pivot: r.pivot.clone() }),
            None => Ok(()),
        }
    }

    fn trim_vec(&mut self, v: &mut TVector) {
        let m = v.trim(&self.ctx);
        self.trims.record(m);
    }

    /// Divides `v` through the records in order.
    pub fn reduce(&self, v: &TVector) -> Reduction {
        assert_eq!(v.len(), self.n, "vector length does not match the algebra");
        let mut rem = v.clone();
        rem.trim(&self.ctx);
        let mut sigma = Vec::with_capacity(self.records.len());
        for rec in &self.records {
            let (q, r) = rem.0[rec.coordinate].div_rem(&rec.pivot, &self.ctx).expect("pivot is nonzero");
            if !q.is_zero() {
                rem = rem.sub(&rec.image.scale_poly(&q));
                rem.0[rec.coordinate] = r;
                rem.trim(&self.ctx);
            }
            sigma.push(q);
        }
        Reduction { sigma, remainder: rem }
    }

    /// Adds `v = f(q)` to the generating set and recomputes the echelon.
    pub fn insert(&mut self, q: FreeTPoly, v: TVector) -> InsertOutcome {
        self.insert_batch(vec![(q, v)]).remove(0)
    }

    /// Inserts several pairs at once. Witness preference then applies across
    /// the whole batch, so a simpler witness later in the batch is not shadowed
    /// by an earlier one spanning the same direction. Outcomes are relative
    /// to the basis before the batch.
    pub fn insert_batch(&mut self, items: Vec<(FreeTPoly, TVector)>) -> Vec<InsertOutcome> {
        let mut outcomes = Vec::with_capacity(items.len());
        let mut fresh = Vec::new();
        for (q, mut v) in items {
            assert_eq!(v.len(), self.n, "vector length does not match the algebra");
            self.trim_vec(&mut v);
            if self.reduce(&v).is_member() {
                outcomes.push(InsertOutcome::Absorbed);
            } else {
                outcomes.push(InsertOutcome::Enlarged);
            }
            if !v.is_zero() {
                fresh.push(Gen { witness: q, image: v });
            }
        }
        if outcomes.contains(&InsertOutcome::Enlarged) {
            let mut gens: Vec<Gen> =
                self.records.drain(..).map(|r| Gen { witness: r.witness, image: r.image }).collect();
            gens.extend(fresh);
            self.records = self.echelon(gens);
        }
        outcomes
    }

    fn echelon(&mut self, mut pending: Vec<Gen>) -> Vec<PivotRecord> {
        let mut taken = vec![false; self.n];
        let mut out: Vec<PivotRecord> = Vec::new();
        loop {
            pending.retain(|g| !g.image.is_zero());
            let choice = (0..self.n)
                .filter(|&j| !taken[j])
                .filter_map(|j| pending.iter().filter_map(|g| g.image.0[j].valuation()).min().map(|v| (v, j)))
                .min();
            let Some((valuation, j)) = choice else { break };

            // Euclid on coordinate j until a single generator remains nonzero there.
            loop {
                let live: Vec<usize> = (0..pending.len()).filter(|&g| !pending[g].image.0[j].is_zero()).collect();
                if live.len() == 1 {
                    break;
                }
                let p = *live
                    .iter()
                    .min_by(|&&a, &&b| {
                        let (ga, gb) = (&pending[a], &pending[b]);
                        ga.image.0[j]
                            .degree()
                            .cmp(&gb.image.0[j].degree())
                            .then_with(|| witness_cmp(&ga.witness, &gb.witness))
                            .then(a.cmp(&b))
                    })
                    .expect("a live generator");
                let pivot = pending[p].clone();
                for &g in &live {
                    if g == p {
                        continue;
                    }
                    let (q, r) = pending[g].image.0[j].div_rem(&pivot.image.0[j], &self.ctx).expect("nonzero pivot");
                    let mut image = pending[g].image.sub(&pivot.image.scale_poly(&q));
                    image.0[j] = r;
                    self.trim_vec(&mut image);
                    let mut witness = pending[g].witness.sub(&pivot.witness.scale_t_poly(q.coeffs()));
                    witness.trim(&self.ctx);
                    pending[g] = Gen { witness, image };
                }
                pending.retain(|g| !g.image.is_zero());
            }

            let g = pending.iter().position(|g| !g.image.0[j].is_zero()).expect("a live generator");
            let Gen { witness, image } = pending.remove(g);
            let lc = image.0[j].leading_coeff().expect("nonzero entry").clone();
            let inv = lc.inv(&self.ctx).expect("nonzero leading coefficient");
            let mut image = image.scale(&inv);
            let mut pivot_coeffs = image.0[j].coeffs().to_vec();
            *pivot_coeffs.last_mut().expect("nonzero") = Scalar::one();
            let pivot = UniPoly::from_coeffs(pivot_coeffs);
            image.0[j] = pivot.clone();
            debug_assert_eq!(pivot.valuation(), Some(valuation));
            out.push(PivotRecord { coordinate: j, valuation, pivot, witness: witness.scale(&inv), image });
            taken[j] = true;
        }

        // Back-substitution: reduce entries at later pivot coordinates.
        for i in 0..out.len() {
            for l in i + 1..out.len() {
                let j = out[l].coordinate;
                let (q, r) = out[i].image.0[j].div_rem(&out[l].pivot, &self.ctx).expect("nonzero pivot");
                if q.is_zero() {
                    continue;
                }
                let mut image = out[i].image.sub(&out[l].image.scale_poly(&q));
                image.0[j] = r;
                self.trim_vec(&mut image);
                let mut witness = out[i].witness.sub(&out[l].witness.scale_t_poly(q.coeffs()));
                witness.trim(&self.ctx);
                out[i].image = image;
                out[i].witness = witness;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::{matrix_algebra, scalars, AVector, AlgebraSpec};

    fn av(xs: Vec<Scalar>) -> AVector {
        AVector(xs)
    }

    fn words(spec: &AlgebraSpec, gens: &[TVector], ws: &[&[usize]]) -> Vec<(FreeTPoly, TVector)> {
        ws.iter()
            .map(|w| {
                let mut image = TVector::from_avector(spec.unit(), 0);
                for &g in *w {
                    image = image.mul(&gens[g], spec);
                }
                (FreeTPoly::word(Word::from_letters(w.iter().copied())), image)
            })
            .collect()
    }

    fn cc() -> (AlgebraSpec, Vec<TVector>) {
        let spec = scalars(2);
        let a = TVector::from_avector(&av(vec![Scalar::i(), Scalar::zero()]), 1);
        let b = TVector::from_avector(&av(vec![Scalar::zero(), Scalar::one()]), 1);
        (spec, vec![a, b])
    }

    fn m2() -> (AlgebraSpec, Vec<TVector>) {
        let spec = matrix_algebra(2);
        let a = TVector::from_avector(&av(vec![1.into(), 0.into(), 0.into(), (-1).into()]), 1);
        let b = TVector::from_avector(&av(vec![0.into(), 1.into(), 1.into(), 0.into()]), 1);
        (spec, vec![a, b])
    }

    #[test]
    fn two_point_pivots() {
        let (spec, gens) = cc();
        let mut basis = GradedBasis::new(2, FieldContext::exact());
        basis.insert_batch(words(&spec, &gens, &[&[], &[0], &[1]]));
        assert_eq!(basis.pivots(), vec![(0, 0), (1, 1)]);
        assert_eq!(basis.records()[0].witness, FreeTPoly::one());
        assert_eq!(basis.records()[1].witness, FreeTPoly::word(Word::letter(1)));
        let yy = words(&spec, &gens, &[&[1, 1]]).remove(0).1;
        let red = basis.reduce(&yy);
        assert!(red.is_member());
        assert_eq!(red.sigma, vec![UniPoly::zero(), UniPoly::t_pow(1)]);
    }

    #[test]
    fn matrix_pivots() {
        let (spec, gens) = m2();
        let mut basis = GradedBasis::new(4, FieldContext::exact());
        for (q, v) in words(&spec, &gens, &[&[], &[0], &[1], &[0, 1]]) {
            basis.insert(q, v);
        }
        assert_eq!(basis.pivots(), vec![(0, 0), (1, 1), (3, 1), (2, 2)]);
        assert!(basis.is_saturated());
        let xx = words(&spec, &gens, &[&[0, 0]]).remove(0).1;
        let red = basis.reduce(&xx);
        assert!(red.is_member());
        assert_eq!(red.sigma[0], UniPoly::t_pow(2));
        assert!(red.sigma[1..].iter().all(UniPoly::is_zero));
    }

    #[test]
    fn zero_vector_is_absorbed() {
        let mut basis = GradedBasis::new(2, FieldContext::exact());
        assert_eq!(basis.insert(FreeTPoly::zero(), TVector::zero(2)), InsertOutcome::Absorbed);
        assert!(basis.is_empty());
        let red = basis.reduce(&TVector::zero(2));
        assert!(red.sigma.is_empty() && red.is_member());
    }

    #[test]
    fn reduce_is_idempotent() {
        let (spec, gens) = m2();
        let mut basis = GradedBasis::new(4, FieldContext::exact());
        for (q, v) in words(&spec, &gens, &[&[], &[1]]) {
            basis.insert(q, v);
        }
        let xy = words(&spec, &gens, &[&[0, 1]]).remove(0).1;
        let first = basis.reduce(&xy);
        assert!(!first.is_member());
        let second = basis.reduce(&first.remainder);
        assert!(second.sigma.iter().all(UniPoly::is_zero));
        assert_eq!(second.remainder, first.remainder);
    }
}
