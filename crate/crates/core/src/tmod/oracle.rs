//! Brute-force reference for the pivot valuations of the echelon, by
//! `ℂ`-linear algebra on `t`-shifted word images. Meant for small instances.

use super::TVector;
use crate::findim::AlgebraSpec;
use crate::freealg::enumerate_words;
use crate::scalars::linalg::row_reduce;
use crate::scalars::{FieldContext, Scalar};

/// Every `t^s · f(w)` with `|w| ≤ max_len` and total degree `≤ t_cap`,
/// flattened to coefficient rows indexed by `(coordinate, degree)`.
fn shifted_rows(spec: &AlgebraSpec, gens: &[TVector], max_len: usize, t_cap: usize) -> Vec<Vec<Scalar>> {
    let n = spec.dim();
    let width = n * (t_cap + 1);
    let mut rows = Vec::new();
    for w in enumerate_words(gens.len(), max_len) {
        let mut image = TVector::from_avector(spec.unit(), 0);
        for g in w.letters() {
            image = image.mul(&gens[g], spec);
        }
        let Some(deg) = image.degree() else { continue };
        if deg > t_cap {
            continue;
        }
        for s in 0..=t_cap - deg {
            let mut row = vec![Scalar::zero(); width];
            for (j, p) in image.0.iter().enumerate() {
                for (d, c) in p.coeffs().iter().enumerate() {
                    row[j * (t_cap + 1) + d + s] = c.clone();
                }
            }
            rows.push(row);
        }
    }
    rows
}

/// Pivot `(coordinate, valuation)` pairs in selection order: repeatedly the
/// untaken coordinate of least valuation over the span vanishing at all taken
/// coordinates, lower index on ties.
pub fn minimal_valuations_oracle(
    spec: &AlgebraSpec,
    gens: &[TVector],
    max_len: usize,
    t_cap: usize,
    ctx: &FieldContext,
) -> Vec<(usize, usize)> {
    let n = spec.dim();
    let stride = t_cap + 1;
    let rows = shifted_rows(spec, gens, max_len, t_cap);
    let mut taken: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    loop {
        let mut order: Vec<usize> = taken.iter().flat_map(|&j| (0..stride).map(move |d| j * stride + d)).collect();
        order.extend((0..n).filter(|j| !taken.contains(j)).flat_map(|j| (0..stride).map(move |d| j * stride + d)));
        let ech = row_reduce(&rows, Some(&order), ctx);
        let in_taken = |col: usize| taken.contains(&(col / stride));
        let mut best: Option<(usize, usize)> = None;
        for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
            if in_taken(pc) {
                continue;
            }
            for j in (0..n).filter(|j| !taken.contains(j)) {
                if let Some(d) = (0..stride).find(|&d| !ctx.is_zero(&row[j * stride + d])) {
                    if best.is_none_or(|b| (d, j) < b) {
                        best = Some((d, j));
                    }
                }
            }
        }
        match best {
            Some((d, j)) => {
                taken.push(j);
                out.push((j, d));
            }
            None => break,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::{matrix_algebra, scalars, AVector};

    #[test]
    fn small_instances() {
        let ctx = FieldContext::exact();
        let cc = scalars(2);
        let gens = vec![
            TVector::from_avector(&AVector(vec![Scalar::i(), Scalar::zero()]), 1),
            TVector::from_avector(&AVector(vec![Scalar::zero(), Scalar::one()]), 1),
        ];
        assert_eq!(minimal_valuations_oracle(&cc, &gens, 2, 4, &ctx), vec![(0, 0), (1, 1)]);

        let one = scalars(1);
        let g = vec![TVector::from_avector(one.unit(), 1)];
        assert_eq!(minimal_valuations_oracle(&one, &g, 2, 4, &ctx), vec![(0, 0)]);

        let m = matrix_algebra(2);
        let gens = vec![
            TVector::from_avector(&AVector(vec![1.into(), 0.into(), 0.into(), (-1).into()]), 1),
            TVector::from_avector(&AVector(vec![0.into(), 1.into(), 1.into(), 0.into()]), 1),
        ];
        let mut got = minimal_valuations_oracle(&m, &gens, 2, 6, &ctx);
        assert_eq!(got, vec![(0, 0), (1, 1), (3, 1), (2, 2)]);
        got.sort_by_key(|p| p.1);
        assert_eq!(got.iter().map(|p| p.1).collect::<Vec<_>>(), vec![0, 1, 1, 2]);
    }
}
