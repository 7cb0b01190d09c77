#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use tdeform::cli::RunConfig;
use tdeform::deform::{build_family, BuildOptions, Deformation, GeneratorSpec};
use tdeform::findim::{direct_sum, matrix_algebra, scalars, AVector, AlgebraSpec};
use tdeform::freealg::{FreePoly, Word};
use tdeform::scalars::{FieldContext, Scalar};
use tdeform::tmod::TVector;

pub fn build_config(cfg: &RunConfig) -> Deformation {
    let ctx = cfg.field_context();
    let spec = cfg.build_algebra().expect("algebra");
    let gens = cfg.build_generators(&spec).expect("generators");
    let opts = BuildOptions { max_len: cfg.max_word_len, t_cap: cfg.t_cap };
    build_family(&spec, &gens, opts, &ctx).expect("build")
}

/// Random block algebra of dimension at most `max_dim`.
pub fn random_block_algebra<R: Rng>(rng: &mut R, max_dim: usize) -> AlgebraSpec {
    loop {
        let mut parts = Vec::new();
        let mut dim = 0;
        let blocks = rng.gen_range(1..=3);
        for _ in 0..blocks {
            if rng.gen_bool(0.35) && dim + 4 <= max_dim {
                parts.push(matrix_algebra(2));
                dim += 4;
            } else if dim < max_dim {
                let k = rng.gen_range(1..=(max_dim - dim).min(3));
                parts.push(scalars(k));
                dim += k;
            }
        }
        if !parts.is_empty() {
            return if parts.len() == 1 { parts.pop().unwrap() } else { direct_sum(&parts) };
        }
    }
}

fn random_avector<R: Rng>(rng: &mut R, n: usize) -> AVector {
    AVector((0..n).map(|_| Scalar::from_int(rng.gen_range(-2..=2))).collect())
}

/// Images `Σ t^w a_w` with up to `max_terms` terms and t-weights in `1..=max_weight`.
pub fn random_images<R: Rng>(
    rng: &mut R,
    spec: &AlgebraSpec,
    count: usize,
    max_weight: usize,
    max_terms: usize,
) -> Vec<TVector> {
    let n = spec.dim();
    (0..count)
        .map(|_| {
            let mut v = TVector::zero(n);
            let terms = rng.gen_range(1..=max_terms);
            for _ in 0..terms {
                let w = rng.gen_range(1..=max_weight);
                v = v.add(&TVector::from_avector(&random_avector(rng, n), w));
            }
            v
        })
        .collect()
}

pub fn names(count: usize) -> Vec<String> {
    ["x", "y", "z", "u"].iter().take(count).map(|s| s.to_string()).collect()
}

/// Random instance on a block algebra, resampled until the build saturates.
pub fn random_deformation<R: Rng>(rng: &mut R, max_dim: usize, max_weight: usize) -> (Deformation, usize) {
    let ctx = FieldContext::exact();
    let mut attempts = 0;
    loop {
        attempts += 1;
        let spec = random_block_algebra(rng, max_dim);
        let count = rng.gen_range(2..=3);
        let images = random_images(rng, &spec, count, max_weight, 2);
        if images.iter().any(|v| v.is_zero()) {
            continue;
        }
        let Ok(gens) = GeneratorSpec::new(names(count), images, &spec) else { continue };
        if let Ok(def) = build_family(&spec, &gens, BuildOptions::default(), &ctx) {
            return (def, attempts);
        }
    }
}

pub fn shuffled<T: Clone, R: Rng>(rng: &mut R, items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.shuffle(rng);
    v
}

// ---------------------------------------------------------------------------
// Quotient dimension by plain linear algebra on word spans.

fn weight(w: &Word, weights: &[u32]) -> u64 {
    w.letters().map(|g| weights[g] as u64).sum()
}

/// All words of weight at most `max_weight`.
pub fn words_up_to_weight(weights: &[u32], max_weight: u64) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..weights.len() {
                let mut u = w.clone();
                u.push(g);
                if weight(&u, weights) <= max_weight {
                    next.push(u);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Rank of the span of `rows` after eliminating every column in `first`
/// before any other; returns (rank, rank of rows whose pivot is outside `first`).
fn split_rank(mut rows: Vec<Vec<Scalar>>, first: &[usize], rest: &[usize]) -> (usize, usize) {
    let ctx = FieldContext::exact();
    let mut rank = 0;
    let mut low = 0;
    for (phase, cols) in [first, rest].into_iter().enumerate() {
        for &c in cols {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_exact_zero()) else { continue };
            rows.swap(rank, p);
            let inv = rows[rank][c].inv(&ctx).unwrap();
            let pivot: Vec<Scalar> = rows[rank].iter().map(|x| x * &inv).collect();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && !row[c].is_exact_zero() {
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x -= &(&f * y);
                    }
                }
            }
            rows[rank] = pivot;
            rank += 1;
            if phase == 1 {
                low += 1;
            }
        }
    }
    (rank, low)
}

pub fn is_homogeneous(relations: &[FreePoly], weights: &[u32]) -> bool {
    relations.iter().all(|r| {
        let mut ws = r.terms().map(|(w, _)| weight(w, weights));
        match ws.next() {
            Some(first) => ws.all(|x| x == first),
            None => true,
        }
    })
}

/// `dim W_L − dim(J ∩ W_L)` where `W_L` is spanned by words of weight `≤ L`
/// and `J` by all `u·r·v` of weight `≤ L + slack`.
pub fn filtered_quotient_dim(relations: &[FreePoly], weights: &[u32], level: u64, slack: u64) -> usize {
    let top = level + slack;
    let words = words_up_to_weight(weights, top);
    let index: std::collections::HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut rows = Vec::new();
    for r in relations {
        let rw = r.terms().map(|(w, _)| weight(w, weights)).max().unwrap_or(0);
        if rw > top {
            continue;
        }
        let outer = words_up_to_weight(weights, top - rw);
        for u in &outer {
            for v in &outer {
                if weight(u, weights) + weight(v, weights) + rw > top {
                    continue;
                }
                let p = r.sandwich(u, v);
                let mut row = vec![Scalar::zero(); words.len()];
                for (w, c) in p.terms() {
                    row[index[w]] = c.clone();
                }
                rows.push(row);
            }
        }
    }
    let (high, low): (Vec<usize>, Vec<usize>) = (0..words.len()).partition(|&i| weight(&words[i], weights) > level);
    let (_, in_low) = split_rank(rows, &high, &low);
    low.len() - in_low
}

/// Dimension of `ℂ⟨X⟩/(relations)` per weight level, for homogeneous relations.
fn graded_piece(relations: &[FreePoly], weights: &[u32], d: u64) -> usize {
    let all = words_up_to_weight(weights, d);
    let piece: Vec<Word> = all.iter().filter(|w| weight(w, weights) == d).cloned().collect();
    let index: std::collections::HashMap<Word, usize> = piece.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut rows = Vec::new();
    for r in relations {
        let Some((w0, _)) = r.terms().next() else { continue };
        let rw = weight(w0, weights);
        if rw > d {
            continue;
        }
        for u in &all {
            for v in &all {
                if weight(u, weights) + weight(v, weights) + rw != d {
                    continue;
                }
                let mut row = vec![Scalar::zero(); piece.len()];
                for (w, c) in r.sandwich(u, v).terms() {
                    row[index[w]] = c.clone();
                }
                rows.push(row);
            }
        }
    }
    let cols: Vec<usize> = (0..piece.len()).collect();
    let (rank, _) = split_rank(rows, &cols, &[]);
    piece.len() - rank
}

/// Quotient dimension found by linear algebra; `None` if no window of
/// `max weight` empty levels appears below `cap`.
pub fn oracle_quotient_dim(relations: &[FreePoly], weights: &[u32], cap: u64) -> Option<usize> {
    let window = *weights.iter().max().unwrap() as u64;
    if is_homogeneous(relations, weights) {
        let mut total = 0;
        let mut empty = 0;
        for d in 0..=cap {
            let k = graded_piece(relations, weights, d);
            total += k;
            empty = if k == 0 { empty + 1 } else { 0 };
            if empty == window {
                return Some(total);
            }
        }
        return None;
    }
    let slack = 2 * relations.iter().flat_map(|r| r.terms().map(|(w, _)| weight(w, weights))).max().unwrap_or(1);
    let mut prev = Vec::new();
    for level in 0..=cap {
        let d = filtered_quotient_dim(relations, weights, level, slack);
        prev.push(d);
        let k = prev.len();
        if k > window as usize && prev[k - 1 - window as usize..].iter().all(|&x| x == d) {
            return Some(d);
        }
    }
    None
}
