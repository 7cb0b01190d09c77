//! Dense Gaussian elimination over [`Scalar`], used for rank certificates.

use super::{FieldContext, Scalar};

/// Result of reducing a list of row vectors.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Reduced rows, each with a leading 1 in `pivots[r]`.
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Row-reduces `rows` (all of equal length) to reduced echelon form, visiting
/// columns in the order given by `column_order` (all columns when `None`).
///
/// On the approximate backend the pivot in each column is the entry of largest
/// modulus, and entries below `eps · (1 + column scale)` count as zero.
pub fn row_reduce(rows: &[Vec<Scalar>], column_order: Option<&[usize]>, ctx: &FieldContext) -> Echelon {
    let width = rows.first().map_or(0, Vec::len);
    let natural: Vec<usize> = (0..width).collect();
    let order = column_order.unwrap_or(&natural);
    let mut work: Vec<Vec<Scalar>> = rows.to_vec();
    let scale = work.iter().flatten().map(Scalar::modulus).fold(0.0, f64::max);
    let mut done = 0;
    let mut pivots = Vec::new();
    for &col in order {
        if done == work.len() {
            break;
        }
        let candidate = if ctx.is_exact() {
            (done..work.len()).find(|&r| !work[r][col].is_exact_zero())
        } else {
            (done..work.len())
                .filter(|&r| !ctx.is_negligible(&work[r][col], scale))
                .max_by(|&a, &b| work[a][col].modulus().total_cmp(&work[b][col].modulus()))
        };
        let Some(r) = candidate else { continue };
        work.swap(done, r);
        let inv = work[done][col].inv(ctx).expect("pivot is nonzero");
        for v in work[done].iter_mut() {
            *v = &*v * &inv;
        }
        work[done][col] = Scalar::one();
        let pivot_row = work[done].clone();
        for (other, row) in work.iter_mut().enumerate() {
            if other == done {
                continue;
            }
            let factor = row[col].clone();
            if factor.is_exact_zero() {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&factor * p);
            }
            row[col] = Scalar::zero();
        }
        pivots.push(col);
        done += 1;
    }
    work.truncate(done);
    Echelon { rows: work, pivots }
}

pub fn rank(rows: &[Vec<Scalar>], ctx: &FieldContext) -> usize {
    row_reduce(rows, None, ctx).rank()
}

/// A nonzero vector `c` with `Σ c_r rows[r] = 0`, if the rows are dependent.
pub fn dependency(rows: &[Vec<Scalar>], ctx: &FieldContext) -> Option<Vec<Scalar>> {
    // Augment with an identity block and reduce; a row that vanishes on the
    // original columns carries the dependency in the identity part.
    let m = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let augmented: Vec<Vec<Scalar>> = rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v = row.clone();
            v.extend((0..m).map(|c| if c == r { Scalar::one() } else { Scalar::zero() }));
            v
        })
        .collect();
    let order: Vec<usize> = (0..width + m).collect();
    let ech = row_reduce(&augmented, Some(&order), ctx);
    ech.rows
        .iter()
        .zip(&ech.pivots)
        .find(|(_, &p)| p >= width)
        .map(|(row, _)| row[width..].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rank_and_dependency() {
        let ctx = FieldContext::exact();
        let rows = vec![vec![s(1), s(2), s(3)], vec![s(2), s(4), s(6)], vec![s(0), s(1), s(1)]];
        assert_eq!(rank(&rows, &ctx), 2);
        let dep = dependency(&rows, &ctx).unwrap();
        for c in 0..3 {
            let mut acc = Scalar::zero();
            for (d, row) in dep.iter().zip(&rows) {
                acc += &(d * &row[c]);
            }
            assert!(acc.is_exact_zero());
        }
        let id = vec![vec![s(1), s(0)], vec![s(0), s(1)]];
        assert!(dependency(&id, &ctx).is_none());
    }

    #[test]
    fn approx_rank_ignores_noise() {
        let ctx = FieldContext::approx(1e-9);
        let rows = vec![
            vec![Scalar::approx(1.0, 0.0), Scalar::approx(1.0, 0.0)],
            vec![Scalar::approx(1.0 + 1e-13, 0.0), Scalar::approx(1.0, 0.0)],
        ];
        assert_eq!(rank(&rows, &ctx), 1);
    }
}
