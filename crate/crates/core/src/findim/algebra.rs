use serde::Serialize;

use super::FindimError;
use crate::scalars::{FieldContext, Scalar};

/// An element of `A`: one coordinate per basis vector.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct AVector(pub Vec<Scalar>);

impl AVector {
    pub fn zero(n: usize) -> Self {
        AVector(vec![Scalar::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn add(&self, other: &AVector) -> Self {
        AVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &AVector) -> Self {
        AVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        AVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn max_modulus(&self) -> f64 {
        self.0.iter().map(Scalar::modulus).fold(0.0, f64::max)
    }

    pub fn is_zero(&self, ctx: &FieldContext) -> bool {
        self.0.iter().all(|c| ctx.is_zero(c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    /// `M_d`, coordinates are matrix entries in row-major order.
    Matrix(usize),
    /// `ℂ^k` with orthogonal idempotents.
    Scalars(usize),
    /// An explicitly tabulated algebra of the given dimension.
    Explicit(usize),
}

impl BlockKind {
    pub fn dim(&self) -> usize {
        match *self {
            BlockKind::Matrix(d) => d * d,
            BlockKind::Scalars(k) | BlockKind::Explicit(k) => k,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub kind: BlockKind,
    pub offset: usize,
}

/// Basis labels, sparse structure constants `e_i·e_j = Σ_k c_{ijk} e_k`, and
/// unit coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec {
    labels: Vec<String>,
    /// `table[i][j]` lists the nonzero `(k, c_{ijk})`, sorted by `k`.
    table: Vec<Vec<Vec<(usize, Scalar)>>>,
    unit: AVector,
    blocks: Vec<Block>,
}

impl AlgebraSpec {
    /// Builds a spec from a dense tensor `c[i][j][k]`.
    pub fn from_dense(labels: Vec<String>, tensor: Vec<Vec<Vec<Scalar>>>, unit: Vec<Scalar>) -> Result<Self, FindimError> {
        let n = labels.len();
        if n == 0 {
            return Err(FindimError::Shape("an algebra needs at least one basis vector".into()));
        }
        if tensor.len() != n || unit.len() != n {
            return Err(FindimError::Shape(format!(
                "expected a {n}x{n}x{n} tensor and unit of length {n}, got {} rows and unit of length {}",
                tensor.len(),
                unit.len()
            )));
        }
        let mut table = Vec::with_capacity(n);
        for (i, row) in tensor.into_iter().enumerate() {
            if row.len() != n {
                return Err(FindimError::Shape(format!("row {i} of the tensor has length {}", row.len())));
            }
            let mut out_row = Vec::with_capacity(n);
            for (j, entry) in row.into_iter().enumerate() {
                if entry.len() != n {
                    return Err(FindimError::Shape(format!("entry ({i},{j}) of the tensor has length {}", entry.len())));
                }
                out_row.push(entry.into_iter().enumerate().filter(|(_, c)| !c.is_exact_zero()).collect());
            }
            table.push(out_row);
        }
        Ok(AlgebraSpec { labels, table, unit: AVector(unit), blocks: vec![Block { kind: BlockKind::Explicit(n), offset: 0 }] })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &AVector {
        &self.unit
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Nonzero entries of `e_i·e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i][j]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.table[i][j].iter().find(|(kk, _)| *kk == k).map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero)
    }

    /// Overwrites `e_i·e_j`; entries are given densely.
    pub fn set_product(&mut self, i: usize, j: usize, coords: &[Scalar]) {
        self.table[i][j] = coords.iter().cloned().enumerate().filter(|(_, c)| !c.is_exact_zero()).collect();
    }

    pub fn dense_tensor(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.constant(i, j, k)).collect()).collect())
            .collect()
    }

    pub fn is_exact(&self) -> bool {
        self.unit.0.iter().all(Scalar::is_exact) && self.table.iter().flatten().flatten().all(|(_, c)| c.is_exact())
    }

    pub fn basis_vector(&self, i: usize) -> AVector {
        AVector::basis(self.dim(), i)
    }

    /// `(u·v)_k = Σ_{i,j} u_i v_j c_{ijk}`.
    pub fn mul(&self, u: &AVector, v: &AVector) -> AVector {
        let n = self.dim();
        let mut out = AVector::zero(n);
        for (i, ui) in u.0.iter().enumerate() {
            if ui.is_exact_zero() {
                continue;
            }
            for (j, vj) in v.0.iter().enumerate() {
                if vj.is_exact_zero() {
                    continue;
                }
                let uv = ui * vj;
                for (k, c) in &self.table[i][j] {
                    out.0[*k] += &(&uv * c);
                }
            }
        }
        out
    }
}

impl Serialize for AlgebraSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            left: usize,
            right: usize,
            result: &'a [(usize, Scalar)],
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            n: usize,
            labels: &'a [String],
            unit: &'a AVector,
            products: Vec<Entry<'a>>,
        }
        let mut products = Vec::new();
        for (i, row) in self.table.iter().enumerate() {
            for (j, result) in row.iter().enumerate() {
                if !result.is_empty() {
                    products.push(Entry { left: i, right: j, result });
                }
            }
        }
        Doc { n: self.dim(), labels: &self.labels, unit: &self.unit, products }.serialize(serializer)
    }
}

/// `M_d(ℂ)` on matrix units `m_{pq}`, row-major: `m_{pq}·m_{rs} = δ_{qr} m_{ps}`.
pub fn matrix_algebra(d: usize) -> AlgebraSpec {
    assert!(d >= 1, "matrix_algebra needs d >= 1");
    let n = d * d;
    let idx = |p: usize, q: usize| p * d + q;
    let mut table = vec![vec![Vec::new(); n]; n];
    for p in 0..d {
        for q in 0..d {
            for s in 0..d {
                table[idx(p, q)][idx(q, s)] = vec![(idx(p, s), Scalar::one())];
            }
        }
    }
    let mut unit = AVector::zero(n);
    for p in 0..d {
        unit.0[idx(p, p)] = Scalar::one();
    }
    let labels = (0..d).flat_map(|p| (0..d).map(move |q| format!("m{}{}", p + 1, q + 1))).collect();
    AlgebraSpec { labels, table, unit, blocks: vec![Block { kind: BlockKind::Matrix(d), offset: 0 }] }
}

/// `ℂ^k` with basis of orthogonal idempotents `s_1, …, s_k`.
pub fn scalars(k: usize) -> AlgebraSpec {
    assert!(k >= 1, "scalars needs k >= 1");
    let mut table = vec![vec![Vec::new(); k]; k];
    for (i, row) in table.iter_mut().enumerate() {
        row[i] = vec![(i, Scalar::one())];
    }
    AlgebraSpec {
        labels: (1..=k).map(|i| format!("s{i}")).collect(),
        table,
        unit: AVector(vec![Scalar::one(); k]),
        blocks: vec![Block { kind: BlockKind::Scalars(k), offset: 0 }],
    }
}

/// Blockwise direct sum. Labels get a `b{index}_` prefix only when two parts
/// would otherwise share a label.
pub fn direct_sum(parts: &[AlgebraSpec]) -> AlgebraSpec {
    assert!(!parts.is_empty(), "direct_sum needs at least one part");
    if parts.len() == 1 {
        return parts[0].clone();
    }
    let n: usize = parts.iter().map(AlgebraSpec::dim).sum();
    let mut all: Vec<&String> = parts.iter().flat_map(|p| p.labels.iter()).collect();
    all.sort();
    let clash = all.windows(2).any(|w| w[0] == w[1]);

    let mut labels = Vec::with_capacity(n);
    let mut table = vec![vec![Vec::new(); n]; n];
    let mut unit = Vec::with_capacity(n);
    let mut blocks = Vec::new();
    let mut offset = 0;
    for (b, part) in parts.iter().enumerate() {
        for l in &part.labels {
            labels.push(if clash { format!("b{}_{l}", b + 1) } else { l.clone() });
        }
        for (i, row) in part.table.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                table[offset + i][offset + j] = entry.iter().map(|(k, c)| (offset + k, c.clone())).collect();
            }
        }
        unit.extend(part.unit.0.iter().cloned());
        blocks.extend(part.blocks.iter().map(|blk| Block { kind: blk.kind, offset: offset + blk.offset }));
        offset += part.dim();
    }
    AlgebraSpec { labels, table, unit: AVector(unit), blocks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> AVector {
        AVector(xs.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    #[test]
    fn matrix_units() {
        let m = matrix_algebra(2);
        assert_eq!(m.labels(), ["m11", "m12", "m21", "m22"]);
        assert_eq!(m.mul(&m.basis_vector(1), &m.basis_vector(2)), m.basis_vector(0));
        assert_eq!(m.mul(&m.basis_vector(1), &m.basis_vector(1)), AVector::zero(4));
        assert_eq!(matrix_algebra(1).dim(), 1);
    }

    #[test]
    fn diag_times_antidiag() {
        let m = matrix_algebra(2);
        assert_eq!(m.mul(&v(&[1, 0, 0, -1]), &v(&[0, 1, 1, 0])), v(&[0, 1, -1, 0]));
        assert_eq!(m.mul(m.unit(), &v(&[3, 1, 4, 1])), v(&[3, 1, 4, 1]));
    }

    #[test]
    fn two_point_algebra() {
        let cc = scalars(2);
        let a = AVector(vec![Scalar::i(), Scalar::zero()]);
        let b = v(&[0, 1]);
        assert_eq!(cc.mul(&a, &b), AVector::zero(2));
        assert_eq!(cc.mul(&a, &a), v(&[-1, 0]));
    }

    #[test]
    fn direct_sum_layout() {
        let s = direct_sum(&[matrix_algebra(2), scalars(5)]);
        assert_eq!(s.dim(), 9);
        assert_eq!(s.labels()[4], "s1");
        assert_eq!(s.blocks()[1], Block { kind: BlockKind::Scalars(5), offset: 4 });
        assert!(s.product(0, 4).is_empty());
        assert!(s.product(5, 3).is_empty());
        let clash = direct_sum(&[scalars(1), scalars(1)]);
        assert_eq!(clash.labels(), ["b1_s1", "b2_s1"]);
        assert_eq!(direct_sum(&[scalars(3)]), scalars(3));
    }

    #[test]
    fn dense_round_trip() {
        let m = matrix_algebra(2);
        let back = AlgebraSpec::from_dense(m.labels().to_vec(), m.dense_tensor(), m.unit().0.clone()).unwrap();
        assert_eq!(back.dense_tensor(), m.dense_tensor());
        assert!(AlgebraSpec::from_dense(vec!["a".into()], vec![], vec![Scalar::one()]).is_err());
    }
}
