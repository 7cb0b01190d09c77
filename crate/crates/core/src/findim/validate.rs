use std::fmt;

use serde::Serialize;

use super::{AVector, AlgebraSpec, FindimError};
use crate::scalars::{FieldContext, Scalar};

/// `(e_i e_j) e_k ≠ e_i (e_j e_k)` at some coordinate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AssociativityFailure {
    pub triple: (usize, usize, usize),
    pub coordinate: usize,
    pub left: Scalar,
    pub right: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnitFailure {
    pub basis_index: usize,
    /// `"left"` for `u·e_i`, `"right"` for `e_i·u`.
    pub side: &'static str,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ValidationReport {
    pub associativity: Vec<AssociativityFailure>,
    pub unit: Vec<UnitFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.associativity.is_empty() && self.unit.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(a) = self.associativity.first() {
            let (i, j, k) = a.triple;
            write!(f, "(e{i} e{j}) e{k} != e{i} (e{j} e{k}) at coordinate {} ({} vs {})", a.coordinate, a.left, a.right)?;
        }
        if let Some(u) = self.unit.first() {
            if !self.associativity.is_empty() {
                f.write_str("; ")?;
            }
            write!(f, "unit fails on the {} for e{}", u.side, u.basis_index)?;
        }
        write!(f, " [{} associativity and {} unit failures]", self.associativity.len(), self.unit.len())
    }
}

fn agree(a: &Scalar, b: &Scalar, ctx: &FieldContext) -> bool {
    let diff = a - b;
    ctx.is_negligible(&diff, a.modulus().max(b.modulus()))
}

/// Checks associativity on all basis triples and the two-sided unit law,
/// collecting every failure.
pub fn validate_algebra(spec: &AlgebraSpec, ctx: &FieldContext) -> Result<ValidationReport, FindimError> {
    let n = spec.dim();
    let mut report = ValidationReport::default();
    let basis: Vec<AVector> = (0..n).map(|i| spec.basis_vector(i)).collect();
    let products: Vec<Vec<AVector>> = (0..n).map(|i| (0..n).map(|j| spec.mul(&basis[i], &basis[j])).collect()).collect();
    for (i, (row, bi)) in products.iter().zip(&basis).enumerate() {
        for (j, pij) in row.iter().enumerate() {
            for (k, bk) in basis.iter().enumerate() {
                let left = spec.mul(pij, bk);
                let right = spec.mul(bi, &products[j][k]);
                for c in 0..n {
                    if !agree(&left.0[c], &right.0[c], ctx) {
                        report.associativity.push(AssociativityFailure {
                            triple: (i, j, k),
                            coordinate: c,
                            left: left.0[c].clone(),
                            right: right.0[c].clone(),
                        });
                    }
                }
            }
        }
    }
    for (i, e) in basis.iter().enumerate() {
        for (side, got) in [("left", spec.mul(spec.unit(), e)), ("right", spec.mul(e, spec.unit()))] {
            if got.0.iter().zip(&e.0).any(|(a, b)| !agree(a, b, ctx)) {
                report.unit.push(UnitFailure { basis_index: i, side });
            }
        }
    }
    if report.passed() {
        Ok(report)
    } else {
        Err(FindimError::ValidationFailure(report))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::{direct_sum, matrix_algebra, scalars};

    #[test]
    fn constructors_validate() {
        let ctx = FieldContext::exact();
        assert!(validate_algebra(&matrix_algebra(2), &ctx).is_ok());
        assert!(validate_algebra(&matrix_algebra(3), &ctx).is_ok());
        assert!(validate_algebra(&direct_sum(&[matrix_algebra(2), scalars(5)]), &ctx).is_ok());
    }

    #[test]
    fn corrupted_tensor_reports_witness() {
        let mut m = matrix_algebra(2);
        m.set_product(0, 1, &[Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero()]);
        let Err(FindimError::ValidationFailure(report)) = validate_algebra(&m, &FieldContext::exact()) else {
            panic!("corrupted tensor validated");
        };
        // (m11 m12) m21 = 0 but m11 (m12 m21) = m11.
        assert!(report.associativity.iter().any(|a| a.triple == (0, 1, 2) && a.coordinate == 0));
        assert!(report.unit.iter().any(|u| u.basis_index == 1));
    }
}
