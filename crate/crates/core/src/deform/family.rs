use serde::Serialize;

use crate::findim::{validate_algebra, AlgebraSpec, FindimError};
use crate::scalars::{join_term, FieldContext, Scalar, UniPoly};

/// Structure polynomials of the family on the `d`-basis:
/// `d_k ∗_t d_m = Σ_i σ_{i,k,m}(t) d_i` with `σ = ζ + t·ξ`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformationFamily {
    labels: Vec<String>,
    /// `sigma[k][m][i] = σ_{i,k,m}`.
    sigma: Vec<Vec<Vec<UniPoly>>>,
    zeta: Vec<Vec<Vec<Scalar>>>,
    xi: Vec<Vec<Vec<UniPoly>>>,
    generator_expansions: Vec<Vec<UniPoly>>,
    unit_expansion: Vec<UniPoly>,
}

/// One line of a multiplication table, `d_k · d_m = text`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureRelation {
    pub left: usize,
    pub right: usize,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    /// `d_k d_m − Σ ζ_{i,k,m} d_i` for all `k, m`.
    pub n0_relations: Vec<StructureRelation>,
    /// The `t`-parametric table of `N_t`.
    pub parametric: Vec<StructureRelation>,
    /// Nonzero products of the Cauchy components `μ_r`, indexed by `r`.
    pub cauchy: Vec<Vec<StructureRelation>>,
}

fn render_combination<T>(labels: &[String], coeffs: &[T], render: impl Fn(&T) -> Option<(Scalar, String)>) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        let Some((s, factor)) = render(c) else { continue };
        let mono = if factor.is_empty() { labels[i].clone() } else { format!("({factor})*{}", labels[i]) };
        out.push_str(&join_term(&out, &s, &mono));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn render_scalars(labels: &[String], coeffs: &[Scalar]) -> String {
    render_combination(labels, coeffs, |c| (!c.is_exact_zero()).then(|| (c.clone(), String::new())))
}

fn render_polys(labels: &[String], coeffs: &[UniPoly]) -> String {
    render_combination(labels, coeffs, |p| {
        if p.is_zero() {
            None
        } else if p.degree() == Some(0) {
            Some((p.coeff(0), String::new()))
        } else {
            Some((Scalar::one(), p.render("t")))
        }
    })
}

impl DeformationFamily {
    pub fn new(
        labels: Vec<String>,
        sigma: Vec<Vec<Vec<UniPoly>>>,
        generator_expansions: Vec<Vec<UniPoly>>,
        unit_expansion: Vec<UniPoly>,
    ) -> Self {
        let zeta = sigma.iter().map(|row| row.iter().map(|s| s.iter().map(|p| p.coeff(0)).collect()).collect()).collect();
        let xi = sigma
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| s.iter().map(|p| p.split_at(1).1).collect())
                    .collect()
            })
            .collect();
        DeformationFamily { labels, sigma, zeta, xi, generator_expansions, unit_expansion }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn sigma(&self, i: usize, k: usize, m: usize) -> &UniPoly {
        &self.sigma[k][m][i]
    }

    /// `σ_{·,k,m}` as a coefficient vector over the `d`-basis.
    pub fn product(&self, k: usize, m: usize) -> &[UniPoly] {
        &self.sigma[k][m]
    }

    pub fn zeta(&self, i: usize, k: usize, m: usize) -> &Scalar {
        &self.zeta[k][m][i]
    }

    pub fn xi(&self, i: usize, k: usize, m: usize) -> &UniPoly {
        &self.xi[k][m][i]
    }

    /// Each generator written over the `d`-basis with coefficients in `ℂ[t]`.
    pub fn generator_expansions(&self) -> &[Vec<UniPoly>] {
        &self.generator_expansions
    }

    pub fn unit_expansion(&self) -> &[UniPoly] {
        &self.unit_expansion
    }

    pub fn max_degree(&self) -> usize {
        self.sigma.iter().flatten().flatten().filter_map(UniPoly::degree).max().unwrap_or(0)
    }

    /// Cauchy component `μ_r`: `mu(r)[k][m][i]` is the `t^r` coefficient of `σ_{i,k,m}`.
    pub fn mu(&self, r: usize) -> Vec<Vec<Vec<Scalar>>> {
        self.sigma.iter().map(|row| row.iter().map(|s| s.iter().map(|p| p.coeff(r)).collect()).collect()).collect()
    }

    /// `N_z`: structure constants `σ(z)`, unit from the unit expansion at `z`.
    pub fn specialize(&self, z: &Scalar) -> AlgebraSpec {
        let tensor = self.sigma.iter().map(|row| row.iter().map(|s| s.iter().map(|p| p.eval(z)).collect()).collect()).collect();
        let unit = self.unit_expansion.iter().map(|p| p.eval(z)).collect();
        AlgebraSpec::from_dense(self.labels.clone(), tensor, unit).expect("family tensor is square")
    }

    /// `N_0` with structure tensor `ζ`, validated.
    pub fn n0_algebra(&self, ctx: &FieldContext) -> Result<AlgebraSpec, FindimError> {
        let unit = self.unit_expansion.iter().map(|p| p.coeff(0)).collect();
        let spec = AlgebraSpec::from_dense(self.labels.clone(), self.zeta.clone(), unit)?;
        validate_algebra(&spec, ctx)?;
        Ok(spec)
    }

    /// Quadruples `(i, k, m, l)` where `Σ_p σ_{p,k,m} σ_{i,p,l} ≠ Σ_p σ_{p,m,l} σ_{i,k,p}` in `ℂ[t]`.
    pub fn associativity_defects(&self, ctx: &FieldContext) -> Vec<(usize, usize, usize, usize)> {
        let n = self.dim();
        let mut out = Vec::new();
        for k in 0..n {
            for m in 0..n {
                for l in 0..n {
                    for i in 0..n {
                        let mut left = UniPoly::zero();
                        let mut right = UniPoly::zero();
                        for p in 0..n {
                            left = left.add(&self.sigma[k][m][p].mul(&self.sigma[p][l][i]));
                            right = right.add(&self.sigma[m][l][p].mul(&self.sigma[k][p][i]));
                        }
                        if !left.approx_eq(&right, ctx) {
                            out.push((i, k, m, l));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn emit_presentation(&self) -> Presentation {
        let n = self.dim();
        let lab = &self.labels;
        let mut n0_relations = Vec::with_capacity(n * n);
        let mut parametric = Vec::with_capacity(n * n);
        for k in 0..n {
            for m in 0..n {
                let lhs = format!("{}*{}", lab[k], lab[m]);
                n0_relations.push(StructureRelation {
                    left: k,
                    right: m,
                    text: format!("{lhs} = {}", render_scalars(lab, &self.zeta[k][m])),
                });
                parametric.push(StructureRelation {
                    left: k,
                    right: m,
                    text: format!("{lhs} = {}", render_polys(lab, &self.sigma[k][m])),
                });
            }
        }
        let cauchy = (0..=self.max_degree())
            .map(|r| {
                let mu = self.mu(r);
                let mut rels = Vec::new();
                for k in 0..n {
                    for m in 0..n {
                        if mu[k][m].iter().all(Scalar::is_exact_zero) {
                            continue;
                        }
                        rels.push(StructureRelation {
                            left: k,
                            right: m,
                            text: format!("mu{r}({}, {}) = {}", lab[k], lab[m], render_scalars(lab, &mu[k][m])),
                        });
                    }
                }
                rels
            })
            .collect();
        Presentation { generators: lab.clone(), n0_relations, parametric, cauchy }
    }
}

impl Serialize for DeformationFamily {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            i: usize,
            k: usize,
            m: usize,
            sigma: &'a UniPoly,
            zeta: &'a Scalar,
            xi: &'a UniPoly,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            n: usize,
            labels: &'a [String],
            sigma: Vec<Entry<'a>>,
            generator_expansions: &'a [Vec<UniPoly>],
            unit_expansion: &'a [UniPoly],
        }
        let n = self.dim();
        let mut sigma = Vec::new();
        for k in 0..n {
            for m in 0..n {
                for i in 0..n {
                    if !self.sigma[k][m][i].is_zero() {
                        sigma.push(Entry {
                            i,
                            k,
                            m,
                            sigma: &self.sigma[k][m][i],
                            zeta: &self.zeta[k][m][i],
                            xi: &self.xi[k][m][i],
                        });
                    }
                }
            }
        }
        Doc {
            n,
            labels: &self.labels,
            sigma,
            generator_expansions: &self.generator_expansions,
            unit_expansion: &self.unit_expansion,
        }
        .serialize(serializer)
    }
}
