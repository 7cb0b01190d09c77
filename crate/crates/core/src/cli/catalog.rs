//! Built-in runs: the two-point algebra, `M_2`, and the contraction algebra
//! degenerating from `M_2 ⊕ ℂ^5`.

use num_complex::Complex64;
use serde::Serialize;

use super::config::{AlgebraConfig, BlockConfig, BlockEntry, ElementConfig, GeneratorConfig, RunConfig, TermConfig};
use super::CliError;
use crate::scalars::{poly_roots, Backend, FieldContext, Scalar, UniPoly};

pub const EXAMPLE_NAMES: [&str; 3] = ["cc", "m2", "wemyss"];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpectedSummary {
    pub n: usize,
    /// Every relation check and presentation verdict passes.
    pub relations_pass: bool,
    pub iso_at_one: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExampleCatalogEntry {
    pub name: String,
    pub config: RunConfig,
    pub expected: ExpectedSummary,
}

fn s(x: i64) -> Scalar {
    Scalar::from_int(x)
}

fn generator(name: &str, t_power: usize, entries: Vec<BlockEntry>) -> GeneratorConfig {
    GeneratorConfig { name: name.into(), terms: vec![TermConfig { t_power, element: ElementConfig::Blocks(entries) }] }
}

fn base(name: &str, blocks: Vec<BlockConfig>, generators: Vec<GeneratorConfig>, relations: &[&str]) -> RunConfig {
    RunConfig {
        name: Some(name.into()),
        algebra: AlgebraConfig::Blocks { blocks },
        generators,
        backend: Backend::Exact,
        tol: None,
        max_word_len: None,
        t_cap: None,
        specialize: Vec::new(),
        relations: relations.iter().map(|r| r.to_string()).collect(),
        verify_presentation: None,
        word_weights: None,
        degree_bound: None,
        emit: Default::default(),
    }
}

/// `ℂ ⊕ ℂ` with `x ↦ t·(i, 0)`, `y ↦ t·(0, 1)`.
pub fn cc() -> RunConfig {
    let mut cfg = base(
        "cc",
        vec![BlockConfig::Scalars(2)],
        vec![
            generator("x", 1, vec![BlockEntry::Tuple(vec![Scalar::i(), s(0)])]),
            generator("y", 1, vec![BlockEntry::Tuple(vec![s(0), s(1)])]),
        ],
        &["x^2", "x*y", "y*x", "y^2", "y - i*x"],
    );
    cfg.specialize = vec![s(1)];
    cfg
}

/// `M_2` with `x ↦ t·diag(1, −1)`, `y ↦ t·antidiag(1, 1)`.
pub fn m2() -> RunConfig {
    let mut cfg = base(
        "m2",
        vec![BlockConfig::Matrix(2)],
        vec![
            generator("x", 1, vec![BlockEntry::Matrix(vec![vec![s(1), s(0)], vec![s(0), s(-1)]])]),
            generator("y", 1, vec![BlockEntry::Matrix(vec![vec![s(0), s(1)], vec![s(1), s(0)]])]),
        ],
        &["x^2", "y^2", "x*y + y*x"],
    );
    cfg.specialize = vec![s(1), s(2), Scalar::i()];
    cfg
}

/// Numerical data of the contraction-algebra example for a parameter `e`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WemyssData {
    pub e: Scalar,
    /// Roots of `x² − x + 1`, `i1` with positive imaginary part.
    pub i1: Scalar,
    pub i2: Scalar,
    pub c: Scalar,
    pub c_squared: Scalar,
    /// Roots of `(2z − 1)² z³ + c²`.
    pub alpha: Vec<Scalar>,
    pub beta: Vec<Scalar>,
    pub root_residuals: Vec<f64>,
    pub min_root_separation: f64,
}

const ROOT_EPS: f64 = 1e-12;

fn degenerate(msg: String) -> CliError {
    CliError::DegenerateParameter(msg)
}

/// Solves for `α`, `β` and checks the non-degeneracy conditions on `e`.
pub fn wemyss_data(e: &Scalar) -> Result<WemyssData, CliError> {
    let ctx = FieldContext::approx(ROOT_EPS);
    let ez = e.to_complex();
    if ez.norm() <= ROOT_EPS {
        return Err(degenerate("e must be nonzero".into()));
    }
    let one_plus = Complex64::new(1.0, 0.0) + ez * ez;
    if one_plus.norm() <= ROOT_EPS {
        return Err(degenerate("1 + e^2 must be nonzero".into()));
    }
    let quad = UniPoly::from_coeffs(vec![Scalar::approx(1.0, 0.0), Scalar::approx(-1.0, 0.0), Scalar::approx(1.0, 0.0)]);
    let sixth = poly_roots(&quad, &ctx).map_err(|err| degenerate(err.to_string()))?;
    let (i1, i2) = {
        let (a, b) = (sixth.roots[0].to_complex(), sixth.roots[1].to_complex());
        if a.im > b.im { (a, b) } else { (b, a) }
    };
    let root = one_plus.sqrt();
    let c = (i1 - i2) / root;
    let c2 = c * c;
    if (c2 - Complex64::new(3.0, 0.0)).norm() <= 1e-9 {
        return Err(degenerate("c^2 must differ from 3".into()));
    }
    // (2z − 1)² z³ + c² = 4z⁵ − 4z⁴ + z³ + c²
    let g = UniPoly::from_coeffs(vec![
        Scalar::Approx(c2),
        Scalar::approx(0.0, 0.0),
        Scalar::approx(0.0, 0.0),
        Scalar::approx(1.0, 0.0),
        Scalar::approx(-4.0, 0.0),
        Scalar::approx(4.0, 0.0),
    ]);
    let roots = poly_roots(&g, &ctx).map_err(|err| degenerate(format!("quintic: {err}")))?;
    if !roots.distinct {
        return Err(degenerate(format!(
            "the quintic has a repeated root (separation {:.3e})",
            roots.min_separation
        )));
    }
    let alpha: Vec<Complex64> = roots.roots.iter().map(Scalar::to_complex).collect();
    if let Some(a) = alpha.iter().find(|a| (*a - Complex64::new(0.5, 0.0)).norm() <= 1e-9) {
        return Err(degenerate(format!("root {a} equals 1/2")));
    }
    let beta: Vec<Complex64> = alpha.iter().map(|a| c / (2.0 * a - 1.0)).collect();
    Ok(WemyssData {
        e: e.clone(),
        i1: Scalar::Approx(i1),
        i2: Scalar::Approx(i2),
        c: Scalar::Approx(c),
        c_squared: Scalar::Approx(c2),
        alpha: alpha.into_iter().map(Scalar::Approx).collect(),
        beta: beta.into_iter().map(Scalar::Approx).collect(),
        root_residuals: roots.residuals,
        min_root_separation: roots.min_separation,
    })
}

/// `M_2 ⊕ ℂ^5` with `x ↦ t²(diag(i1, i2) ⊕ α)` and
/// `y ↦ t³((1+e²)^{-1/2} [[1, e], [e, −1]] ⊕ β)`.
pub fn wemyss(e: &Scalar) -> Result<RunConfig, CliError> {
    let d = wemyss_data(e)?;
    let ez = e.to_complex();
    let inv_root = (Complex64::new(1.0, 0.0) + ez * ez).sqrt().inv();
    let a = |z: Complex64| Scalar::Approx(z);
    let zero = Scalar::approx(0.0, 0.0);
    let x = generator(
        "x",
        2,
        vec![
            BlockEntry::Matrix(vec![vec![d.i1.clone(), zero.clone()], vec![zero.clone(), d.i2.clone()]]),
            BlockEntry::Tuple(d.alpha.clone()),
        ],
    );
    let y = generator(
        "y",
        3,
        vec![
            BlockEntry::Matrix(vec![vec![a(inv_root), a(inv_root * ez)], vec![a(inv_root * ez), a(-inv_root)]]),
            BlockEntry::Tuple(d.beta.clone()),
        ],
    );
    let mut cfg = base(
        "wemyss",
        vec![BlockConfig::Matrix(2), BlockConfig::Scalars(5)],
        vec![x, y],
        &["x*y + y*x", "x^3 + y^2", "y^3"],
    );
    cfg.backend = Backend::Approx;
    cfg.tol = Some(1e-8);
    cfg.specialize = vec![s(1)];
    Ok(cfg)
}

/// Looks up a catalog entry; `e` is only used by `wemyss` (default 1).
pub fn example(name: &str, e: Option<&Scalar>) -> Result<ExampleCatalogEntry, CliError> {
    let (config, n) = match name {
        "cc" => (cc(), 2),
        "m2" => (m2(), 4),
        "wemyss" => (wemyss(e.unwrap_or(&Scalar::one()))?, 9),
        other => return Err(CliError::UnknownExample(other.to_string())),
    };
    Ok(ExampleCatalogEntry {
        name: name.to_string(),
        config,
        expected: ExpectedSummary { n, relations_pass: true, iso_at_one: true },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wemyss_roots_satisfy_the_quintic() {
        let d = wemyss_data(&Scalar::one()).unwrap();
        assert!((d.c_squared.to_complex() - Complex64::new(-1.5, 0.0)).norm() < 1e-12);
        assert_eq!(d.alpha.len(), 5);
        assert!(d.root_residuals.iter().all(|&r| r < 1e-10));
        for (a, b) in d.alpha.iter().zip(&d.beta) {
            let (a, b) = (a.to_complex(), b.to_complex());
            assert!((a * a * a + b * b).norm() < 1e-10);
        }
        let sum = d.i1.to_complex() + d.i2.to_complex();
        assert!((sum - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn zero_parameter_is_degenerate() {
        assert!(matches!(wemyss(&Scalar::zero()), Err(CliError::DegenerateParameter(_))));
        assert!(matches!(example("nope", None), Err(CliError::UnknownExample(_))));
    }
}
