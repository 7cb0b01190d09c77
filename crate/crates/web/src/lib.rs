//! Browser bindings: run a catalog example, specialize its family at a point
//! `z`, and solve for the root data of the contraction example.
//!
//! Every export returns a JSON string; failures come back as `{"error": ..}`.

use std::cell::RefCell;

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use tdeform::cli::{example, run, wemyss_data, RunConfig};
use tdeform::deform::{build_family, BuildOptions, Deformation};
use tdeform::findim::{validate_algebra, AlgebraSpec};
use tdeform::scalars::Scalar;

thread_local! {
    static CACHE: RefCell<Option<(String, Deformation)>> = const { RefCell::new(None) };
}

fn point(re: f64, im: f64) -> Scalar {
    Scalar::approx(re, im)
}

/// The shortest decimal form of each part, read back as an exact rational.
fn exact_point(re: f64, im: f64) -> Option<Scalar> {
    let re: Scalar = re.to_string().parse().ok()?;
    let im: Scalar = im.to_string().parse().ok()?;
    Some(&re + &(&im * &Scalar::i()))
}

/// Integer-valued parameters stay exact so `e = 1` reproduces the CLI run.
fn parameter(re: f64, im: f64) -> Scalar {
    if re.fract() == 0.0 && im == 0.0 && re.abs() < 1e9 {
        Scalar::from_int(re as i64)
    } else {
        point(re, im)
    }
}

fn config(name: &str, e: &Scalar) -> Result<RunConfig, String> {
    example(name, Some(e)).map(|entry| entry.config).map_err(|err| err.to_string())
}

fn error(msg: impl ToString) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn with_deformation<T>(name: &str, e: &Scalar, f: impl FnOnce(&Deformation) -> T) -> Result<T, String> {
    let key = format!("{name}:{e}");
    CACHE.with(|cache| {
        let mut slot = cache.borrow_mut();
        if slot.as_ref().is_none_or(|(k, _)| *k != key) {
            let cfg = config(name, e)?;
            let ctx = cfg.field_context();
            let spec = cfg.build_algebra().map_err(|err| err.to_string())?;
            let gens = cfg.build_generators(&spec).map_err(|err| err.to_string())?;
            let opts = BuildOptions { max_len: cfg.max_word_len, t_cap: cfg.t_cap };
            let def = build_family(&spec, &gens, opts, &ctx).map_err(|err| err.to_string())?;
            *slot = Some((key, def));
        }
        Ok(f(&slot.as_ref().unwrap().1))
    })
}

fn combination(coords: &[(usize, Scalar)], labels: &[String]) -> String {
    let terms: Vec<String> = coords
        .iter()
        .filter(|(_, c)| c.modulus() > 1e-12)
        .map(|(k, c)| {
            if c.is_one() {
                labels[*k].clone()
            } else if (-c).is_one() {
                format!("-{}", labels[*k])
            } else {
                format!("({c})·{}", labels[*k])
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

fn table(a: &AlgebraSpec, labels: &[String]) -> Vec<Vec<String>> {
    let n = a.dim();
    (0..n).map(|i| (0..n).map(|j| combination(a.product(i, j), labels)).collect()).collect()
}

/// Runs the full pipeline on a catalog example and returns the text report
/// with the headline numbers.
#[wasm_bindgen]
pub fn run_example(name: &str, e_re: f64, e_im: f64) -> String {
    let e = parameter(e_re, e_im);
    let cfg = match config(name, &e) {
        Ok(c) => c,
        Err(msg) => return error(msg),
    };
    match run(&cfg, None) {
        Ok(out) => json!({
            "n": out.report.graded_basis.n,
            "all_pass": out.report.verifications.all_pass,
            "exit_code": out.exit_code,
            "text": out.report.to_text(),
        })
        .to_string(),
        Err(err) => json!({ "error": err.to_string(), "exit_code": err.exit_code() }).to_string(),
    }
}

/// Specializes the family of a catalog example at `t = z`: multiplication
/// table, axiom check and the isomorphism test against the target algebra.
#[wasm_bindgen]
pub fn specialize_example(name: &str, e_re: f64, e_im: f64, z_re: f64, z_im: f64) -> String {
    let e = parameter(e_re, e_im);
    let result = with_deformation(name, &e, |def| {
        let ctx = *def.ctx();
        let z = match ctx.is_exact() {
            true => exact_point(z_re, z_im).unwrap_or_else(|| point(z_re, z_im)),
            false => point(z_re, z_im),
        };
        let a = def.specialize(&z);
        let valid = validate_algebra(&a, &ctx).is_ok();
        let iso: Value = if z.modulus() <= 1e-12 {
            json!(null)
        } else {
            match def.verify_specialization_iso(&z) {
                Ok(v) => json!({ "pass": v.pass, "rank": v.rank, "n": v.n }),
                Err(err) => json!({ "error": err.to_string() }),
            }
        };
        json!({
            "z": z.to_string(),
            "dim": a.dim(),
            "labels": def.family.labels(),
            "valid": valid,
            "iso": iso,
            "table": table(&a, def.family.labels()),
        })
    });
    match result {
        Ok(v) => v.to_string(),
        Err(msg) => error(msg),
    }
}

/// Root data `α_k`, `β_k` of the contraction example at parameter `e`.
#[wasm_bindgen]
pub fn wemyss_roots(e_re: f64, e_im: f64) -> String {
    match wemyss_data(&point(e_re, e_im)) {
        Ok(d) => {
            let pair = |s: &Scalar| {
                let c = s.to_complex();
                json!([c.re, c.im])
            };
            json!({
                "c_squared": pair(&d.c_squared),
                "alpha": d.alpha.iter().map(pair).collect::<Vec<_>>(),
                "beta": d.beta.iter().map(pair).collect::<Vec<_>>(),
                "residuals": d.root_residuals,
                "min_separation": d.min_root_separation,
            })
            .to_string()
        }
        Err(err) => error(err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn runs_the_catalog() {
        let v = parse(&run_example("m2", 1.0, 0.0));
        assert_eq!(v["n"], 4);
        assert_eq!(v["all_pass"], true);
        assert!(parse(&run_example("nope", 1.0, 0.0))["error"].is_string());
    }

    #[test]
    fn specialization_at_one_is_isomorphic() {
        let v = parse(&specialize_example("cc", 1.0, 0.0, 1.0, 0.0));
        assert_eq!(v["dim"], 2);
        assert_eq!(v["valid"], true);
        assert_eq!(v["iso"]["pass"], true);
        let at_zero = parse(&specialize_example("cc", 1.0, 0.0, 0.0, 0.0));
        assert_eq!(at_zero["table"][1][1], "0");
        assert!(at_zero["iso"].is_null());
    }

    #[test]
    fn roots_and_degenerate_parameter() {
        let v = parse(&wemyss_roots(1.0, 0.0));
        assert_eq!(v["alpha"].as_array().unwrap().len(), 5);
        assert!(parse(&wemyss_roots(0.0, 0.0))["error"].as_str().unwrap().contains("e"));
    }
}
