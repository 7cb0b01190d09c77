use std::path::Path;

use super::config::RunConfig;
use super::report::*;
use super::CliError;
use crate::deform::{build_family, BuildOptions, DeformError};
use crate::findim::{validate_algebra, FindimError};
use crate::rewrite::{parse_relations, verify_presentation, PresentationStatus, VerifyError, WordOrder};
use crate::scalars::Scalar;

pub struct RunOutcome {
    pub report: PipelineReport,
    pub exit_code: i32,
}

fn deform_error(e: DeformError) -> CliError {
    match e {
        DeformError::Saturation(r) => CliError::Saturation(format!("{r}; raise max_len or t_cap")),
        DeformError::Algebra(FindimError::ValidationFailure(r)) => CliError::Config(format!("algebra axioms fail: {r}")),
        other => CliError::Config(other.to_string()),
    }
}

fn verify_error(e: VerifyError) -> CliError {
    match e {
        VerifyError::Deform(d) => deform_error(d),
        VerifyError::Rewrite(r) => CliError::Config(r.to_string()),
    }
}

/// Reads relations one per line; blank lines and `#` comments are skipped.
pub fn read_relation_file(path: &Path) -> Result<Vec<String>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

/// Runs the whole pipeline. `base_dir` resolves a relative
/// `verify_presentation` path in the config.
pub fn run(config: &RunConfig, base_dir: Option<&Path>) -> Result<RunOutcome, CliError> {
    config.check()?;
    let ctx = config.field_context();
    let spec = config.build_algebra()?;
    validate_algebra(&spec, &ctx).map_err(|e| CliError::Config(e.to_string()))?;
    let gens = config.build_generators(&spec)?;
    let names = gens.names().to_vec();
    let opts = BuildOptions { max_len: config.max_word_len, t_cap: config.t_cap };
    let def = build_family(&spec, &gens, opts, &ctx).map_err(deform_error)?;
    let mut warnings = Vec::new();
    if !def.log.closed {
        warnings.push(format!(
            "word search stopped at max_len {} before closing; saturation was certified by products",
            def.log.max_len
        ));
    }

    let n0_result = def.n0_algebra();
    let n0_valid = n0_result.is_ok();
    let n0 = match n0_result {
        Ok(a) => a,
        Err(e) => {
            warnings.push(format!("N_0 fails validation: {e}"));
            def.specialize(&Scalar::zero())
        }
    };
    let family_axioms = FamilyAxioms {
        associativity_defects: def.family.associativity_defects(&ctx).len(),
        membership_defects: def.membership_defects().len(),
        n0_valid,
    };

    let points = if config.specialize.is_empty() { vec![Scalar::one()] } else { config.specialize.clone() };
    let mut specializations = Vec::new();
    let mut iso = Vec::new();
    for z in &points {
        let algebra = def.specialize(z);
        let failures = match validate_algebra(&algebra, &ctx) {
            Ok(_) => 0,
            Err(FindimError::ValidationFailure(r)) => r.associativity.len() + r.unit.len(),
            Err(e) => return Err(CliError::Config(e.to_string())),
        };
        specializations.push(SpecializationReport {
            z: z.clone(),
            dim: algebra.dim(),
            valid: failures == 0,
            validation_failures: failures,
            algebra,
        });
        if !ctx.is_zero(z) {
            iso.push(def.verify_specialization_iso(z).map_err(deform_error)?);
        }
    }

    let weights = config.word_weights.clone().unwrap_or_else(|| gens.valuations().iter().map(|&v| v as u32).collect());
    let order = WordOrder::weighted(weights);
    let mut sources: Vec<(String, Vec<String>)> = Vec::new();
    if !config.relations.is_empty() {
        sources.push(("inline".into(), config.relations.clone()));
    }
    if let Some(path) = &config.verify_presentation {
        let p = Path::new(path);
        let full = match base_dir {
            Some(dir) if p.is_relative() => dir.join(p),
            _ => p.to_path_buf(),
        };
        sources.push((path.clone(), read_relation_file(&full)?));
    }
    let mut claimed = Vec::new();
    for (source, texts) in sources {
        let rels = parse_relations(&texts, &names).map_err(|e| CliError::Config(e.to_string()))?;
        let verdict = verify_presentation(&def, &rels, &order, config.degree_bound).map_err(verify_error)?;
        claimed.push(ClaimedPresentation { source, verdict });
    }
    let relation_classes = claimed.first().map(|c| c.verdict.relations.clone()).unwrap_or_default();
    let presentations: Vec<PresentationSummary> = claimed
        .iter()
        .map(|c| PresentationSummary {
            source: c.source.clone(),
            status: c.verdict.status,
            reason: c.verdict.reason.clone(),
        })
        .collect();

    let all_pass = family_axioms.associativity_defects == 0
        && family_axioms.membership_defects == 0
        && family_axioms.n0_valid
        && specializations.iter().all(|s| s.valid && s.dim == def.dim())
        && iso.iter().all(|v| v.pass)
        && presentations.iter().all(|p| p.status == PresentationStatus::Pass);

    let report = PipelineReport {
        config_echo: config.clone(),
        graded_basis: GradedBasisReport {
            n: def.dim(),
            saturated: def.basis.is_saturated(),
            pivots: def.basis.records().iter().map(|r| r.summary(spec.labels(), &names)).collect(),
            search: def.log.clone(),
        },
        family: def.family.clone(),
        n0,
        presentations: PresentationsReport { structure: def.emit_presentation(), claimed },
        specializations,
        verifications: VerificationsReport { family_axioms, iso, relation_classes, presentations, all_pass },
        diagnostics: Diagnostics {
            backend: ctx.backend,
            eps: ctx.eps,
            word_weights: order.weights().to_vec(),
            tolerance_trimmed: def.log.tolerance_trimmed,
            warnings,
        },
    };
    Ok(RunOutcome { report, exit_code: if all_pass { 0 } else { 2 } })
}
