use std::fmt::Write;

use serde::Serialize;

use super::config::RunConfig;
use crate::deform::{BuildLog, DeformationFamily, IsoVerdict, Presentation};
use crate::findim::AlgebraSpec;
use crate::rewrite::{PresentationStatus, PresentationVerdict, RelationCheck};
use crate::scalars::{Backend, Scalar};
use crate::tmod::{PivotSummary, TrimStats};

#[derive(Clone, Debug, Serialize)]
pub struct GradedBasisReport {
    pub n: usize,
    pub saturated: bool,
    pub pivots: Vec<PivotSummary>,
    pub search: BuildLog,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimedPresentation {
    /// `"inline"` or the file the relations came from.
    pub source: String,
    pub verdict: PresentationVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationsReport {
    pub structure: Presentation,
    pub claimed: Vec<ClaimedPresentation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpecializationReport {
    pub z: Scalar,
    pub dim: usize,
    pub valid: bool,
    pub validation_failures: usize,
    pub algebra: AlgebraSpec,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationSummary {
    pub source: String,
    pub status: PresentationStatus,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyAxioms {
    pub associativity_defects: usize,
    pub membership_defects: usize,
    pub n0_valid: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationsReport {
    pub family_axioms: FamilyAxioms,
    pub iso: Vec<IsoVerdict>,
    pub relation_classes: Vec<RelationCheck>,
    pub presentations: Vec<PresentationSummary>,
    pub all_pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Diagnostics {
    pub backend: Backend,
    pub eps: f64,
    pub word_weights: Vec<u32>,
    pub tolerance_trimmed: TrimStats,
    pub warnings: Vec<String>,
}

/// The full record of one run. Field names and order are stable.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub config_echo: RunConfig,
    pub graded_basis: GradedBasisReport,
    pub family: DeformationFamily,
    pub n0: AlgebraSpec,
    pub presentations: PresentationsReport,
    pub specializations: Vec<SpecializationReport>,
    pub verifications: VerificationsReport,
    pub diagnostics: Diagnostics,
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

impl PipelineReport {
    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let name = self.config_echo.name.as_deref().unwrap_or("run");
        let gb = &self.graded_basis;
        let _ = writeln!(out, "tdeform report: {name}");
        let _ = writeln!(out, "backend: {} (eps {:e})", self.diagnostics.backend, self.diagnostics.eps);
        let _ = writeln!(out, "dimension n = {}", gb.n);
        let _ = writeln!(
            out,
            "graded basis: {} pivots, {}, search {} at length {} (max_len {}, t_cap {})",
            gb.pivots.len(),
            if gb.saturated { "saturated" } else { "not saturated" },
            if gb.search.closed { "closed" } else { "stopped" },
            gb.search.levels.last().map_or(0, |l| l.length),
            gb.search.max_len,
            gb.search.t_cap
        );
        for (label, p) in self.family.labels().iter().zip(&gb.pivots) {
            let _ = writeln!(out, "  {label}: pivot {} at t^{}, witness {}", p.pivot_label, p.valuation, p.witness);
        }
        let _ = writeln!(out, "N_0 multiplication:");
        for r in &self.presentations.structure.n0_relations {
            let _ = writeln!(out, "  {}", r.text);
        }
        let _ = writeln!(out, "N_t multiplication:");
        for r in &self.presentations.structure.parametric {
            let _ = writeln!(out, "  {}", r.text);
        }
        let ax = &self.verifications.family_axioms;
        let _ = writeln!(
            out,
            "family axioms: associativity {}, membership {}, N_0 {}",
            verdict(ax.associativity_defects == 0),
            verdict(ax.membership_defects == 0),
            verdict(ax.n0_valid)
        );
        if !self.verifications.relation_classes.is_empty() {
            let _ = writeln!(out, "relations in N_0:");
            for c in &self.verifications.relation_classes {
                let _ = writeln!(out, "  {}: max |class| {:.3e} {}", c.relation, c.max_modulus, verdict(c.vanishes));
            }
        }
        for p in &self.presentations.claimed {
            let v = &p.verdict;
            let _ = writeln!(out, "presentation ({}): {:?}: {}", p.source, v.status, v.reason);
            let _ = writeln!(out, "  rules: {}", v.rules.join(", "));
            let _ = writeln!(out, "  irreducible words: {}", v.irreducible.join(" "));
        }
        for (s, iso) in self.specializations.iter().zip(self.iso_for_each()) {
            let _ = write!(out, "N_z at z = {}: dim {}, axioms {}", s.z, s.dim, verdict(s.valid));
            match iso {
                Some(v) => {
                    let _ = writeln!(out, ", isomorphic to A: {} (rank {}/{})", verdict(v.pass), v.rank, v.n);
                }
                None => {
                    let _ = writeln!(out);
                }
            }
        }
        if self.diagnostics.tolerance_trimmed.count > 0 {
            let t = self.diagnostics.tolerance_trimmed;
            let _ = writeln!(out, "tolerance-trimmed coefficients: {} (largest {:.3e})", t.count, t.max_magnitude);
        }
        for w in &self.diagnostics.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        let _ = writeln!(out, "result: {}", verdict(self.verifications.all_pass));
        out
    }

    fn iso_for_each(&self) -> Vec<Option<&IsoVerdict>> {
        self.specializations.iter().map(|s| self.verifications.iso.iter().find(|v| v.z == s.z)).collect()
    }
}
