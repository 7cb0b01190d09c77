use serde::Serialize;

use super::{complete, default_degree_bound, CompletionStatus, QuotientValue, RewriteError, WordOrder};
use crate::deform::{DeformError, Deformation};
use crate::freealg::FreePoly;
use crate::scalars::linalg::rank;
use crate::scalars::Scalar;

/// Irreducible words beyond this many are not used for the spanning check.
const SPANNING_WORDS: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PresentationStatus {
    Pass,
    Fail,
    /// The quotient dimension could only be bounded below.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub class: Vec<Scalar>,
    pub max_modulus: f64,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PresentationVerdict {
    pub status: PresentationStatus,
    pub n: usize,
    pub relations: Vec<RelationCheck>,
    pub rules: Vec<String>,
    pub completion: CompletionStatus,
    pub degree_bound: u64,
    pub word_weights: Vec<u32>,
    pub quotient: QuotientValue,
    pub irreducible: Vec<String>,
    /// Rank of the `N_0`-classes of the irreducible words.
    pub spanning_rank: usize,
    pub reason: String,
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Deform(#[from] DeformError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

/// Checks that `ℂ⟨X⟩/⟨relations⟩ → N_0` is an isomorphism: every relation has
/// zero class, the classes of the irreducible words span `N_0`, and the
/// quotient has dimension exactly `n`.
pub fn verify_presentation(
    def: &Deformation,
    relations: &[FreePoly],
    order: &WordOrder,
    degree_bound: Option<u64>,
) -> Result<PresentationVerdict, VerifyError> {
    let names = def.gens.names();
    let n = def.dim();
    let ctx = def.ctx();
    let mut checks = Vec::with_capacity(relations.len());
    for r in relations {
        let class = def.class_in_n0(r)?;
        let max_modulus = class.iter().map(Scalar::modulus).fold(0.0, f64::max);
        let vanishes = class.iter().all(|c| ctx.is_zero(c));
        checks.push(RelationCheck { relation: r.render(names), class, max_modulus, vanishes });
    }

    let bound = degree_bound.unwrap_or_else(|| default_degree_bound(relations, order));
    let sys = complete(relations, order.clone(), bound)?;
    let q = sys.quotient_dimension();

    let rows: Vec<Vec<Scalar>> = q
        .irreducible
        .iter()
        .take(SPANNING_WORDS)
        .map(|w| def.class_in_n0(&FreePoly::word(w.clone())))
        .collect::<Result<_, _>>()?;
    let spanning_rank = if rows.is_empty() { 0 } else { rank(&rows, ctx) };

    let all_vanish = checks.iter().all(|c| c.vanishes);
    let (status, reason) = if !all_vanish {
        let bad: Vec<&str> = checks.iter().filter(|c| !c.vanishes).map(|c| c.relation.as_str()).collect();
        (PresentationStatus::Fail, format!("relations not zero in N_0: {}", bad.join(", ")))
    } else if spanning_rank < n {
        (PresentationStatus::Fail, format!("irreducible words span only {spanning_rank} of {n} dimensions"))
    } else {
        match q.value {
            QuotientValue::Exact(d) if d == n => (PresentationStatus::Pass, format!("quotient dimension {d} = {n}")),
            QuotientValue::Exact(d) => (PresentationStatus::Fail, format!("quotient dimension {d} != {n}")),
            QuotientValue::LowerBound(d) if d > n => {
                (PresentationStatus::Fail, format!("quotient dimension is at least {d} > {n}"))
            }
            QuotientValue::LowerBound(d) => (
                PresentationStatus::Inconclusive,
                format!("quotient dimension only bounded below by {d} at degree bound {bound}"),
            ),
            QuotientValue::Uncertified(d) => (
                PresentationStatus::Inconclusive,
                format!("{d} irreducible words, but the system is neither confluent nor homogeneous"),
            ),
        }
    };
    Ok(PresentationVerdict {
        status,
        n,
        relations: checks,
        rules: sys.rules().iter().map(|r| r.render(names)).collect(),
        completion: sys.status().clone(),
        degree_bound: bound,
        word_weights: order.weights().to_vec(),
        quotient: q.value,
        irreducible: q.irreducible.iter().map(|w| w.render(names)).collect(),
        spanning_rank,
        reason,
    })
}
