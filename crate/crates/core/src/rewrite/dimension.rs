use serde::Serialize;

use super::RewriteSystem;
use crate::freealg::Word;

/// Stop enumerating irreducible words past this many.
const ENUMERATION_LIMIT: usize = 500_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum QuotientValue {
    Exact(usize),
    /// No empty window was found below the bound: possibly infinite.
    LowerBound(usize),
    /// Counted, but the system is neither confluent nor homogeneous, so the
    /// count is not a certificate.
    Uncertified(usize),
}

impl QuotientValue {
    pub fn count(&self) -> usize {
        match *self {
            QuotientValue::Exact(d) | QuotientValue::LowerBound(d) | QuotientValue::Uncertified(d) => d,
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match *self {
            QuotientValue::Exact(d) => Some(d),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientDimension {
    pub value: QuotientValue,
    pub irreducible: Vec<Word>,
    /// Number of irreducible words of each weight up to the degree bound.
    pub counts_by_weight: Vec<usize>,
    /// `(L0, L0 + w)`: no irreducible word has weight in `(L0, L0 + w]`.
    pub window: Option<(u64, u64)>,
}

impl RewriteSystem {
    /// Irreducible words of weight at most the degree bound, in the system's order.
    pub fn irreducible_words(&self) -> (Vec<Word>, bool) {
        let order = self.order();
        let bound = self.degree_bound();
        let mut out = vec![Word::empty()];
        let mut level = vec![Word::empty()];
        let mut truncated = false;
        while !level.is_empty() {
            let mut next = Vec::new();
            for w in &level {
                for g in 0..order.alphabet_size() {
                    let mut wg = w.clone();
                    wg.push(g);
                    if order.weight(&wg) > bound {
                        continue;
                    }
                    if self.rules().iter().any(|r| wg.ends_with(&r.lead)) {
                        continue;
                    }
                    next.push(wg);
                }
            }
            out.extend(next.iter().cloned());
            if out.len() > ENUMERATION_LIMIT {
                truncated = true;
                break;
            }
            level = next;
        }
        out.sort_by(|a, b| order.cmp(a, b));
        (out, truncated)
    }

    /// Counts irreducible words; exact when an empty window of width equal to
    /// the heaviest generator weight fits under the bound.
    pub fn quotient_dimension(&self) -> QuotientDimension {
        let order = self.order();
        let bound = self.degree_bound();
        let (words, truncated) = self.irreducible_words();
        let mut counts = vec![0usize; bound as usize + 1];
        for w in &words {
            counts[order.weight(w) as usize] += 1;
        }
        let width = order.max_weight();
        let window = if truncated {
            None
        } else {
            (0..=bound.saturating_sub(width))
                .find(|&l0| (l0 + 1..=l0 + width).all(|d| counts[d as usize] == 0))
                .map(|l0| (l0, l0 + width))
        };
        let certified = self.is_confluent() || self.is_homogeneous();
        let (value, irreducible) = match window {
            Some((l0, _)) => {
                let kept: Vec<Word> = words.into_iter().filter(|w| order.weight(w) <= l0).collect();
                let d = kept.len();
                (if certified { QuotientValue::Exact(d) } else { QuotientValue::Uncertified(d) }, kept)
            }
            None => {
                let d = words.len();
                (if certified { QuotientValue::LowerBound(d) } else { QuotientValue::Uncertified(d) }, words)
            }
        };
        QuotientDimension { value, irreducible, counts_by_weight: counts, window }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::{complete, parse_relations, WordOrder};

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn paper_presentations() {
        let rels = parse_relations(&["x^2", "y^2", "x*y + y*x"], &names()).unwrap();
        let q = complete(&rels, WordOrder::shortlex(2), 8).unwrap().quotient_dimension();
        assert_eq!(q.value, QuotientValue::Exact(4));
        let ws: Vec<String> = q.irreducible.iter().map(|w| w.render(&names())).collect();
        assert_eq!(ws, ["1", "x", "y", "xy"]);

        let rels = parse_relations(&["x*y + y*x", "x^3 + y^2", "y^3"], &names()).unwrap();
        let q = complete(&rels, WordOrder::weighted(vec![2, 3]), 22).unwrap().quotient_dimension();
        assert_eq!(q.value, QuotientValue::Exact(9));
        let mut ws: Vec<String> = q.irreducible.iter().map(|w| w.render(&names())).collect();
        ws.sort();
        let mut expected = vec!["1", "x", "xx", "xxx", "xxxx", "xxxxx", "y", "xy", "xxy"];
        expected.sort();
        assert_eq!(ws, expected);
    }

    #[test]
    fn free_algebra_is_a_lower_bound() {
        let q = complete(&[], WordOrder::shortlex(2), 2).unwrap().quotient_dimension();
        assert_eq!(q.value, QuotientValue::LowerBound(7));
    }
}
