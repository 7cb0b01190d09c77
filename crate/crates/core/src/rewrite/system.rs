use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{RewriteError, WordOrder};
use crate::freealg::{FreePoly, Word};
use crate::scalars::{FieldContext, Scalar};

/// `lead → tail`, every tail word smaller than `lead` in the system's order.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub lead: Word,
    pub tail: FreePoly,
}

impl RewriteRule {
    /// The relation `lead − tail`.
    pub fn relation(&self) -> FreePoly {
        FreePoly::word(self.lead.clone()).sub(&self.tail)
    }

    pub fn render(&self, names: &[String]) -> String {
        format!("{} -> {}", self.lead.render(names), self.tail.render(names))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CompletionStatus {
    /// Every overlap among the final rules was resolved.
    Confluent,
    /// Overlaps above the degree bound were skipped; `unresolved` lists the
    /// smallest such overlap words.
    CompleteToDegree { bound: u64, unresolved: Vec<Word> },
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    rules: Vec<RewriteRule>,
    order: WordOrder,
    degree_bound: u64,
    status: CompletionStatus,
    ctx: FieldContext,
    homogeneous: bool,
}

/// `2 · (heaviest relation weight) + 4`.
pub fn default_degree_bound(relations: &[FreePoly], order: &WordOrder) -> u64 {
    let heaviest = relations.iter().flat_map(|p| p.terms().map(|(w, _)| order.weight(w))).max().unwrap_or(0);
    2 * heaviest + 4
}

fn lead_term(p: &FreePoly, order: &WordOrder) -> Option<(Word, Scalar)> {
    p.terms().max_by(|a, b| order.cmp(a.0, b.0)).map(|(w, c)| (w.clone(), c.clone()))
}

fn exact_if_possible(relations: &[FreePoly]) -> FieldContext {
    if relations.iter().all(FreePoly::is_exact) {
        FieldContext::exact()
    } else {
        FieldContext::approx(crate::scalars::DEFAULT_ARITH_EPS)
    }
}

impl RewriteSystem {
    /// A system from rules as given; no completion is attempted.
    pub fn from_rules(rules: Vec<RewriteRule>, order: WordOrder, degree_bound: u64) -> Self {
        let rels: Vec<FreePoly> = rules.iter().map(RewriteRule::relation).collect();
        let ctx = exact_if_possible(&rels);
        let homogeneous = rels.iter().all(|r| is_homogeneous(r, &order));
        RewriteSystem {
            rules,
            order,
            degree_bound,
            status: CompletionStatus::CompleteToDegree { bound: degree_bound, unresolved: Vec::new() },
            ctx,
            homogeneous,
        }
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn order(&self) -> &WordOrder {
        &self.order
    }

    pub fn degree_bound(&self) -> u64 {
        self.degree_bound
    }

    pub fn status(&self) -> &CompletionStatus {
        &self.status
    }

    pub fn is_confluent(&self) -> bool {
        self.status == CompletionStatus::Confluent
    }

    /// All input relations were homogeneous for the order's weights.
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    /// First rule (in rule order) at the leftmost position where one applies.
    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for (r, rule) in self.rules.iter().enumerate() {
                let l = rule.lead.len();
                if pos + l <= w.len() && w.as_slice()[pos..pos + l] == *rule.lead.as_slice() {
                    return Some((r, pos));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.rules.iter().all(|r| !w.contains(&r.lead))
    }

    fn apply(&self, w: &Word, rule: usize, pos: usize) -> FreePoly {
        let rule = &self.rules[rule];
        let left = w.slice(0, pos);
        let right = w.slice(pos + rule.lead.len(), w.len());
        rule.tail.sandwich(&left, &right)
    }

    /// Every result of rewriting one occurrence of one rule's lead in `w`.
    pub fn one_step_reductions(&self, w: &Word) -> Vec<FreePoly> {
        let mut out = Vec::new();
        for (r, rule) in self.rules.iter().enumerate() {
            let l = rule.lead.len();
            if l > w.len() {
                continue;
            }
            for pos in 0..=w.len() - l {
                if w.as_slice()[pos..pos + l] == *rule.lead.as_slice() {
                    out.push(self.apply(w, r, pos));
                }
            }
        }
        out
    }

    fn check_bound(&self, p: &FreePoly) -> Result<(), RewriteError> {
        for (w, _) in p.terms() {
            let weight = self.order.weight(w);
            if weight > self.degree_bound {
                return Err(RewriteError::DegreeBoundExceeded { word: w.clone(), weight, bound: self.degree_bound });
            }
        }
        Ok(())
    }

    /// Rewrites the largest reducible term until none is left.
    pub fn normal_form(&self, p: &FreePoly) -> Result<FreePoly, RewriteError> {
        self.check_bound(p)?;
        Ok(self.reduce_unchecked(p))
    }

    fn reduce_unchecked(&self, p: &FreePoly) -> FreePoly {
        let mut work = p.lift(&self.ctx);
        let mut done = FreePoly::zero();
        loop {
            work.trim(&self.ctx);
            let Some((w, c)) = lead_term(&work, &self.order) else { break };
            work.remove(&w);
            match self.find_redex(&w) {
                Some((r, pos)) => work = work.add(&self.apply(&w, r, pos).scale(&c)),
                None => done.add_term(w, c),
            }
        }
        done.trim(&self.ctx);
        done
    }

    fn orient(&self, p: &FreePoly) -> Option<RewriteRule> {
        let (lead, c) = lead_term(p, &self.order)?;
        let inv = c.inv(&self.ctx).ok()?;
        let mut tail = p.scale(&inv).neg();
        tail.remove(&lead);
        Some(RewriteRule { lead, tail })
    }

    /// Overlap words `u·s·v` with `a = u·s`, `b = s·v`, `s` nonempty and proper.
    fn overlaps(&self, a: usize, b: usize) -> Vec<(usize, Word)> {
        let (la, lb) = (&self.rules[a].lead, &self.rules[b].lead);
        let mut out = Vec::new();
        for s in 1..la.len().min(lb.len()) {
            if la.as_slice()[la.len() - s..] == lb.as_slice()[..s] {
                out.push((s, la.concat(&lb.slice(s, lb.len()))));
            }
        }
        out
    }
}

fn is_homogeneous(p: &FreePoly, order: &WordOrder) -> bool {
    let mut ws = p.terms().map(|(w, _)| order.weight(w));
    match ws.next() {
        Some(first) => ws.all(|x| x == first),
        None => true,
    }
}

/// Orients the relations, inter-reduces, and resolves every overlap of weight
/// at most `degree_bound`, adding the nonzero normal forms as new rules.
pub fn complete(relations: &[FreePoly], order: WordOrder, degree_bound: u64) -> Result<RewriteSystem, RewriteError> {
    if relations.iter().any(FreePoly::is_zero) {
        return Err(RewriteError::ZeroRelation);
    }
    let ctx = exact_if_possible(relations);
    let homogeneous = relations.iter().all(|r| is_homogeneous(r, &order));
    let mut sys = RewriteSystem {
        rules: Vec::new(),
        order,
        degree_bound,
        status: CompletionStatus::Confluent,
        ctx,
        homogeneous,
    };
    for r in relations {
        sys.check_bound(r)?;
    }

    let mut pending: VecDeque<FreePoly> = relations.iter().cloned().collect();
    // Overlaps are remembered per rule identity, so a rule replaced by one with
    // the same lead gets its overlaps checked again.
    let mut ids: Vec<u64> = Vec::new();
    let mut next_id = 0u64;
    let mut resolved: BTreeSet<(u64, u64, usize)> = BTreeSet::new();
    loop {
        while let Some(p) = pending.pop_front() {
            let nf = sys.reduce_unchecked(&p);
            let Some(rule) = sys.orient(&nf) else { continue };
            // Rules whose lead contains the new lead are retired; their relations re-enter.
            let mut kept = Vec::new();
            for (old, id) in sys.rules.drain(..).zip(ids.drain(..)) {
                if old.lead.contains(&rule.lead) {
                    pending.push_back(old.relation());
                } else {
                    kept.push((old, id));
                }
            }
            kept.push((rule, next_id));
            next_id += 1;
            kept.sort_by(|a, b| sys.order.cmp(&a.0.lead, &b.0.lead));
            (sys.rules, ids) = kept.into_iter().unzip();
        }
        // Inter-reduce tails.
        for i in 0..sys.rules.len() {
            let tail = sys.rules[i].tail.clone();
            sys.rules[i].tail = sys.reduce_unchecked(&tail);
        }

        let mut candidates: Vec<(u64, Word, usize, usize, usize)> = Vec::new();
        let mut unresolved: Vec<Word> = Vec::new();
        for a in 0..sys.rules.len() {
            for b in 0..sys.rules.len() {
                for (s, w) in sys.overlaps(a, b) {
                    let key = (ids[a], ids[b], s);
                    if resolved.contains(&key) {
                        continue;
                    }
                    let weight = sys.order.weight(&w);
                    if weight > degree_bound {
                        unresolved.push(w);
                    } else {
                        candidates.push((weight, w, a, b, s));
                    }
                }
            }
        }
        candidates.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| sys.order.cmp(&x.1, &y.1)));
        for (_, w, a, b, s) in &candidates {
            let (ra, rb) = (&sys.rules[*a], &sys.rules[*b]);
            let u = w.slice(0, ra.lead.len() - s);
            let v = rb.lead.slice(*s, rb.lead.len());
            let left = ra.tail.sandwich(&Word::empty(), &v);
            let right = rb.tail.sandwich(&u, &Word::empty());
            let diff = sys.reduce_unchecked(&left.sub(&right));
            resolved.insert((ids[*a], ids[*b], *s));
            if !diff.is_zero() {
                pending.push_back(diff);
            }
        }
        if pending.is_empty() {
            unresolved.sort_by(|a, b| sys.order.cmp(a, b));
            unresolved.dedup();
            unresolved.truncate(8);
            if !unresolved.is_empty() {
                sys.status = CompletionStatus::CompleteToDegree { bound: degree_bound, unresolved };
            }
            return Ok(sys);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::parse_relations;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn sys(rels: &[&str], order: WordOrder) -> RewriteSystem {
        let rels = parse_relations(rels, &names()).unwrap();
        let bound = default_degree_bound(&rels, &order);
        complete(&rels, order, bound).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::from_letters(s.chars().map(|c| if c == 'x' { 0 } else { 1 }))
    }

    #[test]
    fn matrix_presentation_is_confluent() {
        let s = sys(&["x^2", "y^2", "x*y + y*x"], WordOrder::shortlex(2));
        assert!(s.is_confluent());
        assert_eq!(s.rules().len(), 3);
        let nf = s.normal_form(&FreePoly::word(w("xyx"))).unwrap();
        assert!(nf.is_zero());
        assert_eq!(s.normal_form(&FreePoly::word(w("yx"))).unwrap(), FreePoly::word(w("xy")).neg());
        assert_eq!(s.normal_form(&FreePoly::one()).unwrap(), FreePoly::one());
    }

    #[test]
    fn contraction_presentation_gains_two_rules() {
        let s = sys(&["x*y + y*x", "x^3 + y^2", "y^3"], WordOrder::weighted(vec![2, 3]));
        let leads: Vec<String> = s.rules().iter().map(|r| r.lead.render(&names())).collect();
        assert!(leads.contains(&"yx".to_string()));
        assert!(leads.contains(&"yy".to_string()));
        assert!(leads.contains(&"xxxy".to_string()));
        assert!(leads.contains(&"xxxxxx".to_string()));
        let yy = s.rules().iter().find(|r| r.lead == w("yy")).unwrap();
        assert_eq!(yy.tail, FreePoly::word(w("xxx")).neg());
    }

    #[test]
    fn single_monomial_needs_nothing() {
        let s = sys(&["x^2"], WordOrder::shortlex(2));
        assert!(s.is_confluent());
        assert_eq!(s.rules().len(), 1);
    }

    #[test]
    fn bound_is_enforced() {
        let rels = parse_relations(&["x^5"], &names()).unwrap();
        assert!(matches!(
            complete(&rels, WordOrder::shortlex(2), 3),
            Err(RewriteError::DegreeBoundExceeded { .. })
        ));
    }
}
