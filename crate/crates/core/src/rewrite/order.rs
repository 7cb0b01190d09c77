use std::cmp::Ordering;

use crate::freealg::Word;

/// Weighted-degree order on words: total generator weight first, then
/// lexicographic by generator index. Unit weights give shortlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordOrder {
    weights: Vec<u32>,
}

impl WordOrder {
    pub fn shortlex(alphabet_size: usize) -> Self {
        WordOrder { weights: vec![1; alphabet_size] }
    }

    /// Weights below 1 are raised to 1 so the order stays well-founded.
    pub fn weighted(weights: Vec<u32>) -> Self {
        WordOrder { weights: weights.into_iter().map(|w| w.max(1)).collect() }
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn alphabet_size(&self) -> usize {
        self.weights.len()
    }

    pub fn is_shortlex(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn max_weight(&self) -> u64 {
        self.weights.iter().copied().max().unwrap_or(1) as u64
    }

    pub fn weight(&self, w: &Word) -> u64 {
        w.letters().map(|g| self.weights[g] as u64).sum()
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| a.as_slice().cmp(b.as_slice()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &[usize]) -> Word {
        Word::from_letters(s.iter().copied())
    }

    #[test]
    fn unit_weights_agree_with_shortlex() {
        let o = WordOrder::shortlex(2);
        assert_eq!(o.cmp(&w(&[1]), &w(&[0, 0])), Ordering::Less);
        assert_eq!(o.cmp(&w(&[0, 1]), &w(&[1, 0])), Ordering::Less);
    }

    #[test]
    fn weighted_ties_break_lexicographically() {
        let o = WordOrder::weighted(vec![2, 3]);
        assert_eq!(o.weight(&w(&[0, 0, 0])), 6);
        assert_eq!(o.cmp(&w(&[0, 0, 0]), &w(&[1, 1])), Ordering::Less);
        assert_eq!(o.cmp(&w(&[1]), &w(&[0, 0])), Ordering::Less);
    }

    fn word() -> impl Strategy<Value = Word> {
        prop::collection::vec(0usize..2, 0..6).prop_map(Word::from_letters)
    }

    proptest! {
        #[test]
        fn compatible_with_concatenation(a in word(), b in word(), c in word(), wx in 1u32..4, wy in 1u32..4) {
            let o = WordOrder::weighted(vec![wx, wy]);
            let base = o.cmp(&a, &b);
            prop_assert_eq!(o.cmp(&c.concat(&a), &c.concat(&b)), base);
            prop_assert_eq!(o.cmp(&a.concat(&c), &b.concat(&c)), base);
        }

        #[test]
        fn shortlex_matches_word_ord(a in word(), b in word()) {
            prop_assert_eq!(WordOrder::shortlex(2).cmp(&a, &b), a.cmp(&b));
        }
    }
}
