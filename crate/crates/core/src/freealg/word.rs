use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// A word in the generators, stored as generator indices. The empty word is
/// the identity.
///
/// Ordering is shortlex: shorter words first, equal lengths lexicographically
/// by generator index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: usize) -> Self {
        Word(vec![g as u16])
    }

    pub fn from_letters<I: IntoIterator<Item = usize>>(letters: I) -> Self {
        Word(letters.into_iter().map(|g| g as u16).collect())
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&g| g as usize)
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, g: usize) {
        self.0.push(g as u16);
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().max().map(|&g| g as usize)
    }

    /// `Some(pos)` of the leftmost occurrence of `needle` as a contiguous subword.
    pub fn find(&self, needle: &Word) -> Option<usize> {
        if needle.0.is_empty() {
            return Some(0);
        }
        self.0.windows(needle.0.len()).position(|w| w == needle.0.as_slice())
    }

    pub fn contains(&self, needle: &Word) -> bool {
        self.find(needle).is_some()
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    pub fn render(&self, names: &[String]) -> String {
        render_word(self, names)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Generator names joined by juxtaposition (`xyyx`); `*`-separated when some
/// name is longer than one character. The empty word renders as `1`.
pub fn render_word(w: &Word, names: &[String]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let name = |g: usize| names.get(g).cloned().unwrap_or_else(|| format!("x{}", g + 1));
    let single = w.letters().all(|g| name(g).chars().count() == 1);
    let parts: Vec<String> = w.letters().map(name).collect();
    if single {
        parts.concat()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_word(self, &["x".into(), "y".into()]))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// All words of length at most `max_len` over `alphabet_size` letters, in
/// strictly increasing shortlex order starting with the empty word.
pub fn enumerate_words(alphabet_size: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet_size);
        for w in &layer {
            for g in 0..alphabet_size {
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_words(2, 0), vec![Word::empty()]);
        let one: Vec<String> = enumerate_words(2, 1).iter().map(|w| w.render(&names())).collect();
        assert_eq!(one, ["1", "x", "y"]);
        let two: Vec<String> = enumerate_words(2, 2).iter().map(|w| w.render(&names())).collect();
        assert_eq!(two, ["1", "x", "y", "xx", "xy", "yx", "yy"]);
    }

    #[test]
    fn enumeration_count_and_order() {
        for (k, l) in [(1usize, 4usize), (2, 5), (3, 3)] {
            let ws = enumerate_words(k, l);
            let expected: usize = (0..=l).map(|i| k.pow(i as u32)).sum();
            assert_eq!(ws.len(), expected);
            assert!(ws.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn long_names_are_star_separated() {
        let names: Vec<String> = vec!["x1".into(), "x2".into()];
        assert_eq!(Word::from_letters([0, 1, 1]).render(&names), "x1*x2*x2");
    }

    fn word() -> impl Strategy<Value = Word> {
        prop::collection::vec(0usize..3, 0..6).prop_map(Word::from_letters)
    }

    proptest! {
        #[test]
        fn shortlex_is_compatible_with_concatenation(u in word(), v in word(), w in word()) {
            if u < v {
                prop_assert!(w.concat(&u) < w.concat(&v));
                prop_assert!(u.concat(&w) < v.concat(&w));
            }
        }

        #[test]
        fn concatenation_is_associative_with_identity(u in word(), v in word(), w in word()) {
            prop_assert_eq!(u.concat(&v).concat(&w), u.concat(&v.concat(&w)));
            prop_assert_eq!(u.concat(&Word::empty()), u.clone());
            prop_assert_eq!(Word::empty().concat(&u), u);
        }
    }
}
