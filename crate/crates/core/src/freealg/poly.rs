use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::word::{render_word, Word};
use crate::scalars::{join_term, FieldContext, Scalar};

fn insert_term<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_exact_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_exact_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

fn trim_map<K: Ord>(map: &mut BTreeMap<K, Scalar>, ctx: &FieldContext) -> f64 {
    if ctx.is_exact() {
        return 0.0;
    }
    let mut dropped = 0.0f64;
    map.retain(|_, c| {
        if ctx.is_zero(c) {
            dropped = dropped.max(c.modulus());
            false
        } else {
            true
        }
    });
    dropped
}

/// An element of the free algebra: a finite scalar combination of words.
/// Terms iterate in shortlex order.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct FreePoly {
    terms: BTreeMap<Word, Scalar>,
}

impl FreePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Scalar::one())
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut p = Self::zero();
        insert_term(&mut p.terms, w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            insert_term(&mut p.terms, w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        insert_term(&mut self.terms, w, c);
    }

    pub fn remove(&mut self, w: &Word) -> Option<Scalar> {
        self.terms.remove(w)
    }

    pub fn add(&self, other: &FreePoly) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            insert_term(&mut out.terms, w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FreePoly) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, a)| (w.clone(), a * c)))
    }

    pub fn mul(&self, other: &FreePoly) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                insert_term(&mut out.terms, u.concat(v), a * b);
            }
        }
        out
    }

    /// `left · self · right` for words.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (left.concat(w).concat(right), c.clone())))
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.terms.keys().filter_map(Word::max_letter).max()
    }

    pub fn trim(&mut self, ctx: &FieldContext) -> f64 {
        trim_map(&mut self.terms, ctx)
    }

    pub fn is_exact(&self) -> bool {
        self.terms.values().all(Scalar::is_exact)
    }

    pub fn lift(&self, ctx: &FieldContext) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), ctx.lift(c))))
    }

    /// Renders highest term first, e.g. `y - i*x`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (w, c) in self.terms.iter().rev() {
            let mono = if w.is_empty() { String::new() } else { render_word(w, names) };
            out.push_str(&join_term(&out, c, &mono));
        }
        out
    }
}

/// An element of the free algebra with a central indeterminate `t`, keyed by
/// `(word, t-degree)` in shortlex-then-degree order.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct FreeTPoly {
    terms: BTreeMap<(Word, u32), Scalar>,
}

impl FreeTPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, 0, Scalar::one())
    }

    /// `c · t^d · w`.
    pub fn term(w: Word, d: u32, c: Scalar) -> Self {
        let mut p = Self::zero();
        insert_term(&mut p.terms, (w, d), c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, u32, Scalar)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, d, c) in terms {
            insert_term(&mut p.terms, (w, d), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, u32, &Scalar)> {
        self.terms.iter().map(|((w, d), c)| (w, *d, c))
    }

    /// The words that occur, each once, in shortlex order.
    pub fn support(&self) -> Vec<&Word> {
        let mut ws: Vec<&Word> = self.terms.keys().map(|(w, _)| w).collect();
        ws.dedup();
        ws
    }

    /// True for a single term `1 · w` with no `t`-factor.
    pub fn as_plain_word(&self) -> Option<&Word> {
        match self.terms.iter().next() {
            Some(((w, 0), c)) if self.terms.len() == 1 && c.is_one() => Some(w),
            _ => None,
        }
    }

    pub fn add(&self, other: &FreeTPoly) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            insert_term(&mut out.terms, k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FreeTPoly) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|((w, d), a)| (w.clone(), *d, a * c)))
    }

    /// Multiplication by a polynomial in `t` given by its coefficients.
    pub fn scale_t_poly(&self, coeffs: &[Scalar]) -> Self {
        let mut out = Self::zero();
        for (k, a) in coeffs.iter().enumerate() {
            if a.is_exact_zero() {
                continue;
            }
            for ((w, d), c) in &self.terms {
                insert_term(&mut out.terms, (w.clone(), d + k as u32), c * a);
            }
        }
        out
    }

    /// `t` is central: `(w, d)·(w', d') = (ww', d + d')`.
    pub fn mul(&self, other: &FreeTPoly) -> Self {
        let mut out = Self::zero();
        for ((u, d), a) in &self.terms {
            for ((v, e), b) in &other.terms {
                insert_term(&mut out.terms, (u.concat(v), d + e), a * b);
            }
        }
        out
    }

    /// Evaluates every `t`-power at `z` and merges equal words.
    pub fn substitute_t(&self, z: &Scalar) -> FreePoly {
        FreePoly::from_terms(self.terms.iter().map(|((w, d), c)| (w.clone(), c * &z.pow(*d))))
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.terms.keys().filter_map(|(w, _)| w.max_letter()).max()
    }

    pub fn trim(&mut self, ctx: &FieldContext) -> f64 {
        trim_map(&mut self.terms, ctx)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for ((w, d), c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            match d {
                0 => {}
                1 => factors.push("t".to_string()),
                _ => factors.push(format!("t^{d}")),
            }
            if !w.is_empty() {
                factors.push(render_word(w, names));
            }
            out.push_str(&join_term(&out, c, &factors.join("*")));
        }
        out
    }
}

impl From<FreePoly> for FreeTPoly {
    fn from(p: FreePoly) -> Self {
        FreeTPoly::from_terms(p.terms.into_iter().map(|(w, c)| (w, 0, c)))
    }
}

impl From<Word> for FreeTPoly {
    fn from(w: Word) -> Self {
        FreeTPoly::word(w)
    }
}

/// Serialized as `[[word, coeff], ...]`.
impl Serialize for FreePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for t in &self.terms {
            seq.serialize_element(&t)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn w(s: &str) -> Word {
        Word::from_letters(s.chars().map(|c| if c == 'x' { 0 } else { 1 }))
    }

    #[test]
    fn concatenation_products() {
        let p = FreeTPoly::word(w("xy")).mul(&FreeTPoly::word(w("yx")));
        assert_eq!(p, FreeTPoly::word(w("xyyx")));
        let xt = FreeTPoly::term(w("x"), 1, Scalar::one());
        let yt = FreeTPoly::term(w("y"), 1, Scalar::one());
        assert_eq!(xt.mul(&yt), FreeTPoly::term(w("xy"), 2, Scalar::one()));
    }

    #[test]
    fn substitution_at_one() {
        let p = FreeTPoly::from_terms([(w("x"), 2, Scalar::one()), (w("y"), 3, Scalar::one())]);
        assert_eq!(p.substitute_t(&Scalar::one()), FreePoly::word(w("x")).add(&FreePoly::word(w("y"))));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = FreePoly::word(w("xy")).sub(&FreePoly::word(w("xy")));
        assert!(p.is_zero());
    }

    #[test]
    fn rendering() {
        let p = FreePoly::word(w("y")).sub(&FreePoly::term(w("x"), Scalar::i()));
        assert_eq!(p.render(&names()), "y - i*x");
        let q = FreeTPoly::from_terms([(w(""), 1, Scalar::ratio(1, 2)), (w("x"), 0, Scalar::ratio(-1, 2))]);
        assert_eq!(q.render(&names()), "-1/2*x + 1/2*t");
        assert_eq!(FreePoly::one().render(&names()), "1");
    }

    fn tpoly() -> impl Strategy<Value = FreeTPoly> {
        prop::collection::vec((prop::collection::vec(0usize..2, 0..3), 0u32..3, -3i64..=3), 0..4).prop_map(|ts| {
            FreeTPoly::from_terms(ts.into_iter().map(|(l, d, c)| (Word::from_letters(l), d, Scalar::from_int(c))))
        })
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(a in tpoly(), b in tpoly(), c in tpoly()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn multiplication_distributes(a in tpoly(), b in tpoly(), c in tpoly()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn substitution_is_a_homomorphism(a in tpoly(), b in tpoly(), z in -3i64..=3) {
            let z = Scalar::from_int(z);
            prop_assert_eq!(a.mul(&b).substitute_t(&z), a.substitute_t(&z).mul(&b.substitute_t(&z)));
        }
    }
}
