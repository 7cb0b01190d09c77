use proptest::prelude::*;

use tdeform::freealg::{enumerate_words, FreePoly, FreeTPoly, Word};
use tdeform::scalars::Scalar;

fn w(letters: &[usize]) -> Word {
    Word::from_letters(letters.iter().copied())
}

fn tpoly() -> impl Strategy<Value = FreeTPoly> {
    prop::collection::vec((prop::collection::vec(0usize..2, 0..3), 0u32..3, -3i64..=3), 0..4).prop_map(|terms| {
        FreeTPoly::from_terms(terms.into_iter().map(|(l, d, c)| (Word::from_letters(l), d, Scalar::from_int(c))))
    })
}

fn point() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=3, -2i64..=2).prop_map(|(a, b, c)| &Scalar::ratio(a, b) + &(&Scalar::from_int(c) * &Scalar::i()))
}

#[test]
fn concatenation_and_t_centrality() {
    let xy = FreePoly::word(w(&[0, 1]));
    let yx = FreePoly::word(w(&[1, 0]));
    assert_eq!(xy.mul(&yx), FreePoly::word(w(&[0, 1, 1, 0])));
    let xt = FreeTPoly::term(w(&[0]), 1, Scalar::one());
    let yt = FreeTPoly::term(w(&[1]), 1, Scalar::one());
    assert_eq!(xt.mul(&yt), FreeTPoly::term(w(&[0, 1]), 2, Scalar::one()));
}

#[test]
fn substitute_at_one() {
    let p = FreeTPoly::term(w(&[0]), 2, Scalar::one()).add(&FreeTPoly::term(w(&[1]), 3, Scalar::one()));
    let want = FreePoly::word(w(&[0])).add(&FreePoly::word(w(&[1])));
    assert_eq!(p.substitute_t(&Scalar::one()), want);
}

#[test]
fn words_enumerate_in_shortlex() {
    let words = enumerate_words(2, 3);
    assert_eq!(words.len(), 1 + 2 + 4 + 8);
    assert!(words.windows(2).all(|p| p[0] < p[1]));
    assert_eq!(words[3], w(&[0, 0]));
}

#[test]
fn render_uses_names() {
    let names = vec!["x".to_string(), "y".to_string()];
    let p = FreePoly::word(w(&[1])).sub(&FreePoly::term(w(&[0]), Scalar::i()));
    assert_eq!(p.render(&names), "y - i*x");
}

proptest! {
    #[test]
    fn shortlex_is_compatible_with_concatenation(
        a in prop::collection::vec(0usize..3, 0..4),
        b in prop::collection::vec(0usize..3, 0..4),
        c in prop::collection::vec(0usize..3, 0..4),
    ) {
        let (a, b, c) = (Word::from_letters(a), Word::from_letters(b), Word::from_letters(c));
        if a < b {
            prop_assert!(c.concat(&a) < c.concat(&b));
            prop_assert!(a.concat(&c) < b.concat(&c));
        }
    }

    #[test]
    fn t_poly_multiplication_is_associative(p in tpoly(), q in tpoly(), r in tpoly()) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
    }

    #[test]
    fn substitution_is_multiplicative(p in tpoly(), q in tpoly(), z in point()) {
        prop_assert_eq!(p.mul(&q).substitute_t(&z), p.substitute_t(&z).mul(&q.substitute_t(&z)));
    }
}
