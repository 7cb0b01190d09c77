mod common;

use proptest::prelude::*;

use tdeform::cli::example;
use tdeform::freealg::{FreePoly, Word};
use tdeform::rewrite::{
    complete, default_degree_bound, parse_relation, parse_relations, verify_presentation, PresentationStatus,
    QuotientValue, RewriteError, RewriteSystem, WordOrder,
};
use tdeform::scalars::Scalar;

use common::{build_config, oracle_quotient_dim};

fn xy() -> Vec<String> {
    vec!["x".into(), "y".into()]
}

fn w(letters: &[usize]) -> Word {
    Word::from_letters(letters.iter().copied())
}

fn system(texts: &[&str], weights: Vec<u32>) -> RewriteSystem {
    let rels = parse_relations(texts, &xy()).unwrap();
    let order = WordOrder::weighted(weights);
    let bound = default_degree_bound(&rels, &order);
    complete(&rels, order, bound).unwrap()
}

fn wemyss_system() -> RewriteSystem {
    system(&["x*y + y*x", "x^3 + y^2", "y^3"], vec![2, 3])
}

#[test]
fn grammar() {
    let names = xy();
    let p = parse_relation("x^2 = 1/2*x*y - (y - i*x)", &names).unwrap();
    let want = FreePoly::from_terms([
        (w(&[0, 0]), Scalar::one()),
        (w(&[0, 1]), Scalar::ratio(-1, 2)),
        (w(&[1]), Scalar::one()),
        (w(&[0]), -Scalar::i()),
    ]);
    assert_eq!(p, want);
    assert_eq!(parse_relation("xy^2", &names).unwrap(), FreePoly::word(w(&[0, 1, 1])));
    assert_eq!(parse_relation("2(x + y)x", &names).unwrap(), parse_relation("2*x^2 + 2*y*x", &names).unwrap());
    for bad in ["x +", "x / y", "z", "x^", "(x"] {
        assert!(matches!(parse_relation(bad, &names), Err(RewriteError::Parse { .. })), "{bad}");
    }
}

#[test]
fn wemyss_completion() {
    let sys = wemyss_system();
    assert!(sys.is_confluent());
    let leads: Vec<Word> = sys.rules().iter().map(|r| r.lead.clone()).collect();
    assert!(leads.contains(&w(&[1, 0])));
    assert!(leads.contains(&w(&[1, 1])));
    assert!(leads.contains(&w(&[0, 0, 0, 1])));
    assert!(leads.contains(&w(&[0, 0, 0, 0, 0, 0])));
    let q = sys.quotient_dimension();
    assert_eq!(q.value, QuotientValue::Exact(9));
    // y^2 rewrites to -x^3.
    let nf = sys.normal_form(&FreePoly::word(w(&[1, 1]))).unwrap();
    assert_eq!(nf, FreePoly::term(w(&[0, 0, 0]), Scalar::from_int(-1)));
}

#[test]
fn completion_is_inter_reduced_and_order_decreasing() {
    for sys in [wemyss_system(), system(&["x^2", "y^2", "x*y + y*x"], vec![1, 1]), system(&["x^2 - x", "y^2 - y", "x*y", "y*x"], vec![1, 1])] {
        let order = sys.order();
        for (a, r) in sys.rules().iter().enumerate() {
            for (w, _) in r.tail.terms() {
                assert_eq!(order.cmp(w, &r.lead), std::cmp::Ordering::Less);
            }
            for (b, s) in sys.rules().iter().enumerate() {
                if a != b {
                    assert!(!r.lead.contains(&s.lead), "{:?} contains {:?}", r.lead, s.lead);
                }
            }
        }
    }
}

#[test]
fn missing_relation_is_not_certified() {
    let def = build_config(&example("m2", None).unwrap().config);
    let rels = parse_relations(&["x^2", "y^2"], &xy()).unwrap();
    let v = verify_presentation(&def, &rels, &WordOrder::weighted(vec![1, 1]), None).unwrap();
    assert_ne!(v.status, PresentationStatus::Pass);
    let wrong = parse_relations(&["x^2", "y^2", "x*y - y*x"], &xy()).unwrap();
    let v = verify_presentation(&def, &wrong, &WordOrder::weighted(vec![1, 1]), None).unwrap();
    assert_eq!(v.status, PresentationStatus::Fail);
}

#[test]
fn degree_bound_is_enforced_on_inputs() {
    let sys = system(&["x^2", "y^2", "x*y + y*x"], vec![1, 1]);
    let long = FreePoly::word(Word::from_letters(vec![0; sys.degree_bound() as usize + 1]));
    assert!(matches!(sys.normal_form(&long), Err(RewriteError::DegreeBoundExceeded { .. })));
}

#[test]
fn free_algebra_gives_a_lower_bound() {
    let rels = parse_relations(&["x^2", "y^2"], &xy()).unwrap();
    let sys = complete(&rels, WordOrder::shortlex(2), 6).unwrap();
    assert!(matches!(sys.quotient_dimension().value, QuotientValue::LowerBound(_)));
    assert_eq!(oracle_quotient_dim(&rels, &[1, 1], 8), None);
}

fn word_strategy(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0usize..2, 0..max).prop_map(Word::from_letters)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_form_is_linear_and_idempotent(a in word_strategy(6), b in word_strategy(6), c in -3i64..=3) {
        let sys = wemyss_system();
        let p = FreePoly::word(a).add(&FreePoly::term(b, Scalar::from_int(c)));
        let nf = sys.normal_form(&p).unwrap();
        prop_assert_eq!(sys.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(nf.terms().all(|(w, _)| sys.is_irreducible(w)));
    }

    #[test]
    fn one_step_reductions_agree(a in word_strategy(8)) {
        let sys = wemyss_system();
        let nf = sys.normal_form(&FreePoly::word(a.clone())).unwrap();
        for step in sys.one_step_reductions(&a) {
            prop_assert_eq!(sys.normal_form(&step).unwrap(), nf.clone());
        }
    }

    #[test]
    fn weighted_order_is_compatible_with_concatenation(a in word_strategy(4), b in word_strategy(4), c in word_strategy(4)) {
        let order = WordOrder::weighted(vec![2, 3]);
        if order.cmp(&a, &b) == std::cmp::Ordering::Less {
            prop_assert_eq!(order.cmp(&c.concat(&a), &c.concat(&b)), std::cmp::Ordering::Less);
            prop_assert_eq!(order.cmp(&a.concat(&c), &b.concat(&c)), std::cmp::Ordering::Less);
        }
    }
}
