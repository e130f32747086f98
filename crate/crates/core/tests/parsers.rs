//! Text and JSON entry points: replay the fuzz seed corpus and check round trips.

use std::path::PathBuf;

use e510::checks::parse_suites;
use e510::exact::Rational;
use e510::sl5rep::{Decomposition, Weight};
use e510::superalgebra::{Gen, GradedElement};
use e510::verma::VermaVector;
use proptest::prelude::*;

fn corpus(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| std::fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn weight_seeds() {
    let ok = corpus("weight").into_iter().filter_map(|s| s.parse::<Weight>().ok()).inspect(|w| {
        assert_eq!(w.to_string().parse::<Weight>().unwrap(), *w);
    });
    assert!(ok.count() >= 3);
}

#[test]
fn rational_seeds() {
    let ok = corpus("rational").into_iter().filter_map(|s| s.parse::<Rational>().ok()).inspect(|r| {
        assert_eq!(&r.to_string().parse::<Rational>().unwrap(), r);
    });
    assert!(ok.count() >= 4);
}

#[test]
fn element_seeds() {
    let ok = corpus("element").into_iter().filter_map(|s| s.parse::<GradedElement>().ok()).inspect(|a| {
        assert_eq!(&a.to_string().parse::<GradedElement>().unwrap(), a);
    });
    assert!(ok.count() >= 5);
}

#[test]
fn json_and_suite_seeds() {
    for s in corpus("decomposition_json") {
        let _ = Decomposition::from_json(&s);
    }
    for s in corpus("verma_json") {
        let _ = VermaVector::from_json(Weight([0, 0, 0, 1]), 5, &s);
    }
    for s in corpus("suites") {
        let _ = parse_suites(&s);
    }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| &Rational::from_int(n) / &Rational::from_int(d))
}

fn generator() -> impl Strategy<Value = Gen> {
    prop_oneof![
        (0usize..5).prop_map(Gen::D),
        (0usize..5, 0usize..5).prop_filter("distinct", |(i, j)| i != j).prop_map(|(i, j)| Gen::Xi(i, j)),
    ]
}

fn element() -> impl Strategy<Value = GradedElement> {
    prop::collection::vec((rational(), prop::array::uniform5(0u32..3), generator()), 0..5).prop_map(|ts| {
        ts.into_iter()
            .fold(GradedElement::zero(), |acc, (c, e, g)| acc.add(&GradedElement::monomial(c, e, g)))
    })
}

proptest! {
    #[test]
    fn element_text_round_trip(a in element()) {
        prop_assert_eq!(a.to_string().parse::<GradedElement>().unwrap(), a);
    }

    #[test]
    fn weight_text_round_trip(w in prop::array::uniform4(0i32..50)) {
        let w = Weight(w);
        prop_assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
    }

    #[test]
    fn decomposition_json_round_trip(ts in prop::collection::vec((prop::array::uniform4(0i32..4), 1u64..5), 0..6)) {
        let d: Decomposition = ts.into_iter().map(|(w, m)| (Weight(w), m)).collect();
        prop_assert_eq!(Decomposition::from_json(&d.to_json()).unwrap(), d);
    }
}
