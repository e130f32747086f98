use std::collections::BTreeSet;

use e510::bound::{
    candidates, candidates_with_passes, degree_bound_report, omega, table_cell, CandidateStatus, S, S_DUAL,
};
use e510::sl5rep::{dual_weight, exterior_power_character, irr_character, weyl_dim, Weight};
use e510::superalgebra::{lminus1_basis, GradedElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

#[derive(Deserialize)]
struct Cell {
    j: usize,
    i: usize,
    weights: Vec<Weight>,
}

#[derive(Deserialize)]
struct Table {
    cells: Vec<Cell>,
}

fn set(ws: &[[i32; 4]]) -> BTreeSet<Weight> {
    ws.iter().map(|&w| Weight(w)).collect()
}

#[test]
fn table_matches_transcription() {
    let t: Table = serde_json::from_str(include_str!("../data/reference_table.json")).unwrap();
    assert_eq!(t.cells.len(), 20);
    let mut total = 0;
    for c in &t.cells {
        let got: BTreeSet<Weight> = table_cell(c.j, c.i).unwrap().support().into_iter().collect();
        let want: BTreeSet<Weight> = c.weights.iter().copied().collect();
        assert_eq!(got, want, "cell j={} i={}", c.j, c.i);
        total += want.len();
    }
    assert_eq!(total, 82);
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

#[test]
fn cell_dimensions() {
    for j in 0..=10 {
        for i in 0..=4 {
            let d = table_cell(j, i).unwrap();
            assert_eq!(d.total_dim(), binom(10, j as u64) * weyl_dim(&omega(i)).unwrap(), "j={j} i={i}");
        }
    }
}

#[test]
fn frobenius_reciprocity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let j = rng.gen_range(0..=10usize);
        let i = rng.gen_range(0..=4usize);
        let lambda = Weight(std::array::from_fn(|_| rng.gen_range(0..=2)));
        let left = table_cell(j, i).unwrap().mult(&lambda);
        let ext = exterior_power_character(&S, j).unwrap();
        let right = e510::sl5rep::decompose_character(&ext.product(&irr_character(&lambda).unwrap()))
            .unwrap()
            .mult(&omega(i));
        assert_eq!(left, right, "j={j} i={i} lambda={lambda}");
    }
}

#[test]
fn s_is_the_odd_negative_part() {
    let top = lminus1_basis()
        .iter()
        .filter_map(GradedElement::weight)
        .max_by_key(|w| w.twice_height())
        .unwrap();
    assert_eq!(top, S);
    assert_eq!(dual_weight(&S), S_DUAL);
}

#[test]
fn high_degrees_are_empty() {
    for p in 13..=20 {
        let r = candidates(p).unwrap();
        assert_eq!(r.status, CandidateStatus::Bounded);
        assert!(r.candidates.is_empty(), "degree {p}");
    }
}

#[test]
fn degree_twelve() {
    let r = candidates(12).unwrap();
    assert_eq!(r.candidates, set(&[[0, 0, 1, 0]]));
    assert!(!r.discrepancy());
}

#[test]
fn degree_eleven_has_one_surplus_weight() {
    let r = candidates(11).unwrap();
    let stated = set(&[[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 1, 1, 0], [1, 0, 0, 1]]);
    assert_eq!(r.stated.as_ref(), Some(&stated));
    assert!(r.missing.is_empty());
    assert_eq!(r.surplus, set(&[[0, 0, 0, 0]]));
    assert!(r.discrepancy());
    assert!(r.to_json().contains("\"discrepancy\": true"));
}

#[test]
fn degree_ten() {
    let r = candidates(10).unwrap();
    assert!(r.pass1.is_none());
    assert_eq!(r.candidates.len(), 16);
    assert!(!r.discrepancy());
    for (_, (first, xi)) in &r.witnesses {
        assert!(first.is_none());
        assert_eq!(xi.len(), 1);
    }
}

#[test]
fn bound_report() {
    let r = degree_bound_report().unwrap();
    assert_eq!(r.global, 12);
    assert_eq!(r.bound_for(&Weight([0, 0, 1, 0])), 12);
    assert_eq!(r.bound_for(&Weight([0, 1, 1, 0])), 11);
    assert_eq!(r.bound_for(&Weight([0, 0, 0, 0])), 11);
    assert_eq!(r.bound_for(&Weight([2, 0, 1, 0])), 10);
    assert_eq!(r.bound_for(&Weight([4, 4, 4, 4])), 10);
}

#[test]
fn extra_passes_only_shrink() {
    for p in 10..=12 {
        let one = candidates(p).unwrap().candidates;
        let two = candidates_with_passes(p, 2).unwrap().candidates;
        assert!(two.is_subset(&one), "degree {p}");
    }
}
