mod common;

use std::collections::HashMap;

use common::{example_vector, oracle_act};
use e510::exact::{in_span, rank, Rational, SparseMatrix, SparseVector};
use e510::singular::{find_singular, find_singular_with, is_s5_singular, is_singular};
use e510::sl5rep::Weight;
use e510::superalgebra::{l0_basis, l1_spanning, GradedElement, OddForm, PAIRS};
use e510::verma::{PBWIndex, VermaModule, VermaVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn coords(labels: &HashMap<(PBWIndex, usize), usize>, v: &VermaVector) -> SparseVector {
    let mut s = SparseVector::zero(labels.len());
    for (k, c) in v.terms() {
        s.add_at(labels[k], c);
    }
    s
}

fn label_index(module: &VermaModule, p: u32) -> HashMap<(PBWIndex, usize), usize> {
    module.enumerate_basis(p).unwrap().iter().enumerate().map(|(i, k)| (*k, i)).collect()
}

#[test]
fn example_vector_is_singular_and_found() {
    let module = VermaModule::new(Weight([0, 0, 0, 1])).unwrap();
    let v = example_vector(&module);
    assert!(is_singular(&module, &v).unwrap());
    let report = find_singular(&module, 1, None).unwrap();
    let idx = label_index(&module, 1);
    let basis: Vec<SparseVector> = report.basis.iter().map(|b| coords(&idx, b)).collect();
    assert!(in_span(&coords(&idx, &v), &basis).unwrap());
    assert_eq!(module.weight_of(&v).unwrap(), Weight([1, 0, 0, 0]));
}

#[test]
fn single_term_is_not_singular() {
    let module = VermaModule::new(Weight([0, 0, 0, 1])).unwrap();
    let k = PBWIndex::new([0; 5], &[(0, 1)]).unwrap();
    let v = VermaVector::monomial(module.lambda(), k, 0, Rational::one());
    assert!(!is_singular(&module, &v).unwrap());
}

/// Kernel dimension of the stacked L_1 action computed from the rewriting oracle.
fn oracle_kernel_dim(module: &VermaModule, p: u32) -> usize {
    let labels = module.enumerate_basis(p).unwrap();
    let mut rows: HashMap<(usize, PBWIndex, usize), Vec<(usize, Rational)>> = HashMap::new();
    for (yi, y) in l1_spanning().iter().enumerate() {
        for (col, (idx, b)) in labels.iter().enumerate() {
            for ((j, vb), c) in oracle_act(module.rep(), y, idx, *b) {
                rows.entry((yi, j, vb)).or_default().push((col, c));
            }
        }
    }
    let rows: Vec<SparseVector> = rows
        .into_values()
        .map(|r| {
            let mut v = SparseVector::zero(labels.len());
            for (c, x) in r {
                v.add_at(c, &x);
            }
            v
        })
        .collect();
    let m = SparseMatrix::from_rows(labels.len(), rows).unwrap();
    labels.len() - rank(&m)
}

#[test]
fn kernel_dimensions_match_oracle() {
    for (w, p) in [([0, 0, 0, 0], 1), ([0, 0, 0, 0], 2), ([0, 0, 0, 1], 1), ([1, 0, 0, 0], 1), ([0, 0, 0, 1], 2)] {
        let module = VermaModule::new(Weight(w)).unwrap();
        let r = find_singular(&module, p, None).unwrap();
        assert_eq!(r.dimension(), oracle_kernel_dim(&module, p), "{w:?} degree {p}");
        let total: usize = r.per_weight.iter().map(|(_, d)| d).sum();
        assert_eq!(total, r.dimension());
    }
}

#[test]
fn trivial_module_degree_one_is_everything() {
    let module = VermaModule::new(Weight::ZERO).unwrap();
    assert_eq!(find_singular(&module, 1, None).unwrap().dimension(), 10);
}

#[test]
fn kernel_is_l0_stable_and_s5_singular() {
    for (w, p) in [([0, 0, 0, 1], 1), ([0, 0, 0, 0], 2), ([1, 0, 0, 0], 2)] {
        let module = VermaModule::new(Weight(w)).unwrap();
        let r = find_singular(&module, p, None).unwrap();
        let idx = label_index(&module, p);
        let basis: Vec<SparseVector> = r.basis.iter().map(|b| coords(&idx, b)).collect();
        for v in &r.basis {
            assert!(is_singular(&module, v).unwrap());
            assert!(is_s5_singular(&module, v).unwrap());
            for z in l0_basis() {
                let zv = module.act(&z, v).unwrap();
                assert!(in_span(&coords(&idx, &zv), &basis).unwrap());
            }
        }
    }
}

#[test]
fn xi_times_singular_is_s5_singular() {
    let module = VermaModule::new(Weight([0, 0, 0, 1])).unwrap();
    let v = example_vector(&module);
    for &(i, j) in &PAIRS {
        let xv = module.multiply_xi(&OddForm::xi(i, j), &v).unwrap();
        assert!(is_s5_singular(&module, &xv).unwrap(), "xi{}{}", i + 1, j + 1);
    }
}

#[test]
fn kernel_independent_of_spanning_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let l1 = l1_spanning();
    // random invertible recombination within each weight space keeps the span
    let mut by_weight: HashMap<Weight, Vec<GradedElement>> = HashMap::new();
    for y in &l1 {
        by_weight.entry(y.weight().unwrap()).or_default().push(y.clone());
    }
    let mut alt = Vec::new();
    for (_, ys) in by_weight {
        for (a, y) in ys.iter().enumerate() {
            let mut z = y.scale(&Rational::from_int(rng.gen_range(1..=4)));
            for y2 in &ys[a + 1..] {
                z = z.add(&y2.scale(&Rational::from_int(rng.gen_range(-2..=2))));
            }
            alt.push(z);
        }
    }
    for (w, p) in [([0, 0, 0, 1], 1), ([0, 0, 0, 0], 2)] {
        let module = VermaModule::new(Weight(w)).unwrap();
        let a = find_singular(&module, p, None).unwrap();
        let b = find_singular_with(&module, p, None, &alt).unwrap();
        assert_eq!(a.dimension(), b.dimension());
        assert_eq!(a.per_weight, b.per_weight);
    }
}

#[test]
fn weight_filtered_search_matches_full_search() {
    let module = VermaModule::new(Weight([0, 0, 0, 1])).unwrap();
    let full = find_singular(&module, 1, None).unwrap();
    let only = find_singular(&module, 1, Some(Weight([1, 0, 0, 0]))).unwrap();
    let d = full.per_weight.iter().find(|(w, _)| *w == Weight([1, 0, 0, 0])).map_or(0, |x| x.1);
    assert_eq!(only.dimension(), d);
    assert!(d >= 1);
}

