#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use e510::exact::{Rational, SparseVector};
use e510::sl5rep::{RepMatrices, Weight};
use e510::superalgebra::{grading_degree, linear_coefficients, super_bracket, GradedElement, Parity, PAIRS};
use e510::verma::{PBWIndex, VermaModule, VermaVector};
use rand::Rng;

/// Letters of a word in U(L): a homogeneous element and its degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Letter(GradedElement, i32);

fn letters_of(e: &GradedElement) -> Vec<(Letter, Rational)> {
    let d = grading_degree(e).unwrap();
    if d >= 0 {
        return vec![(Letter(e.clone(), d), Rational::one())];
    }
    // split constants of L_- into basis letters
    let mut out = Vec::new();
    for a in 0..5 {
        let c = e.even.coeff(a).constant_term();
        if !c.is_zero() {
            out.push((Letter(GradedElement::d(a), -2), c));
        }
    }
    for &(i, j) in &PAIRS {
        let c = e.odd.coeff(i, j).constant_term();
        if !c.is_zero() {
            out.push((Letter(GradedElement::xi(i, j), -1), c));
        }
    }
    out
}

fn is_odd(l: &Letter) -> bool {
    l.0.parity() == Some(Parity::Odd)
}

/// Normal orders a word of L_- basis letters into `∂^I ξ^K` with ordinary powers,
/// then converts to divided powers.
fn normal_order(word: Vec<Letter>, coef: Rational, b: usize, out: &mut BTreeMap<(PBWIndex, usize), Rational>) {
    let mut d = [0u32; 5];
    let mut xs: Vec<usize> = Vec::new();
    for l in &word {
        if l.1 == -2 {
            let a = (0..5).find(|&a| !l.0.even.coeff(a).is_zero()).unwrap();
            d[a] += 1;
        } else {
            let p = PAIRS.iter().position(|&(i, j)| !l.0.odd.coeff(i, j).is_zero()).unwrap();
            xs.push(p);
        }
    }
    let mut stack = vec![(d, xs, coef)];
    while let Some((d, xs, c)) = stack.pop() {
        if let Some(t) = (0..xs.len().saturating_sub(1)).find(|&t| xs[t] >= xs[t + 1]) {
            let (p, q) = (xs[t], xs[t + 1]);
            if p == q {
                continue;
            }
            let mut sw = xs.clone();
            sw.swap(t, t + 1);
            stack.push((d, sw, -c.clone()));
            let br = super_bracket(&GradedElement::xi(PAIRS[p].0, PAIRS[p].1), &GradedElement::xi(PAIRS[q].0, PAIRS[q].1));
            for a in 0..5 {
                let k = br.even.coeff(a).constant_term();
                if !k.is_zero() {
                    let mut d2 = d;
                    d2[a] += 1;
                    let mut rest = xs.clone();
                    rest.drain(t..t + 2);
                    stack.push((d2, rest, &c * &k));
                }
            }
            continue;
        }
        let fact: i64 = d.iter().map(|&e| (1..=e as i64).product::<i64>()).product();
        let pairs: Vec<(usize, usize)> = xs.iter().map(|&p| PAIRS[p]).collect();
        let idx = PBWIndex::new(d, &pairs).unwrap();
        let slot = out.entry((idx, b)).or_default();
        *slot += &(&c * &Rational::from_int(fact));
    }
}

/// `y · (∂^(I) ξ^K ⊗ v_b)` by adjacent swaps in U(L).
pub fn oracle_act(rep: &RepMatrices, y: &GradedElement, idx: &PBWIndex, b: usize) -> BTreeMap<(PBWIndex, usize), Rational> {
    let mut word = Vec::new();
    for (a, &e) in idx.i.iter().enumerate() {
        for _ in 0..e {
            word.push(Letter(GradedElement::d(a), -2));
        }
    }
    for (i, j) in idx.pairs() {
        word.push(Letter(GradedElement::xi(i, j), -1));
    }
    let fact: i64 = idx.i.iter().map(|&e| (1..=e as i64).product::<i64>()).product();
    let mut out = BTreeMap::new();
    let mut stack = Vec::new();
    for (l, c) in letters_of(y) {
        let mut w = vec![l];
        w.extend(word.iter().cloned());
        stack.push((w, c * Rational::new(1, fact), b));
    }
    let mut col_cache: HashMap<(GradedElement, usize), SparseVector> = HashMap::new();
    while let Some((w, c, vb)) = stack.pop() {
        let Some(j) = (0..w.len()).rev().find(|&j| w[j].1 >= 0) else {
            normal_order(w, c, vb, &mut out);
            continue;
        };
        if j == w.len() - 1 {
            if w[j].1 > 0 {
                continue;
            }
            let col = col_cache.entry((w[j].0.clone(), vb)).or_insert_with(|| {
                let lin = linear_coefficients(&w[j].0.even).unwrap();
                let mut e = SparseVector::zero(rep.dim());
                e.set(vb, Rational::one());
                rep.linear_field(&lin).mul_vec(&e)
            });
            for (r, x) in col.iter() {
                stack.push((w[..j].to_vec(), &c * x, r));
            }
            continue;
        }
        let (p, q) = (w[j].clone(), w[j + 1].clone());
        let mut sw = w.clone();
        sw.swap(j, j + 1);
        let s = if is_odd(&p) && is_odd(&q) { -c.clone() } else { c.clone() };
        stack.push((sw, s, vb));
        let br = super_bracket(&p.0, &q.0);
        if !br.is_zero() {
            for (l, k) in letters_of(&br) {
                let mut w2 = w[..j].to_vec();
                w2.push(l);
                w2.extend_from_slice(&w[j + 2..]);
                stack.push((w2, &c * &k, vb));
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn to_map(v: &VermaVector) -> BTreeMap<(PBWIndex, usize), Rational> {
    v.terms().map(|(k, c)| (*k, c.clone())).collect()
}

/// `∂_j ∈ V([0,0,0,1])` under `∂_5 ↦ v_0`, `∂_j = −(x_5 ∂_j) · ∂_5` for `j ≠ 5`.
pub fn d_in_omega4(rep: &RepMatrices, j: usize) -> SparseVector {
    let mut e0 = SparseVector::zero(rep.dim());
    e0.set(0, Rational::one());
    if j == 4 {
        return e0;
    }
    rep.field(4, j).mul_vec(&e0).scale(&Rational::from_int(-1))
}

/// `Σ_i ξ_1i ⊗ ∂_i` in `T(V([0,0,0,1]))`.
pub fn example_vector(module: &VermaModule) -> VermaVector {
    let lam = Weight([0, 0, 0, 1]);
    assert_eq!(module.lambda(), lam);
    let mut v = VermaVector::zero(lam);
    for i in 1..5 {
        let idx = PBWIndex::new([0; 5], &[(0, i)]).unwrap();
        for (b, c) in d_in_omega4(module.rep(), i).iter() {
            v.add_term(idx, b, c);
        }
    }
    v
}

/// Random vector supported in degrees `≤ max_deg` with small integer coefficients.
pub fn random_vector(module: &VermaModule, max_deg: u32, nterms: usize, rng: &mut impl Rng) -> VermaVector {
    let mut v = VermaVector::zero(module.lambda());
    for _ in 0..nterms {
        let p = rng.gen_range(0..=max_deg);
        let basis = module.enumerate_basis(p).unwrap();
        let (idx, b) = basis[rng.gen_range(0..basis.len())];
        v.add_term(idx, b, &Rational::from_int(rng.gen_range(-3..=3)));
    }
    v
}
