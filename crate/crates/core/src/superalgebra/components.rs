use std::collections::HashMap;

use crate::exact::{Echelon, Rational, SparseVector};

use super::{monomial_degree, Exponent, Gen, GradedElement, OddForm, NVARS, PAIRS};

/// All exponents of total degree `d`, in lexicographically decreasing order.
pub(crate) fn exponents_of_degree(d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut cur = [0u32; NVARS];
    fn rec(pos: usize, left: u32, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        if pos == NVARS - 1 {
            cur[pos] = left;
            out.push(*cur);
            return;
        }
        for a in (0..=left).rev() {
            cur[pos] = a;
            rec(pos + 1, left - a, cur, out);
        }
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// Coordinate system on the monomials of a fixed ℤ-degree.
pub(crate) struct MonomialIndex {
    keys: Vec<(Gen, Exponent)>,
    index: HashMap<(Gen, Exponent), usize>,
}

impl MonomialIndex {
    pub(crate) fn for_degree(d: i32) -> Self {
        let mut keys = Vec::new();
        // x^e ∂_i has degree 2|e| − 2, x^e ξ_ij has degree 2|e| − 1
        if d % 2 == 0 {
            for e in exponents_of_degree(((d + 2) / 2) as u32) {
                for i in 0..NVARS {
                    keys.push((Gen::D(i), e));
                }
            }
        } else {
            for e in exponents_of_degree(((d + 1) / 2) as u32) {
                for &(i, j) in &PAIRS {
                    keys.push((Gen::Xi(i, j), e));
                }
            }
        }
        debug_assert!(keys.iter().all(|(g, e)| monomial_degree(e, g) == d));
        let index = keys.iter().enumerate().map(|(k, key)| (*key, k)).collect();
        MonomialIndex { keys, index }
    }

    pub(crate) fn dim(&self) -> usize {
        self.keys.len()
    }

    pub(crate) fn coordinates(&self, a: &GradedElement) -> SparseVector {
        let mut v = SparseVector::zero(self.dim());
        for (g, e, c) in a.terms() {
            v.add_at(self.index[&(g, e)], &c);
        }
        v
    }
}

/// Keeps the linearly independent members of `candidates`, in order.
fn independent(d: i32, candidates: impl IntoIterator<Item = GradedElement>) -> Vec<GradedElement> {
    let idx = MonomialIndex::for_degree(d);
    let mut ech = Echelon::new(idx.dim());
    candidates
        .into_iter()
        .filter(|a| !a.is_zero() && ech.insert(&idx.coordinates(a)))
        .collect()
}

fn unit(i: usize) -> Exponent {
    let mut e = [0; NVARS];
    e[i] = 1;
    e
}

/// `∂_1 … ∂_5`.
pub fn lminus2_basis() -> Vec<GradedElement> {
    (0..NVARS).map(GradedElement::d).collect()
}

/// `ξ_12 … ξ_45` in lexicographic order.
pub fn lminus1_basis() -> Vec<GradedElement> {
    PAIRS.iter().map(|&(i, j)| GradedElement::xi(i, j)).collect()
}

/// `x_i ∂_j` for `i ≠ j`, then `x_k ∂_k − x_{k+1} ∂_{k+1}`.
pub fn l0_basis() -> Vec<GradedElement> {
    let mut out = Vec::new();
    for i in 0..NVARS {
        for j in 0..NVARS {
            if i != j {
                out.push(GradedElement::x_d(i, j));
            }
        }
    }
    for k in 0..NVARS - 1 {
        out.push(GradedElement::x_d(k, k).sub(&GradedElement::x_d(k + 1, k + 1)));
    }
    out
}

/// Basis of `L_1` made of the weight vectors `x_h ξ_kl + x_k ξ_hl`
/// (`x_h ξ_hl` when `h = k`).
pub fn l1_spanning() -> Vec<GradedElement> {
    let mut cands = Vec::new();
    for h in 0..NVARS {
        for k in h..NVARS {
            for l in 0..NVARS {
                if l == k || (h != k && l == h) {
                    continue;
                }
                let mut y = GradedElement::from_odd(OddForm::monomial(Rational::one(), unit(h), k, l));
                if h != k {
                    y = y.add(&GradedElement::from_odd(OddForm::monomial(Rational::one(), unit(k), h, l)));
                }
                cands.push(y);
            }
        }
    }
    independent(1, cands)
}

/// Basis of `L_2`, the divergence-free fields with quadratic coefficients:
/// `x^α ∂_c` with `x_c ∤ x^α`, completed by differences
/// `x_a x_c ∂_c / (1 + δ_ac) − x_a x_d ∂_d / (1 + δ_ad)`.
pub fn l2_spanning() -> Vec<GradedElement> {
    let mut cands = Vec::new();
    for e in exponents_of_degree(2) {
        for c in 0..NVARS {
            if e[c] == 0 {
                cands.push(GradedElement::monomial(Rational::one(), e, Gen::D(c)));
            }
        }
    }
    for a in 0..NVARS {
        for c in 0..NVARS {
            for d in c + 1..NVARS {
                let term = |t: usize| {
                    let mut e = unit(a);
                    e[t] += 1;
                    let c = Rational::new(1, if a == t { 2 } else { 1 });
                    GradedElement::monomial(c, e, Gen::D(t))
                };
                cands.push(term(c).sub(&term(d)));
            }
        }
    }
    independent(2, cands)
}

/// Basis of the homogeneous component `L_d` for `−2 ≤ d ≤ 2`.
pub fn component_basis(d: i32) -> Option<Vec<GradedElement>> {
    match d {
        -2 => Some(lminus2_basis()),
        -1 => Some(lminus1_basis()),
        0 => Some(l0_basis()),
        1 => Some(l1_spanning()),
        2 => Some(l2_spanning()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl5rep::{weyl_dim, Weight};

    #[test]
    fn component_dimensions() {
        assert_eq!(lminus2_basis().len(), 5);
        assert_eq!(lminus1_basis().len(), 10);
        assert_eq!(l0_basis().len(), 24);
        assert_eq!(l1_spanning().len() as u64, weyl_dim(&Weight([1, 1, 0, 0])).unwrap());
        assert_eq!(l2_spanning().len(), 70);
    }

    #[test]
    fn spanning_sets_are_valid_weight_vectors() {
        for d in -2..=2 {
            for a in component_basis(d).unwrap() {
                assert!(a.is_valid(), "{a}");
                assert!(a.weight().is_some(), "{a}");
                assert_eq!(super::super::grading_degree(&a).unwrap(), d);
            }
        }
    }

    #[test]
    fn l1_contains_highest_and_lowest_vectors() {
        let idx = MonomialIndex::for_degree(1);
        let mut ech = Echelon::new(idx.dim());
        for y in l1_spanning() {
            ech.insert(&idx.coordinates(&y));
        }
        let hw = GradedElement::monomial(Rational::one(), unit(0), Gen::Xi(0, 1));
        let lw = GradedElement::monomial(Rational::one(), unit(4), Gen::Xi(3, 4));
        assert!(ech.contains(&idx.coordinates(&hw)));
        assert!(ech.contains(&idx.coordinates(&lw)));
    }

    #[test]
    fn l2_membership() {
        let idx = MonomialIndex::for_degree(2);
        let mut ech = Echelon::new(idx.dim());
        for y in l2_spanning() {
            ech.insert(&idx.coordinates(&y));
        }
        let a: GradedElement = "x1*x2*d3".parse().unwrap();
        let b: GradedElement = "x1*x2*d2 - x1*x3*d3".parse().unwrap();
        let c: GradedElement = "x1^2*d1".parse().unwrap();
        assert!(ech.contains(&idx.coordinates(&a)));
        assert!(ech.contains(&idx.coordinates(&b)));
        assert!(!ech.contains(&idx.coordinates(&c)));
    }
}
