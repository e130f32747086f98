//! Odd-level filtration `Γ_m` (at most `m` factors `ξ`) and its quotients
//! `Γ_m / Γ_{m−1} ≅ U(𝔡) ⊗ (Λ^m(s) ⊗ V)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use crate::exact::{Rational, SparseVector};
use crate::superalgebra::{grading_degree, linear_coefficients, pair_index, super_bracket, GradedElement, NVARS};

use super::{odd_labels, PBWIndex, VermaError, VermaModule, VermaVector};

fn exterior_tables() -> &'static Vec<(Vec<u16>, HashMap<u16, usize>)> {
    static T: OnceLock<Vec<(Vec<u16>, HashMap<u16, usize>)>> = OnceLock::new();
    T.get_or_init(|| {
        (0..=10)
            .map(|m| {
                let list = odd_labels(m);
                let idx = list.iter().enumerate().map(|(i, &k)| (k, i)).collect();
                (list, idx)
            })
            .collect()
    })
}

/// Basis of `Λ^m(s)` as pair bitmasks, lexicographically ordered.
pub fn exterior_basis(m: u32) -> &'static [u16] {
    exterior_tables().get(m as usize).map(|t| t.0.as_slice()).unwrap_or(&[])
}

fn exterior_index(m: u32, k: u16) -> usize {
    exterior_tables()[m as usize].1[&k]
}

/// Element of `Γ_m / Γ_{m−1}`, keyed by (`∂` exponents, `Λ^m(s)` index, V index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientClass {
    lambda: crate::sl5rep::Weight,
    m: u32,
    terms: BTreeMap<([u32; NVARS], usize, usize), Rational>,
}

impl QuotientClass {
    pub fn zero(lambda: crate::sl5rep::Weight, m: u32) -> Self {
        QuotientClass {
            lambda,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn level(&self) -> u32 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&([u32; NVARS], usize, usize), &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, i: [u32; NVARS], e: usize, b: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, e, b)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, e, b));
        }
    }

    /// Representative in `T(V)` using the PBW monomials with `|K| = m`.
    pub fn lift(&self) -> VermaVector {
        let mut v = VermaVector::zero(self.lambda);
        let basis = exterior_basis(self.m);
        for ((i, e, b), c) in &self.terms {
            v.add_term(PBWIndex { i: *i, k: basis[*e] }, *b, c);
        }
        v
    }
}

/// Sorts the pair positions, returning the bitmask and the sign; `None` on repeats.
fn sort_pairs(mut ps: Vec<usize>) -> Option<(u16, i64)> {
    let mut sign = 1;
    for a in 0..ps.len() {
        for b in 0..ps.len() - 1 - a {
            if ps[b] > ps[b + 1] {
                ps.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    if ps.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((ps.iter().fold(0u16, |k, &p| k | (1 << p)), sign))
}

impl VermaModule {
    /// Image of `v ∈ Γ_m` in `Γ_m / Γ_{m−1}`.
    pub fn project_to_quotient(&self, v: &VermaVector, m: u32) -> Result<QuotientClass, VermaError> {
        if v.lambda() != self.lambda() {
            return Err(VermaError::ModuleMismatch);
        }
        if m > 10 {
            return Err(VermaError::NotInFiltration(m as usize));
        }
        if !v.is_zero() && v.top_odd_level()? > m {
            return Err(VermaError::NotInFiltration(m as usize));
        }
        let mut out = QuotientClass::zero(self.lambda(), m);
        for ((idx, b), c) in v.terms() {
            if idx.odd_degree() == m {
                out.add_term(idx.i, exterior_index(m, idx.k), *b, c);
            }
        }
        Ok(out)
    }

    /// Action of `y ∈ L_2` on `Γ_m / Γ_{m−1}`, computed from
    /// `y ∂^(I) = Σ_J ∂^(I−J) ad'^J(y) / J!`: only `|J| = 1` (an `L_0` term
    /// acting on `Λ^m(s) ⊗ V`) and `|J| = 2` (an `L_{−2}` term) keep `m`.
    pub fn quotient_act_l2(&self, y: &GradedElement, c: &QuotientClass) -> Result<QuotientClass, VermaError> {
        let d = grading_degree(y)?;
        if d != 2 {
            return Err(VermaError::UnsupportedDegree(d));
        }
        let m = c.m;
        let basis = exterior_basis(m);
        let mut ad: HashMap<[u32; NVARS], GradedElement> = HashMap::new();
        ad.insert([0; NVARS], y.clone());
        let mut out = QuotientClass::zero(self.lambda(), m);
        for ((i, e, b), x) in c.terms() {
            for j in crate::superalgebra::exponents_of_degree(1)
                .into_iter()
                .chain(crate::superalgebra::exponents_of_degree(2))
            {
                if (0..NVARS).any(|a| j[a] > i[a]) {
                    continue;
                }
                let z = iterated_bracket(&mut ad, j);
                if z.is_zero() {
                    continue;
                }
                let jfact: i64 = j.iter().map(|&t| (1..=t as i64).product::<i64>()).product();
                let coef = x * &Rational::new(1, jfact);
                let rest: [u32; NVARS] = std::array::from_fn(|a| i[a] - j[a]);
                if j.iter().sum::<u32>() == 2 {
                    for l in 0..NVARS {
                        let cl = z.even.coeff(l).constant_term();
                        if cl.is_zero() {
                            continue;
                        }
                        let mut t = rest;
                        t[l] += 1;
                        let mult = Rational::from_int(t[l] as i64);
                        out.add_term(t, *e, *b, &(&(&coef * &cl) * &mult));
                    }
                    continue;
                }
                // z ∈ L_0: V action, plus derivation on Λ^m(s)
                let lin = linear_coefficients(&z.even)?;
                let mut ev = SparseVector::zero(self.dim_v());
                ev.set(*b, Rational::one());
                for (bb, cv) in self.rep().linear_field(&lin).mul_vec(&ev).iter() {
                    out.add_term(rest, *e, bb, &(&coef * cv));
                }
                let ps: Vec<usize> = PBWIndex { i: [0; NVARS], k: basis[*e] }.pair_positions().collect();
                for (slot, &p) in ps.iter().enumerate() {
                    let (pa, pb) = crate::superalgebra::PAIRS[p];
                    let br = super_bracket(&z, &GradedElement::xi(pa, pb));
                    for (&(qa, qb), f) in br.odd.terms() {
                        let cq = f.constant_term();
                        let mut qs = ps.clone();
                        qs[slot] = pair_index(qa, qb);
                        if let Some((k, s)) = sort_pairs(qs) {
                            let val = &(&coef * &cq) * &Rational::from_int(s);
                            out.add_term(rest, exterior_index(m, k), *b, &val);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `ad'^J(y)` with `ad'_a(z) = [z, ∂_a]`, memoized by `J`.
fn iterated_bracket(memo: &mut HashMap<[u32; NVARS], GradedElement>, j: [u32; NVARS]) -> GradedElement {
    if let Some(z) = memo.get(&j) {
        return z.clone();
    }
    let a = (0..NVARS).find(|&a| j[a] > 0).expect("nonzero multi-index");
    let mut prev = j;
    prev[a] -= 1;
    let z = super_bracket(&iterated_bracket(memo, prev), &GradedElement::d(a));
    memo.insert(j, z.clone());
    z
}
