//! Generalized Verma modules `T(V(λ)) = U(L_−) ⊗ V(λ)`.
//!
//! Basis: `∂^(I) ξ^K ⊗ v_b` with divided powers `∂^(I) = ∂^I / I!`, all `∂`s
//! before all `ξ`s, and `ξ`s in lexicographic pair order. `L_{−2}` is central
//! in `U(L_−)`, and `ξ_c ξ_d = −ξ_d ξ_c + [ξ_c, ξ_d]` with the bracket in
//! `L_{−2}`.

mod quotient;
mod straighten;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::exact::Rational;
use crate::sl5rep::{build_irrep, RepError, RepMatrices, Weight};
use crate::superalgebra::{complement0, GradedElement, OddForm, SuperError, NVARS, PAIRS};

pub use quotient::{exterior_basis, QuotientClass};

/// Default cap on the dimension of a single degree block.
pub const DEFAULT_BUDGET: u64 = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VermaError {
    #[error("block of dimension {needed} exceeds the budget of {budget}")]
    Budget { needed: u64, budget: u64 },
    #[error("action of elements of degree {0} is not supported")]
    UnsupportedDegree(i32),
    #[error("element is not constant-coefficient in L_-1")]
    NotConstantOdd,
    #[error("zero vector")]
    Zero,
    #[error("vector is not in the filtration level {0}")]
    NotInFiltration(usize),
    #[error("vector is not a weight vector")]
    NotWeightVector,
    #[error("vectors belong to different modules")]
    ModuleMismatch,
    #[error("invalid basis label: {0}")]
    BadLabel(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Super(#[from] SuperError),
}

/// PBW label `∂^(I) ξ^K`; `K` is a bitmask over the ten pairs in lex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PBWIndex {
    pub i: [u32; NVARS],
    pub k: u16,
}

impl PBWIndex {
    pub const ONE: PBWIndex = PBWIndex { i: [0; NVARS], k: 0 };

    /// From exponents and 0-based pairs `(a, b)` with `a < b`.
    pub fn new(i: [u32; NVARS], pairs: &[(usize, usize)]) -> Result<Self, VermaError> {
        let mut k = 0u16;
        for &(a, b) in pairs {
            let p = PAIRS
                .iter()
                .position(|&q| q == (a, b))
                .ok_or_else(|| VermaError::BadLabel(format!("pair ({a},{b})")))?;
            if k & (1 << p) != 0 {
                return Err(VermaError::BadLabel(format!("repeated pair ({a},{b})")));
            }
            k |= 1 << p;
        }
        Ok(PBWIndex { i, k })
    }

    pub fn even_degree(&self) -> u32 {
        self.i.iter().sum()
    }

    pub fn odd_degree(&self) -> u32 {
        self.k.count_ones()
    }

    /// `2|I| + |K|`.
    pub fn degree(&self) -> u32 {
        2 * self.even_degree() + self.odd_degree()
    }

    /// `(|I|, |K|)`.
    pub fn bidegree(&self) -> (u32, u32) {
        (self.even_degree(), self.odd_degree())
    }

    /// Pair positions in `K`, increasing.
    pub fn pair_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..PAIRS.len()).filter(move |p| self.k & (1 << p) != 0)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.pair_positions().map(|p| PAIRS[p]).collect()
    }

    /// Weight in ε-coordinates: `∂_a ↦ −ε_a`, `ξ_ab ↦ ε_a + ε_b`.
    pub fn eps_weight(&self) -> [i32; NVARS] {
        let mut w = [0i32; NVARS];
        for (a, &e) in self.i.iter().enumerate() {
            w[a] -= e as i32;
        }
        for (a, b) in self.pairs() {
            w[a] += 1;
            w[b] += 1;
        }
        w
    }

    pub fn weight(&self) -> Weight {
        Weight::from_eps(&self.eps_weight())
    }
}

/// Sparse element of a Verma module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VermaVector {
    lambda: Weight,
    terms: BTreeMap<(PBWIndex, usize), Rational>,
}

impl VermaVector {
    pub fn zero(lambda: Weight) -> Self {
        VermaVector {
            lambda,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(lambda: Weight, idx: PBWIndex, b: usize, c: Rational) -> Self {
        let mut v = VermaVector::zero(lambda);
        v.add_term(idx, b, &c);
        v
    }

    pub fn lambda(&self) -> Weight {
        self.lambda
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PBWIndex, usize), &Rational)> {
        self.terms.iter()
    }

    pub fn get(&self, idx: &PBWIndex, b: usize) -> Rational {
        self.terms.get(&(*idx, b)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, idx: PBWIndex, b: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((idx, b)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(idx, b));
        }
    }

    fn check(&self, o: &VermaVector) -> Result<(), VermaError> {
        if self.lambda != o.lambda {
            return Err(VermaError::ModuleMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &VermaVector) -> Result<VermaVector, VermaError> {
        self.check(o)?;
        let mut out = self.clone();
        for ((i, b), c) in &o.terms {
            out.add_term(*i, *b, c);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &VermaVector) -> Result<VermaVector, VermaError> {
        self.add(&o.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> VermaVector {
        let mut out = VermaVector::zero(self.lambda);
        if !c.is_zero() {
            for ((i, b), x) in &self.terms {
                out.terms.insert((*i, *b), x * c);
            }
        }
        out
    }

    /// Projection onto bidegree `(n | m)`.
    pub fn bidegree_component(&self, n: u32, m: u32) -> VermaVector {
        VermaVector {
            lambda: self.lambda,
            terms: self
                .terms
                .iter()
                .filter(|((i, _), _)| i.bidegree() == (n, m))
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Projection onto degree `p`.
    pub fn degree_component(&self, p: u32) -> VermaVector {
        VermaVector {
            lambda: self.lambda,
            terms: self
                .terms
                .iter()
                .filter(|((i, _), _)| i.degree() == p)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Degrees present in the support.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|(i, _)| i.degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Largest `|K|` in the support.
    pub fn top_odd_level(&self) -> Result<u32, VermaError> {
        self.terms
            .keys()
            .map(|(i, _)| i.odd_degree())
            .max()
            .ok_or(VermaError::Zero)
    }

    pub fn to_json(&self) -> String {
        let list: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|((idx, b), c)| JsonTerm {
                i: idx.i,
                k: idx.pairs().iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
                v: *b,
                c: c.clone(),
            })
            .collect();
        serde_json::to_string(&list).expect("serializable")
    }

    /// Parses the JSON term list for the module with highest weight `lambda`.
    pub fn from_json(lambda: Weight, dim_v: usize, s: &str) -> Result<VermaVector, VermaError> {
        let list: Vec<JsonTerm> = serde_json::from_str(s).map_err(|e| VermaError::Json(e.to_string()))?;
        let mut out = VermaVector::zero(lambda);
        for t in list {
            let mut pairs = Vec::with_capacity(t.k.len());
            for [a, b] in t.k {
                if !(1..=NVARS).contains(&a) || !(1..=NVARS).contains(&b) || a >= b {
                    return Err(VermaError::BadLabel(format!("pair [{a},{b}]")));
                }
                pairs.push((a - 1, b - 1));
            }
            if pairs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(VermaError::BadLabel("pairs not in increasing order".into()));
            }
            if t.v >= dim_v {
                return Err(VermaError::BadLabel(format!("basis index {}", t.v)));
            }
            out.add_term(PBWIndex::new(t.i, &pairs)?, t.v, &t.c);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTerm {
    #[serde(rename = "I")]
    i: [u32; NVARS],
    #[serde(rename = "K")]
    k: Vec<[usize; 2]>,
    v: usize,
    c: Rational,
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, j| acc * (n - j) / (j + 1))
}

/// `∂` exponent vectors of total degree `n`, lexicographically decreasing.
fn even_labels(n: u32) -> Vec<[u32; NVARS]> {
    crate::superalgebra::exponents_of_degree(n)
}

/// Bitmasks of `m`-element pair sets, in lexicographic order of pair lists.
pub(crate) fn odd_labels(m: u32) -> Vec<u16> {
    let mut out = Vec::new();
    fn rec(start: usize, left: u32, mask: u16, out: &mut Vec<u16>) {
        if left == 0 {
            out.push(mask);
            return;
        }
        for p in start..PAIRS.len() {
            rec(p + 1, left - 1, mask | (1 << p), out);
        }
    }
    rec(0, m, 0, &mut out);
    out
}

pub type BasisBlock = Arc<Vec<(PBWIndex, usize)>>;

/// The module `T(V(λ))` with its representation matrices and basis caches.
pub struct VermaModule {
    lambda: Weight,
    rep: Arc<RepMatrices>,
    budget: u64,
    blocks: RwLock<HashMap<u32, BasisBlock>>,
}

impl VermaModule {
    pub fn new(lambda: Weight) -> Result<Self, VermaError> {
        Self::with_budget(lambda, DEFAULT_BUDGET)
    }

    pub fn with_budget(lambda: Weight, budget: u64) -> Result<Self, VermaError> {
        let rep = build_irrep(&lambda)?;
        Ok(VermaModule {
            lambda,
            rep,
            budget,
            blocks: RwLock::new(HashMap::new()),
        })
    }

    pub fn lambda(&self) -> Weight {
        self.lambda
    }

    pub fn rep(&self) -> &RepMatrices {
        &self.rep
    }

    pub fn dim_v(&self) -> usize {
        self.rep.dim()
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// `dim S^n(C^5) · C(10, m) · dim V`.
    pub fn bidegree_dim(&self, n: u32, m: u32) -> u64 {
        binom(n as u64 + 4, 4) * binom(10, m as u64) * self.dim_v() as u64
    }

    pub fn degree_dim(&self, p: u32) -> u64 {
        (0..=p.min(10))
            .filter(|m| (p - m) % 2 == 0)
            .map(|m| self.bidegree_dim((p - m) / 2, m))
            .sum()
    }

    /// Basis of `T^p`: `|K|` ascending, then `I` graded-lex, `K` lex, `v`.
    pub fn enumerate_basis(&self, p: u32) -> Result<BasisBlock, VermaError> {
        if let Some(b) = self.blocks.read().expect("lock").get(&p) {
            return Ok(b.clone());
        }
        let needed = self.degree_dim(p);
        if needed > self.budget {
            return Err(VermaError::Budget {
                needed,
                budget: self.budget,
            });
        }
        let mut out = Vec::with_capacity(needed as usize);
        for m in (0..=p.min(10)).filter(|m| (p - m) % 2 == 0) {
            out.extend(self.bidegree_labels((p - m) / 2, m));
        }
        let block = Arc::new(out);
        self.blocks.write().expect("lock").insert(p, block.clone());
        Ok(block)
    }

    fn bidegree_labels(&self, n: u32, m: u32) -> Vec<(PBWIndex, usize)> {
        let mut out = Vec::new();
        for i in even_labels(n) {
            for &k in &odd_labels(m) {
                for b in 0..self.dim_v() {
                    out.push((PBWIndex { i, k }, b));
                }
            }
        }
        out
    }

    /// Basis of the `(n | m)` block.
    pub fn enumerate_bidegree(&self, n: u32, m: u32) -> Result<Vec<(PBWIndex, usize)>, VermaError> {
        let needed = self.bidegree_dim(n, m);
        if m > 10 {
            return Ok(Vec::new());
        }
        if needed > self.budget {
            return Err(VermaError::Budget {
                needed,
                budget: self.budget,
            });
        }
        Ok(self.bidegree_labels(n, m))
    }

    /// Weight of a basis label.
    pub fn label_weight(&self, idx: &PBWIndex, b: usize) -> Weight {
        idx.weight() + self.rep.weights()[b]
    }

    /// `1 ⊗ v_0`, the highest weight vector of degree 0.
    pub fn highest_vector(&self) -> VermaVector {
        VermaVector::monomial(self.lambda, PBWIndex::ONE, 0, Rational::one())
    }

    pub fn weight_of(&self, v: &VermaVector) -> Result<Weight, VermaError> {
        let mut ws = v.terms().map(|((i, b), _)| self.label_weight(i, *b));
        let w = ws.next().ok_or(VermaError::Zero)?;
        if ws.all(|x| x == w) {
            Ok(w)
        } else {
            Err(VermaError::NotWeightVector)
        }
    }

    /// Action of an element whose ℤ-homogeneous components lie in
    /// `L_0 ⊕ L_1 ⊕ L_2`.
    pub fn act(&self, y: &GradedElement, v: &VermaVector) -> Result<VermaVector, VermaError> {
        if v.lambda != self.lambda {
            return Err(VermaError::ModuleMismatch);
        }
        let mut out = VermaVector::zero(self.lambda);
        for (d, part) in y.components() {
            if !(0..=2).contains(&d) {
                return Err(VermaError::UnsupportedDegree(d));
            }
            let mut s = straighten::Straightener::new(self, &part, d);
            let r = s.act(v);
            out = out.add(&r)?;
        }
        Ok(out)
    }

    /// A reusable action of one homogeneous element, caching its brackets.
    pub fn actor(&self, y: &GradedElement) -> Result<Actor<'_>, VermaError> {
        let d = crate::superalgebra::grading_degree(y)?;
        if !(0..=2).contains(&d) {
            return Err(VermaError::UnsupportedDegree(d));
        }
        Ok(Actor {
            inner: straighten::Straightener::new(self, y, d),
        })
    }

    /// Left multiplication by a constant-coefficient `ξ ∈ L_{−1}`.
    pub fn multiply_xi(&self, xi: &OddForm, v: &VermaVector) -> Result<VermaVector, VermaError> {
        if v.lambda != self.lambda {
            return Err(VermaError::ModuleMismatch);
        }
        let mut out = VermaVector::zero(self.lambda);
        for (&(a, b), f) in xi.terms() {
            let mut it = f.terms();
            let c = match (it.next(), it.next()) {
                (Some((e, c)), None) if e.iter().all(|&x| x == 0) => c.clone(),
                (None, _) => continue,
                _ => return Err(VermaError::NotConstantOdd),
            };
            let p = crate::superalgebra::pair_index(a, b);
            for ((idx, vb), x) in v.terms() {
                for (j, y) in xi_times(p, idx) {
                    out.add_term(j, *vb, &(&(x * &c) * &y));
                }
            }
        }
        Ok(out)
    }

    /// Left multiplication by `∂_a`.
    pub fn multiply_d(&self, a: usize, v: &VermaVector) -> VermaVector {
        let mut out = VermaVector::zero(self.lambda);
        for ((idx, b), x) in v.terms() {
            let (j, c) = d_times(a, 1, idx);
            out.add_term(j, *b, &(x * &c));
        }
        out
    }
}

/// Cached action of a fixed homogeneous element of degree 0, 1 or 2.
pub struct Actor<'a> {
    inner: straighten::Straightener<'a>,
}

impl Actor<'_> {
    pub fn act(&mut self, v: &VermaVector) -> VermaVector {
        self.inner.act(v)
    }

    /// Image of a single basis label.
    pub fn act_label(&mut self, idx: &PBWIndex, b: usize) -> VermaVector {
        self.inner.act_label(idx, b)
    }
}

/// `∂_a^(r) · ∂^(I) ξ^K = C(I_a + r, r) ∂^(I + r e_a) ξ^K`.
pub(crate) fn d_times(a: usize, r: u32, idx: &PBWIndex) -> (PBWIndex, Rational) {
    let mut j = *idx;
    j.i[a] += r;
    let c = binom(j.i[a] as u64, r as u64);
    (j, Rational::from_int(c as i64))
}

/// `ξ_c · ∂^(I) ξ^K` rewritten in the PBW basis (pair position `c`).
pub(crate) fn xi_times(c: usize, idx: &PBWIndex) -> Vec<(PBWIndex, Rational)> {
    let mut out = Vec::new();
    let (ca, cb) = PAIRS[c];
    let mut sign = 1i64;
    for (j, p) in idx.pair_positions().enumerate() {
        if p >= c {
            break;
        }
        // moving ξ_c past ξ_p leaves [ξ_c, ξ_p] ∈ L_{−2}, which is central
        let (pa, pb) = PAIRS[p];
        if let Some((l, s)) = complement0([ca, cb, pa, pb]) {
            let rest = PBWIndex {
                i: idx.i,
                k: idx.k & !(1 << p),
            };
            let (t, m) = d_times(l, 1, &rest);
            let sgn = if j % 2 == 0 { s as i64 } else { -(s as i64) };
            out.push((t, m * Rational::from_int(sgn)));
        }
        sign = -sign;
    }
    if idx.k & (1 << c) == 0 {
        let t = PBWIndex {
            i: idx.i,
            k: idx.k | (1 << c),
        };
        out.push((t, Rational::from_int(sign)));
    }
    out
}
