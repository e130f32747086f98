//! Explicit matrices for irreducible modules.
//!
//! `V(λ)` is realized inside `⊗_k (Λ^k C^5)^{⊗ a_k}` as the span of all
//! lowering-operator images of the product of the highest weight vectors
//! `x_1 ∧ … ∧ x_k`. The gl5 generator `x_i ∂_j` acts on `C^5 = span{x_1..x_5}`
//! by `x_j ↦ x_i` and on tensor factors by the Leibniz rule; the raising
//! operators are `x_i ∂_j` with `i < j` and the Cartan element
//! `h_k = x_k ∂_k − x_{k+1} ∂_{k+1}` reads off the k-th fundamental coordinate.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::exact::{Echelon, Rational, SparseMatrix, SparseVector};

use super::{weyl_dim, RepError, Weight, N, RANK};

pub const DEFAULT_IRREP_BUDGET: u64 = 5_000;

/// One tensor factor `Λ^k C^N` with its k-subsets enumerated in lex order.
#[derive(Clone, Debug)]
struct WedgeFactor {
    subsets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl WedgeFactor {
    fn new(k: usize) -> Self {
        let mut subsets = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..N {
                cur.push(i);
                rec(i + 1, k, cur, out);
                cur.pop();
            }
        }
        rec(0, k, &mut cur, &mut subsets);
        let index = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        WedgeFactor { subsets, index }
    }

    fn len(&self) -> usize {
        self.subsets.len()
    }

    /// `x_i ∂_j` on the basis wedge `idx`: returns (coefficient, image index).
    fn apply(&self, i: usize, j: usize, idx: usize) -> Option<(i64, usize)> {
        let s = &self.subsets[idx];
        let pos = s.iter().position(|&t| t == j)?;
        if i == j {
            return Some((1, idx));
        }
        if s.contains(&i) {
            return None;
        }
        let mut t = s.clone();
        t[pos] = i;
        // sign of the sort that restores increasing order
        let mut sign = 1i64;
        for (a, &x) in t.iter().enumerate() {
            if a != pos && ((a < pos && x > i) || (a > pos && x < i)) {
                sign = -sign;
            }
        }
        t.sort_unstable();
        Some((sign, self.index[&t]))
    }
}

/// Ambient tensor space with mixed-radix flat indexing.
#[derive(Clone, Debug)]
struct Ambient {
    factors: Vec<WedgeFactor>,
    dim: usize,
}

impl Ambient {
    fn for_weight(lambda: &Weight) -> Self {
        let mut factors = Vec::new();
        for k in 1..=RANK {
            for _ in 0..lambda.0[k - 1] {
                factors.push(WedgeFactor::new(k));
            }
        }
        let dim = factors.iter().map(|f| f.len()).product();
        Ambient { factors, dim }
    }

    fn split(&self, mut flat: usize) -> Vec<usize> {
        let mut digits = vec![0; self.factors.len()];
        for (slot, f) in digits.iter_mut().zip(&self.factors).rev() {
            *slot = flat % f.len();
            flat /= f.len();
        }
        digits
    }

    fn join(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&d, f)| acc * f.len() + d)
    }

    fn apply(&self, i: usize, j: usize, v: &SparseVector) -> SparseVector {
        let mut out = SparseVector::zero(self.dim);
        for (flat, c) in v.iter() {
            let digits = self.split(flat);
            for (t, f) in self.factors.iter().enumerate() {
                if let Some((s, img)) = f.apply(i, j, digits[t]) {
                    let mut d = digits.clone();
                    d[t] = img;
                    out.add_at(self.join(&d), &(c * &Rational::from_int(s)));
                }
            }
        }
        out
    }

    fn highest_vector(&self) -> SparseVector {
        // x_1 ∧ … ∧ x_k is index 0 in every factor
        let mut v = SparseVector::zero(self.dim);
        v.set(0, Rational::one());
        v
    }
}

/// Explicit realization of V(λ) with action matrices for every `x_i ∂_j`.
#[derive(Clone, Debug)]
pub struct RepMatrices {
    highest_weight: Weight,
    weights: Vec<Weight>,
    /// `fields[i * N + j]` is the matrix of `x_i ∂_j` (columns are source basis vectors).
    fields: Vec<SparseMatrix>,
    basis: Vec<SparseVector>,
    ambient: Ambient,
    /// Per weight: basis indices and their pivot columns in the ambient space.
    slices: HashMap<Weight, Vec<(usize, usize)>>,
}

impl RepMatrices {
    pub fn highest_weight(&self) -> Weight {
        self.highest_weight
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Weight of each basis vector. Basis vector 0 is the highest weight vector.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Matrix of the linear vector field `x_i ∂_j` (0-based indices).
    pub fn field(&self, i: usize, j: usize) -> &SparseMatrix {
        &self.fields[i * N + j]
    }

    /// Matrix of `e^i_j` under the identification `x_i ∂_j ↦ −e^i_j`.
    pub fn e(&self, i: usize, j: usize) -> SparseMatrix {
        self.field(i, j).scale(&Rational::from_int(-1))
    }

    /// Cartan element `h_k = x_k ∂_k − x_{k+1} ∂_{k+1}`, k in 1..=4.
    pub fn cartan(&self, k: usize) -> SparseMatrix {
        assert!((1..=RANK).contains(&k));
        self.field(k - 1, k - 1).sub(self.field(k, k))
    }

    /// Matrix of `Σ c_ij x_i ∂_j`; `coeffs[i][j]` is the coefficient of `x_i ∂_j`.
    pub fn linear_field(&self, coeffs: &[[Rational; N]; N]) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.dim(), self.dim());
        for (i, row) in coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out = out.lin_comb(&Rational::one(), self.field(i, j), c);
                }
            }
        }
        out
    }

    /// Basis indices of the given weight space.
    pub fn weight_space(&self, w: &Weight) -> Vec<usize> {
        self.slices
            .get(w)
            .map(|s| s.iter().map(|(b, _)| *b).collect())
            .unwrap_or_default()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.dim
    }

    /// Flat ambient index of a pure tensor given one sorted subset of
    /// `{0..4}` per factor (factors ordered by wedge degree).
    pub fn ambient_index(&self, subsets: &[Vec<usize>]) -> Option<usize> {
        if subsets.len() != self.ambient.factors.len() {
            return None;
        }
        let mut digits = Vec::with_capacity(subsets.len());
        for (s, f) in subsets.iter().zip(&self.ambient.factors) {
            digits.push(*f.index.get(s)?);
        }
        Some(self.ambient.join(&digits))
    }

    /// Coordinates of an ambient vector in the module basis, if it lies in V(λ).
    pub fn coordinates_of(&self, v: &SparseVector) -> Option<SparseVector> {
        if v.dim() != self.ambient.dim {
            return None;
        }
        let mut coords = SparseVector::zero(self.dim());
        let mut rest = v.clone();
        for (_, slice) in self.slices.iter() {
            for &(b, pivot) in slice {
                let c = v.get(pivot);
                if !c.is_zero() {
                    coords.set(b, c.clone());
                    rest.axpy(&-c, &self.basis[b]);
                }
            }
        }
        rest.is_zero().then_some(coords)
    }

    /// Ambient vector of a basis element.
    pub fn basis_vector(&self, b: usize) -> &SparseVector {
        &self.basis[b]
    }
}

fn construct(lambda: &Weight, budget: u64) -> Result<RepMatrices, RepError> {
    let expected = weyl_dim(lambda)?;
    if expected > budget {
        return Err(RepError::BudgetExceeded {
            dim: expected,
            budget,
        });
    }
    let ambient = Ambient::for_weight(lambda);
    // Weight spaces by BFS over simple lowering operators x_{k+1} ∂_k.
    let mut spaces: BTreeMap<(i64, Weight), Echelon> = BTreeMap::new();
    let mut order: Vec<Weight> = Vec::new();
    let mut rref: HashMap<Weight, Vec<SparseVector>> = HashMap::new();
    let mut e0 = Echelon::new(ambient.dim);
    e0.insert(&ambient.highest_vector());
    spaces.insert((-lambda.twice_height(), *lambda), e0);
    // Process weights in order of decreasing height so every weight space is
    // complete before it is lowered further.
    while let Some((&key, _)) = spaces.iter().next() {
        let ech = spaces.remove(&key).unwrap();
        let w = key.1;
        let rows = ech.rref_rows();
        for k in 0..RANK {
            let target = w - Weight::simple_root(k + 1);
            let tkey = (-target.twice_height(), target);
            for r in &rows {
                let img = ambient.apply(k + 1, k, r);
                if !img.is_zero() {
                    spaces
                        .entry(tkey)
                        .or_insert_with(|| Echelon::new(ambient.dim))
                        .insert(&img);
                }
            }
        }
        order.push(w);
        rref.insert(w, rows);
        if order.len() > expected as usize {
            break;
        }
    }
    let mut basis = Vec::new();
    let mut weights = Vec::new();
    let mut slices: HashMap<Weight, Vec<(usize, usize)>> = HashMap::new();
    for w in &order {
        for r in &rref[w] {
            let pivot = r.iter().next().expect("nonzero row").0;
            slices.entry(*w).or_default().push((basis.len(), pivot));
            basis.push(r.clone());
            weights.push(*w);
        }
    }
    if basis.len() as u64 != expected {
        return Err(RepError::DimensionMismatch {
            built: basis.len(),
            expected,
        });
    }
    let mut rep = RepMatrices {
        highest_weight: *lambda,
        weights,
        fields: Vec::new(),
        basis,
        ambient,
        slices,
    };
    let dim = rep.dim();
    let mut fields = Vec::with_capacity(N * N);
    for i in 0..N {
        for j in 0..N {
            let mut m = SparseMatrix::zero(dim, dim);
            for b in 0..dim {
                let img = rep.ambient.apply(i, j, &rep.basis[b]);
                let coords = rep
                    .coordinates_of(&img)
                    .ok_or(RepError::DimensionMismatch {
                        built: dim,
                        expected,
                    })?;
                for (t, c) in coords.iter() {
                    m.set(t, b, c.clone());
                }
            }
            fields.push(m);
        }
    }
    rep.fields = fields;
    Ok(rep)
}

type IrrepCache = RwLock<HashMap<Weight, Arc<RepMatrices>>>;

fn irrep_cache() -> &'static IrrepCache {
    static CACHE: OnceLock<IrrepCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn build_irrep(lambda: &Weight) -> Result<Arc<RepMatrices>, RepError> {
    build_irrep_with_budget(lambda, DEFAULT_IRREP_BUDGET)
}

/// Builds (or fetches from the cache) the explicit realization of V(λ).
pub fn build_irrep_with_budget(lambda: &Weight, budget: u64) -> Result<Arc<RepMatrices>, RepError> {
    if !lambda.is_dominant() {
        return Err(RepError::NotDominant(*lambda));
    }
    if let Some(r) = irrep_cache().read().unwrap().get(lambda) {
        return Ok(r.clone());
    }
    let rep = Arc::new(construct(lambda, budget)?);
    irrep_cache()
        .write()
        .unwrap()
        .entry(*lambda)
        .or_insert_with(|| rep.clone());
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_sign() {
        let f = WedgeFactor::new(2);
        // x_2 ∂_0 on x_0 ∧ x_1 gives x_2 ∧ x_1 = −x_1 ∧ x_2
        let idx = f.index[&vec![0, 1]];
        let (s, img) = f.apply(2, 0, idx).unwrap();
        assert_eq!(s, -1);
        assert_eq!(f.subsets[img], vec![1, 2]);
        assert!(f.apply(1, 0, idx).is_none());
    }

    #[test]
    fn standard_module_uses_elementary_matrices() {
        let r = build_irrep(&Weight([1, 0, 0, 0])).unwrap();
        assert_eq!(r.dim(), 5);
        for i in 0..N {
            for j in 0..N {
                let m = r.field(i, j);
                assert_eq!(m.nnz(), 1);
            }
        }
        assert_eq!(r.weights()[0], Weight([1, 0, 0, 0]));
    }

    #[test]
    fn adjoint_dimension() {
        let r = build_irrep(&Weight([1, 0, 0, 1])).unwrap();
        assert_eq!(r.dim(), 24);
    }

    #[test]
    fn budget_is_enforced() {
        let err = build_irrep_with_budget(&Weight([2, 2, 2, 2]), 100).unwrap_err();
        assert!(matches!(err, RepError::BudgetExceeded { .. }));
    }
}
