//! Singular vectors: exact kernels of the stacked `L_1` action, block by weight.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{Echelon, Rational, SparseVector};
use crate::sl5rep::Weight;
use crate::superalgebra::{l1_spanning, l2_spanning, GradedElement};
use crate::verma::{PBWIndex, VermaError, VermaModule, VermaVector};

/// Highest degree searched without a weight filter.
pub const DEFAULT_DEGREE_CAP: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SingularError {
    #[error("degree {degree} exceeds the unfiltered search cap {cap}; pass a weight")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("weight {0} does not occur in this degree")]
    InvalidWeight(Weight),
    #[error(transparent)]
    Verma(#[from] VermaError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularReport {
    pub lambda: Weight,
    pub degree: u32,
    pub weight_filter: Option<Weight>,
    /// Kernel basis, weight blocks in increasing order, each in reduced echelon form.
    pub basis: Vec<VermaVector>,
    /// `(weight, kernel dimension)` for every weight block with nonzero kernel.
    pub per_weight: Vec<(Weight, usize)>,
}

impl SingularReport {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Block {
            weight: Weight,
            dim: usize,
        }
        #[derive(Serialize)]
        struct Out {
            lambda: Weight,
            degree: u32,
            weight: Option<Weight>,
            dimension: usize,
            per_weight: Vec<Block>,
            basis: Vec<serde_json::Value>,
        }
        let out = Out {
            lambda: self.lambda,
            degree: self.degree,
            weight: self.weight_filter,
            dimension: self.dimension(),
            per_weight: self
                .per_weight
                .iter()
                .map(|&(weight, dim)| Block { weight, dim })
                .collect(),
            basis: self
                .basis
                .iter()
                .map(|v| serde_json::from_str(&v.to_json()).expect("valid json"))
                .collect(),
        };
        serde_json::to_string_pretty(&out).expect("serializable")
    }
}

/// Kernel of `u ↦ (y·u)_{y ∈ ys}` on the span of `labels`, in RREF.
fn block_kernel(module: &VermaModule, ys: &[GradedElement], labels: &[(PBWIndex, usize)]) -> Vec<VermaVector> {
    let mut row_of: HashMap<(usize, PBWIndex, usize), usize> = HashMap::new();
    let mut entries: Vec<Vec<(usize, Rational)>> = Vec::new();
    for (yi, y) in ys.iter().enumerate() {
        let mut actor = module.actor(y).expect("L_1 element");
        for (col, (idx, b)) in labels.iter().enumerate() {
            for ((j, vb), c) in actor.act_label(idx, *b).terms() {
                let next = row_of.len();
                let r = *row_of.entry((yi, *j, *vb)).or_insert(next);
                if r == entries.len() {
                    entries.push(Vec::new());
                }
                entries[r].push((col, c.clone()));
            }
        }
    }
    let n = labels.len();
    let mut ech = Echelon::new(n);
    for row in entries {
        let mut v = SparseVector::zero(n);
        for (c, x) in row {
            v.add_at(c, &x);
        }
        ech.insert(&v);
        if ech.rank() == n {
            return Vec::new();
        }
    }
    let mut kern = Echelon::new(n);
    for k in ech.kernel() {
        kern.insert(&k);
    }
    kern.rref_rows()
        .into_iter()
        .map(|r| {
            let mut v = VermaVector::zero(module.lambda());
            for (c, x) in r.iter() {
                let (idx, b) = labels[c];
                v.add_term(idx, b, x);
            }
            v
        })
        .collect()
}

/// Singular vectors of degree `p`, optionally restricted to one weight.
pub fn find_singular(
    module: &VermaModule,
    p: u32,
    weight_filter: Option<Weight>,
) -> Result<SingularReport, SingularError> {
    find_singular_with(module, p, weight_filter, &l1_spanning())
}

/// As [`find_singular`], with an explicit spanning set of `L_1`.
pub fn find_singular_with(
    module: &VermaModule,
    p: u32,
    weight_filter: Option<Weight>,
    spanning: &[GradedElement],
) -> Result<SingularReport, SingularError> {
    if weight_filter.is_none() && p > DEFAULT_DEGREE_CAP {
        return Err(SingularError::DegreeCap {
            degree: p,
            cap: DEFAULT_DEGREE_CAP,
        });
    }
    let basis = module.enumerate_basis(p)?;
    let mut blocks: BTreeMap<Weight, Vec<(PBWIndex, usize)>> = BTreeMap::new();
    for &(idx, b) in basis.iter() {
        let w = module.label_weight(&idx, b);
        if weight_filter.map_or(true, |f| f == w) {
            blocks.entry(w).or_default().push((idx, b));
        }
    }
    if let Some(f) = weight_filter {
        if blocks.is_empty() {
            return Err(SingularError::InvalidWeight(f));
        }
    }
    let blocks: Vec<(Weight, Vec<(PBWIndex, usize)>)> = blocks.into_iter().collect();
    let kernels: Vec<(Weight, Vec<VermaVector>)> = blocks
        .par_iter()
        .map(|(w, labels)| (*w, block_kernel(module, spanning, labels)))
        .collect();
    let mut report = SingularReport {
        lambda: module.lambda(),
        degree: p,
        weight_filter,
        basis: Vec::new(),
        per_weight: Vec::new(),
    };
    for (w, k) in kernels {
        if !k.is_empty() {
            report.per_weight.push((w, k.len()));
            report.basis.extend(k);
        }
    }
    Ok(report)
}

fn killed_by(module: &VermaModule, ys: &[GradedElement], v: &VermaVector) -> Result<bool, VermaError> {
    for y in ys {
        if !module.act(y, v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `L_1 v = 0`.
pub fn is_singular(module: &VermaModule, v: &VermaVector) -> Result<bool, VermaError> {
    killed_by(module, &l1_spanning(), v)
}

/// `L_2 v = 0`, i.e. singular for the even part.
pub fn is_s5_singular(module: &VermaModule, v: &VermaVector) -> Result<bool, VermaError> {
    killed_by(module, &l2_spanning(), v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_are_singular() {
        let m = VermaModule::new(Weight([0, 1, 0, 0])).unwrap();
        let r = find_singular(&m, 0, None).unwrap();
        assert_eq!(r.dimension(), 10);
    }

    #[test]
    fn trivial_module_degree_one() {
        let m = VermaModule::new(Weight::ZERO).unwrap();
        let r = find_singular(&m, 1, None).unwrap();
        assert_eq!(r.dimension(), 10);
        assert_eq!(r.per_weight.len(), 10);
    }

    #[test]
    fn cap_and_filter_errors() {
        let m = VermaModule::new(Weight::ZERO).unwrap();
        assert!(matches!(find_singular(&m, 5, None), Err(SingularError::DegreeCap { .. })));
        assert!(matches!(
            find_singular(&m, 1, Some(Weight([7, 0, 0, 0]))),
            Err(SingularError::InvalidWeight(_))
        ));
    }
}
