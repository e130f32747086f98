//! Degree bounds for singular vectors by top-term elimination.
//!
//! A singular vector of degree `p` has a top term of some bidegree `(n|m)`
//! with `2n + m = p`, `m ≤ 10`. Its image in the odd-level quotient is a
//! singular vector of a tensor module, which forces `n ≤ 2`, and `n ≥ 1`
//! only when a copy of `V(ω_i)` sits in `Λ^m(s) ⊗ V` (any `i` for `n = 1`,
//! `i = 1` for `n = 2`). By Frobenius duality this is
//! `V ⊆ Λ^m(s*) ⊗ V(ω_i)`. The ξ-pass applies the same test in degree
//! `p + 1` to `ξv`, which must vanish for all `ξ` unless it passes.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::sl5rep::{
    decompose_character, exterior_power_character, irr_character, Decomposition, RepError, Weight,
};

/// Highest weight of `s* = L_{−1}^*`.
pub const S_DUAL: Weight = Weight([0, 0, 1, 0]);

/// Highest weight of `s = L_{−1}`.
pub const S: Weight = Weight([0, 1, 0, 0]);

/// `ω_0 = 0` and the fundamental weights `ω_1 … ω_4`.
pub fn omega(i: usize) -> Weight {
    if i == 0 {
        Weight::ZERO
    } else {
        Weight::fundamental(i)
    }
}

/// `Λ^j(s*) ⊗ V(ω_i)`.
pub fn table_cell(j: usize, i: usize) -> Result<Arc<Decomposition>, RepError> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<Decomposition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.lock().expect("lock").get(&(j, i)) {
        return Ok(d.clone());
    }
    let ext = exterior_power_character(&S_DUAL, j)?;
    let d = Arc::new(decompose_character(&ext.product(&*irr_character(&omega(i))?))?);
    cache.lock().expect("lock").insert((j, i), d.clone());
    Ok(d)
}

/// Constraint on `V` coming from a top term of bidegree `(n|m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TopCondition {
    /// `n = 0`: the term is `S(5)`-constant and always allowed.
    None,
    /// `n = 1`: `V ⊆ Λ^m(s*) ⊗ V(ω_i)` for some `i`.
    AnyOmega,
    /// `n = 2`: `V ⊆ Λ^m(s*) ⊗ V(ω_1)`.
    OmegaOne,
    /// `n ≥ 3` or `m > 10`.
    Impossible,
}

pub fn top_condition(n: u32, m: u32) -> TopCondition {
    match (n, m) {
        (_, m) if m > 10 => TopCondition::Impossible,
        (0, _) => TopCondition::None,
        (1, _) => TopCondition::AnyOmega,
        (2, _) => TopCondition::OmegaOne,
        _ => TopCondition::Impossible,
    }
}

/// `(n, m)` with `2n + m = p`, `0 ≤ m ≤ 10`, `0 ≤ n ≤ 2`, by increasing `n`.
pub fn admissible_tops(p: u32) -> Vec<(u32, u32)> {
    (0..=2u32)
        .filter(|&n| 2 * n <= p && p - 2 * n <= 10)
        .map(|n| (n, p - 2 * n))
        .collect()
}

/// The `i` admitting `λ` at top `(n, m)`; `Some(None)` when unconstrained.
fn top_witness(n: u32, m: u32, lambda: &Weight) -> Result<Option<Option<usize>>, RepError> {
    Ok(match top_condition(n, m) {
        TopCondition::None => Some(None),
        TopCondition::Impossible => None,
        TopCondition::AnyOmega => {
            let mut hit = None;
            for i in 0..=4 {
                if table_cell(m as usize, i)?.mult(lambda) > 0 {
                    hit = Some(Some(i));
                    break;
                }
            }
            hit
        }
        TopCondition::OmegaOne => (table_cell(m as usize, 1)?.mult(lambda) > 0).then_some(Some(1)),
    })
}

pub fn top_condition_holds(n: u32, m: u32, lambda: &Weight) -> Result<bool, RepError> {
    Ok(top_witness(n, m, lambda)?.is_some())
}

/// Which top `(n, m)` and which `ω_i` let a weight through one pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: u32,
    pub m: u32,
    pub omega: Option<usize>,
}

fn pass_witness(p: u32, lambda: &Weight) -> Result<Option<Witness>, RepError> {
    for (n, m) in admissible_tops(p) {
        if let Some(omega) = top_witness(n, m, lambda)? {
            return Ok(Some(Witness { n, m, omega }));
        }
    }
    Ok(None)
}

/// Some admissible top term of degree `p` is allowed for `V(λ)`.
pub fn pass1(p: u32, lambda: &Weight) -> Result<bool, RepError> {
    Ok(pass_witness(p, lambda)?.is_some())
}

/// Some `ξv` (degree `p + 1`) may be nonzero.
pub fn xi_pass(p: u32, lambda: &Weight) -> Result<bool, RepError> {
    pass1(p + 1, lambda)
}

/// Weights admitted by one pass in degree `p`: `None` means every weight.
fn pass_support(p: u32) -> Result<Option<BTreeSet<Weight>>, RepError> {
    let mut out = BTreeSet::new();
    for (n, m) in admissible_tops(p) {
        match top_condition(n, m) {
            TopCondition::None => return Ok(None),
            TopCondition::Impossible => {}
            TopCondition::AnyOmega => {
                for i in 0..=4 {
                    out.extend(table_cell(m as usize, i)?.support());
                }
            }
            TopCondition::OmegaOne => out.extend(table_cell(m as usize, 1)?.support()),
        }
    }
    Ok(Some(out))
}

fn reference_lists() -> &'static BTreeMap<u32, BTreeSet<Weight>> {
    static LISTS: OnceLock<BTreeMap<u32, BTreeSet<Weight>>> = OnceLock::new();
    LISTS.get_or_init(|| {
        let raw: BTreeMap<String, serde_json::Value> =
            serde_json::from_str(include_str!("../data/reference_candidates.json")).expect("embedded data");
        raw.into_iter()
            .filter_map(|(k, v)| {
                let p = k.parse().ok()?;
                let ws: Vec<Weight> = serde_json::from_value(v).ok()?;
                Some((p, ws.into_iter().collect()))
            })
            .collect()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateStatus {
    /// A finite candidate set.
    Bounded,
    /// Both passes are vacuous, so this argument gives no restriction.
    UnboundedByThisArgument,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateReport {
    pub degree: u32,
    pub status: CandidateStatus,
    /// Weights surviving the first pass; `None` when it admits every weight.
    pub pass1: Option<BTreeSet<Weight>>,
    /// Weights surviving both passes (empty when unbounded).
    pub candidates: BTreeSet<Weight>,
    /// Per candidate: first-pass witness (absent when vacuous) and ξ-pass witnesses.
    pub witnesses: BTreeMap<Weight, (Option<Witness>, Vec<Witness>)>,
    /// The published exceptional list for this degree, when there is one.
    pub stated: Option<BTreeSet<Weight>>,
    /// Computed candidates not in the published list.
    pub surplus: BTreeSet<Weight>,
    /// Published weights the computation excludes.
    pub missing: BTreeSet<Weight>,
}

impl CandidateReport {
    pub fn discrepancy(&self) -> bool {
        !self.surplus.is_empty() || !self.missing.is_empty()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct W {
            weight: Weight,
            pass1: Option<Witness>,
            xi_pass: Vec<Witness>,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            degree: u32,
            status: &'a CandidateStatus,
            pass1: &'a Option<BTreeSet<Weight>>,
            candidates: &'a BTreeSet<Weight>,
            witnesses: Vec<W>,
            stated: &'a Option<BTreeSet<Weight>>,
            discrepancy: bool,
            surplus: &'a BTreeSet<Weight>,
            missing: &'a BTreeSet<Weight>,
        }
        let out = Out {
            degree: self.degree,
            status: &self.status,
            pass1: &self.pass1,
            candidates: &self.candidates,
            witnesses: self
                .witnesses
                .iter()
                .map(|(w, (a, b))| W {
                    weight: *w,
                    pass1: *a,
                    xi_pass: b.clone(),
                })
                .collect(),
            stated: &self.stated,
            discrepancy: self.discrepancy(),
            surplus: &self.surplus,
            missing: &self.missing,
        };
        serde_json::to_string_pretty(&out).expect("serializable")
    }
}

/// Candidates with the standard single ξ-pass.
pub fn candidates(p: u32) -> Result<CandidateReport, RepError> {
    candidates_with_passes(p, 1)
}

/// Candidates after `xi_passes` successive ξ-passes (degrees `p + 1 … p + k`).
/// Only `xi_passes = 1` follows the published argument.
pub fn candidates_with_passes(p: u32, xi_passes: u32) -> Result<CandidateReport, RepError> {
    let first = pass_support(p)?;
    let mut pool: Option<BTreeSet<Weight>> = first.clone();
    for t in 1..=xi_passes {
        pool = match (pool, pass_support(p + t)?) {
            (None, s) => s,
            (Some(a), None) => Some(a),
            (Some(a), Some(b)) => Some(a.intersection(&b).copied().collect()),
        };
    }
    let stated = reference_lists().get(&p).cloned();
    let Some(pool) = pool else {
        return Ok(CandidateReport {
            degree: p,
            status: CandidateStatus::UnboundedByThisArgument,
            pass1: first,
            candidates: BTreeSet::new(),
            witnesses: BTreeMap::new(),
            stated,
            surplus: BTreeSet::new(),
            missing: BTreeSet::new(),
        });
    };
    let mut cands = BTreeSet::new();
    let mut witnesses = BTreeMap::new();
    for w in pool {
        let Some(a) = pass_witness(p, &w)? else { continue };
        let mut xs = Vec::new();
        for t in 1..=xi_passes {
            match pass_witness(p + t, &w)? {
                Some(x) => xs.push(x),
                None => break,
            }
        }
        if xs.len() == xi_passes as usize {
            cands.insert(w);
            witnesses.insert(w, ((first.is_some()).then_some(a), xs));
        }
    }
    let (surplus, missing) = match &stated {
        Some(s) => (cands.difference(s).copied().collect(), s.difference(&cands).copied().collect()),
        None => (BTreeSet::new(), BTreeSet::new()),
    };
    Ok(CandidateReport {
        degree: p,
        status: CandidateStatus::Bounded,
        pass1: first,
        candidates: cands,
        witnesses,
        stated,
        surplus,
        missing,
    })
}

/// Largest degree at which any singular vector can survive the argument.
/// Every degree from 15 on has no admissible top at all.
pub const DEGREE_CEILING: u32 = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// Maximum over all weights.
    pub global: u32,
    /// Weights whose bound exceeds 10, with that bound.
    pub exceptional: BTreeMap<Weight, u32>,
}

impl BoundReport {
    /// Bound for `V(λ)`: the largest `p ≥ 11` with `λ` a candidate, else 10.
    pub fn bound_for(&self, lambda: &Weight) -> u32 {
        self.exceptional.get(lambda).copied().unwrap_or(10)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct E {
            weight: Weight,
            bound: u32,
        }
        #[derive(Serialize)]
        struct Out {
            global: u32,
            default: u32,
            exceptional: Vec<E>,
        }
        let out = Out {
            global: self.global,
            default: 10,
            exceptional: self
                .exceptional
                .iter()
                .map(|(w, b)| E { weight: *w, bound: *b })
                .collect(),
        };
        serde_json::to_string_pretty(&out).expect("serializable")
    }
}

pub fn degree_bound_report() -> Result<BoundReport, RepError> {
    let mut exceptional = BTreeMap::new();
    for p in 11..=DEGREE_CEILING {
        let r = candidates(p)?;
        debug_assert_eq!(r.status, CandidateStatus::Bounded);
        for w in r.candidates {
            exceptional.insert(w, p);
        }
    }
    let global = exceptional.values().copied().max().unwrap_or(10).max(10);
    Ok(BoundReport { global, exceptional })
}

/// Markdown rendering of the cells `j = 9, 8, 7, 6` by rows `i = 0..4`.
pub fn table_markdown() -> Result<String, RepError> {
    let mut s = String::from("| | Λ⁹(s*)⊗V(ωᵢ) | Λ⁸(s*)⊗V(ωᵢ) | Λ⁷(s*)⊗V(ωᵢ) | Λ⁶(s*)⊗V(ωᵢ) |\n|---|---|---|---|---|\n");
    for i in 0..=4 {
        s.push_str(&format!("| i={i} |"));
        for j in (6..=9).rev() {
            let cell: Vec<String> = table_cell(j, i)?.support().iter().map(|w| w.to_string()).collect();
            s.push_str(&format!(" {} |", cell.join(", ")));
        }
        s.push('\n');
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_examples() {
        assert_eq!(admissible_tops(14), vec![(2, 10)]);
        assert!(admissible_tops(15).is_empty());
        assert_eq!(admissible_tops(10), vec![(0, 10), (1, 8), (2, 6)]);
    }

    #[test]
    fn top_condition_examples() {
        assert!(top_condition_holds(2, 10, &Weight([1, 0, 0, 0])).unwrap());
        assert!(!top_condition_holds(3, 4, &Weight([1, 0, 0, 0])).unwrap());
        assert!(top_condition_holds(2, 9, &Weight([0, 0, 1, 0])).unwrap());
        assert!(top_condition_holds(0, 7, &Weight([5, 5, 5, 5])).unwrap());
    }

    #[test]
    fn pass_examples() {
        assert!(pass1(13, &Weight([1, 1, 0, 0])).unwrap());
        assert!(!pass1(13, &Weight([1, 0, 0, 0])).unwrap());
        assert!(pass1(10, &Weight([7, 1, 0, 3])).unwrap());
        assert!(!xi_pass(14, &Weight([1, 0, 0, 0])).unwrap());
        assert!(xi_pass(12, &Weight([0, 0, 1, 0])).unwrap());
        assert!(!xi_pass(12, &Weight([0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn low_degrees_are_unbounded() {
        for p in 0..=9 {
            assert_eq!(candidates(p).unwrap().status, CandidateStatus::UnboundedByThisArgument);
        }
    }
}
