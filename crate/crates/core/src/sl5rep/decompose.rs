use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{irr_character, weyl_dim, Character, RepError, Weight};

/// Multiset of dominant highest weights, sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    parts: BTreeMap<Weight, u64>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    weight: Weight,
    mult: u64,
}

impl Decomposition {
    pub fn new() -> Self {
        Decomposition::default()
    }

    pub fn single(w: Weight) -> Self {
        let mut d = Decomposition::new();
        d.add(w, 1);
        d
    }

    pub fn add(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.parts.entry(w).or_insert(0) += m;
        }
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.parts.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.parts.iter().map(|(w, &m)| (w, m))
    }

    pub fn support(&self) -> Vec<Weight> {
        self.parts.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Σ mult · dim V(λ).
    pub fn total_dim(&self) -> u64 {
        self.parts
            .iter()
            .map(|(w, m)| m * weyl_dim(w).expect("decompositions hold dominant weights"))
            .sum()
    }

    /// Σ mult · ch V(λ).
    pub fn character(&self) -> Character {
        let mut out = Character::new();
        for (w, m) in self.iter() {
            let ch = irr_character(w).expect("decompositions hold dominant weights");
            for (mu, k) in ch.iter() {
                out.add(*mu, k * m);
            }
        }
        out
    }

    pub fn dual(&self) -> Decomposition {
        let mut d = Decomposition::new();
        for (w, m) in self.iter() {
            d.add(dual_weight(w), m);
        }
        d
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = self
            .iter()
            .map(|(w, m)| Entry {
                weight: *w,
                mult: m,
            })
            .collect();
        entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let entries = Vec::<Entry>::deserialize(d)?;
        let mut out = Decomposition::new();
        for e in entries {
            if !e.weight.is_dominant() {
                return Err(D::Error::custom(format!("weight {} is not dominant", e.weight)));
            }
            if e.mult == 0 {
                return Err(D::Error::custom("multiplicities must be positive"));
            }
            if out.parts.contains_key(&e.weight) {
                return Err(D::Error::custom(format!("duplicate weight {}", e.weight)));
            }
            out.add(e.weight, e.mult);
        }
        Ok(out)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .iter()
            .map(|(w, m)| if m == 1 { format!("{w}") } else { format!("{m}*{w}") })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<(Weight, u64)> for Decomposition {
    fn from_iter<T: IntoIterator<Item = (Weight, u64)>>(iter: T) -> Self {
        let mut d = Decomposition::new();
        for (w, m) in iter {
            d.add(w, m);
        }
        d
    }
}

/// Splits a character into irreducibles by repeatedly removing the
/// character of its highest remaining weight (maximal height, ties broken by
/// the lexicographically largest weight).
pub fn decompose_character(c: &Character) -> Result<Decomposition, RepError> {
    let mut rest: HashMap<Weight, i64> = c.iter().map(|(w, m)| (*w, m as i64)).collect();
    let mut out = Decomposition::new();
    while !rest.is_empty() {
        let top = *rest
            .keys()
            .max_by_key(|w| (w.twice_height(), **w))
            .expect("nonempty");
        let m = rest[&top];
        if m < 0 || !top.is_dominant() {
            return Err(RepError::NotACharacter(top));
        }
        let ch = irr_character(&top)?;
        for (w, k) in ch.iter() {
            let slot = rest.entry(*w).or_insert(0);
            *slot -= m * k as i64;
            if *slot == 0 {
                rest.remove(w);
            }
        }
        out.add(top, m as u64);
    }
    Ok(out)
}

pub fn tensor_decompose(lambda: &Weight, mu: &Weight) -> Result<Decomposition, RepError> {
    let a = irr_character(lambda)?;
    let b = irr_character(mu)?;
    decompose_character(&a.product(&b))
}

/// Character of Λ^k V(λ): the degree-k elementary symmetric layer of the
/// weight multiset.
pub fn exterior_power_character(lambda: &Weight, k: usize) -> Result<Character, RepError> {
    let dim = weyl_dim(lambda)?;
    if k as u64 > dim {
        return Err(RepError::DegreeOutOfRange { k, dim });
    }
    let ch = irr_character(lambda)?;
    // layers[j] = character of Λ^j of the weights processed so far
    let mut layers: Vec<HashMap<Weight, u64>> = vec![HashMap::new(); k + 1];
    layers[0].insert(Weight::ZERO, 1);
    let mut processed = 0usize;
    for (w, m) in ch.iter() {
        for _ in 0..m {
            processed += 1;
            let hi = processed.min(k);
            for j in (1..=hi).rev() {
                let (lo, up) = layers.split_at_mut(j);
                for (mu, c) in &lo[j - 1] {
                    *up[0].entry(*mu + *w).or_insert(0) += c;
                }
            }
        }
    }
    Ok(layers.pop().unwrap().into_iter().collect())
}

pub fn exterior_power_decompose(lambda: &Weight, k: usize) -> Result<Decomposition, RepError> {
    decompose_character(&exterior_power_character(lambda, k)?)
}

/// Whether V(λ) occurs in `d`.
pub fn contains(d: &Decomposition, lambda: &Weight) -> bool {
    d.mult(lambda) > 0
}

/// Highest weight of the dual module: coordinate reversal.
pub fn dual_weight(lambda: &Weight) -> Weight {
    let mut a = lambda.0;
    a.reverse();
    Weight(a)
}
