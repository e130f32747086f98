use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{RepError, Weight, N, RANK};

/// Formal character: finitely supported map from integral weights to
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Character {
    mults: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn new() -> Self {
        Character::default()
    }

    pub fn trivial() -> Self {
        let mut c = Character::new();
        c.add(Weight::ZERO, 1);
        c
    }

    /// Character of a module with the given weight multiset.
    pub fn from_weights(weights: impl IntoIterator<Item = Weight>) -> Self {
        let mut c = Character::new();
        for w in weights {
            c.add(w, 1);
        }
        c
    }

    pub fn add(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.mults.entry(w).or_insert(0) += m;
        }
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.mults.iter().map(|(w, &m)| (w, m))
    }

    pub fn support_len(&self) -> usize {
        self.mults.len()
    }

    /// Total dimension.
    pub fn mass(&self) -> u64 {
        self.mults.values().sum()
    }

    /// Character of the tensor product.
    pub fn product(&self, other: &Character) -> Character {
        let mut acc: HashMap<Weight, u64> = HashMap::new();
        for (a, ma) in &self.mults {
            for (b, mb) in &other.mults {
                *acc.entry(*a + *b).or_insert(0) += ma * mb;
            }
        }
        Character {
            mults: acc.into_iter().collect(),
        }
    }

    pub fn sum(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (w, m) in other.iter() {
            out.add(*w, m);
        }
        out
    }

    /// Character of the dual module.
    pub fn dual(&self) -> Character {
        Character {
            mults: self.mults.iter().map(|(w, &m)| (-*w, m)).collect(),
        }
    }

    /// Invariance under every simple reflection.
    pub fn is_weyl_symmetric(&self) -> bool {
        self.mults.iter().all(|(w, &m)| {
            (1..=RANK).all(|i| {
                let a = w.0[i - 1];
                let alpha = Weight::simple_root(i);
                let reflected = Weight(std::array::from_fn(|k| w.0[k] - a * alpha.0[k]));
                self.mult(&reflected) == m
            })
        })
    }

}

impl FromIterator<(Weight, u64)> for Character {
    fn from_iter<T: IntoIterator<Item = (Weight, u64)>>(iter: T) -> Self {
        let mut c = Character::new();
        for (w, m) in iter {
            c.add(w, m);
        }
        c
    }
}

/// Dimension of the irreducible module with highest weight `lambda`.
pub fn weyl_dim(lambda: &Weight) -> Result<u64, RepError> {
    if !lambda.is_dominant() {
        return Err(RepError::NotDominant(*lambda));
    }
    let e = lambda.to_eps();
    let shifted: Vec<i64> = (0..N).map(|i| e[i] as i64 + (N - 1 - i) as i64).collect();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..N {
        for j in i + 1..N {
            num *= shifted[i] - shifted[j];
            den *= (j - i) as i64;
        }
    }
    Ok((num / den).to_u64().expect("dimension overflows u64"))
}

/// Scaled inner product `N * (x, y)` on ε-coordinates, invariant under
/// constant shifts of either argument.
fn scaled_inner(x: &[i64; N], y: &[i64; N]) -> i64 {
    let dot: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let sx: i64 = x.iter().sum();
    let sy: i64 = y.iter().sum();
    N as i64 * dot - sx * sy
}

fn eps64(w: &Weight) -> [i64; N] {
    w.to_eps().map(|x| x as i64)
}

fn rho_eps() -> [i64; N] {
    std::array::from_fn(|i| (N - 1 - i) as i64)
}

fn add_eps(a: &[i64; N], b: &[i64; N]) -> [i64; N] {
    std::array::from_fn(|i| a[i] + b[i])
}

/// Dominant weights `mu <= lambda` in the dominance order, sorted by
/// increasing depth.
fn dominant_weights_below(lambda: &Weight) -> Vec<Weight> {
    // Root coordinates of lambda scaled by N: N * C^{-1} a, where for A_{N-1}
    // (C^{-1})_{ij} = min(i,j) (N - max(i,j)) / N.
    let root_coord_scaled: Vec<i64> = (1..=RANK)
        .map(|i| {
            (1..=RANK)
                .map(|j| lambda.0[j - 1] as i64 * (i.min(j) * (N - i.max(j))) as i64)
                .sum()
        })
        .collect();
    let bounds: Vec<i64> = root_coord_scaled.iter().map(|c| c / N as i64).collect();
    let roots: Vec<Weight> = (1..=RANK).map(Weight::simple_root).collect();
    let mut out = Vec::new();
    let mut c = vec![0i64; RANK];
    loop {
        let mut mu = *lambda;
        for (k, ck) in c.iter().enumerate() {
            for t in 0..RANK {
                mu.0[t] -= (*ck as i32) * roots[k].0[t];
            }
        }
        if mu.is_dominant() {
            out.push((c.iter().sum::<i64>(), mu));
        }
        // odometer
        let mut k = 0;
        loop {
            if k == RANK {
                out.sort();
                return out.into_iter().map(|(_, w)| w).collect();
            }
            if c[k] < bounds[k] {
                c[k] += 1;
                break;
            }
            c[k] = 0;
            k += 1;
        }
    }
}

/// Dominant weight multiplicities via Freudenthal's recursion.
fn dominant_multiplicities(lambda: &Weight) -> BTreeMap<Weight, u64> {
    let dominant = dominant_weights_below(lambda);
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    let rho = rho_eps();
    let lr = add_eps(&eps64(lambda), &rho);
    let top = scaled_inner(&lr, &lr);
    let pos_roots: Vec<[i64; N]> = (0..N)
        .flat_map(|i| {
            (i + 1..N).map(move |j| {
                let mut a = [0i64; N];
                a[i] = 1;
                a[j] = -1;
                a
            })
        })
        .collect();
    for mu in dominant {
        if mu == *lambda {
            mult.insert(mu, 1);
            continue;
        }
        let me = eps64(&mu);
        let mr = add_eps(&me, &rho);
        let denom = top - scaled_inner(&mr, &mr);
        let mut numer: i64 = 0;
        for alpha in &pos_roots {
            let mut k = 1i64;
            loop {
                let shifted: [i64; N] = std::array::from_fn(|t| me[t] + k * alpha[t]);
                let as_i32 = shifted.map(|x| x as i32);
                let rep = Weight::from_eps(&as_i32).dominant_rep();
                let m = mult.get(&rep).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                let ip = N as i64 * shifted.iter().zip(alpha).map(|(a, b)| a * b).sum::<i64>();
                numer += ip * m as i64;
                k += 1;
            }
        }
        assert!(denom > 0, "Freudenthal denominator vanished at {mu}");
        let m = 2 * numer / denom;
        assert_eq!(2 * numer % denom, 0, "non-integral multiplicity at {mu}");
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }
    mult.into_iter().collect()
}

/// All distinct permutations of an ε-vector, i.e. its Weyl orbit.
fn orbit(w: &Weight) -> Vec<Weight> {
    let mut e = w.to_eps();
    e.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(Weight::from_eps(&e));
        // next lexicographic permutation
        let Some(i) = (0..N - 1).rev().find(|&i| e[i] < e[i + 1]) else {
            break;
        };
        let j = (i + 1..N).rev().find(|&j| e[j] > e[i]).unwrap();
        e.swap(i, j);
        e[i + 1..].reverse();
    }
    out
}

type CharCache = RwLock<HashMap<Weight, Arc<Character>>>;

fn char_cache() -> &'static CharCache {
    static CACHE: OnceLock<CharCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Character of the irreducible module V(lambda). Results are memoized.
pub fn irr_character(lambda: &Weight) -> Result<Arc<Character>, RepError> {
    if !lambda.is_dominant() {
        return Err(RepError::NotDominant(*lambda));
    }
    if let Some(c) = char_cache().read().unwrap().get(lambda) {
        return Ok(c.clone());
    }
    let mut ch = Character::new();
    for (mu, m) in dominant_multiplicities(lambda) {
        for w in orbit(&mu) {
            ch.add(w, m);
        }
    }
    let ch = Arc::new(ch);
    char_cache()
        .write()
        .unwrap()
        .entry(*lambda)
        .or_insert_with(|| ch.clone());
    Ok(ch)
}
