//! Finite-dimensional representations of sl5.
//!
//! Weights are written in fundamental-weight coordinates `[a1, a2, a3, a4]`.
//! Internally characters also use ε-coordinates (`N` integers, one per
//! coordinate of the defining module), where the Weyl group acts by
//! permutations.

mod character;
mod decompose;
mod irrep;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use character::{irr_character, weyl_dim, Character};
pub use decompose::{
    contains, decompose_character, dual_weight, exterior_power_character,
    exterior_power_decompose, tensor_decompose, Decomposition,
};
pub use irrep::{build_irrep, build_irrep_with_budget, RepMatrices, DEFAULT_IRREP_BUDGET};

/// Size of the defining module.
pub const N: usize = 5;
/// Rank of sl_N.
pub const RANK: usize = N - 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("exterior power degree {k} out of range 0..={dim}")]
    DegreeOutOfRange { k: usize, dim: u64 },
    #[error("character is not a nonnegative combination of irreducibles (stuck at {0})")]
    NotACharacter(Weight),
    #[error("dimension {dim} exceeds budget {budget}")]
    BudgetExceeded { dim: u64, budget: u64 },
    #[error("internal consistency failure: built dimension {built}, expected {expected}")]
    DimensionMismatch { built: usize, expected: u64 },
    #[error("cannot parse weight {0:?}: expected four comma-separated integers")]
    Parse(String),
}

/// An integral sl5 weight in fundamental-weight coordinates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub [i32; RANK]);

impl Weight {
    pub const ZERO: Weight = Weight([0; RANK]);

    /// Fundamental weight ω_i for i in 1..=4; ω_0 is the zero weight.
    pub fn fundamental(i: usize) -> Weight {
        assert!(i <= RANK, "fundamental weight index {i} out of range");
        let mut a = [0; RANK];
        if i > 0 {
            a[i - 1] = 1;
        }
        Weight(a)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn coords(&self) -> [i32; RANK] {
        self.0
    }

    /// ε-coordinates normalized with last entry 0.
    pub fn to_eps(&self) -> [i32; N] {
        let mut e = [0; N];
        for k in (0..RANK).rev() {
            e[k] = e[k + 1] + self.0[k];
        }
        e
    }

    /// Inverse of [`Weight::to_eps`]; any constant shift of `e` gives the same weight.
    pub fn from_eps(e: &[i32; N]) -> Weight {
        let mut a = [0; RANK];
        for k in 0..RANK {
            a[k] = e[k] - e[k + 1];
        }
        Weight(a)
    }

    /// Weight of the ε-basis vector ε_i (0-based index).
    pub fn eps(i: usize) -> Weight {
        let mut e = [0; N];
        e[i] = 1;
        Weight::from_eps(&e)
    }

    /// Twice the height with respect to the simple roots (always an integer).
    pub fn twice_height(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &a)| {
                let i = (k + 1) as i64;
                a as i64 * i * (N as i64 - i)
            })
            .sum()
    }

    /// Simple root α_i (1-based) in fundamental coordinates: row i of the Cartan matrix.
    pub fn simple_root(i: usize) -> Weight {
        assert!((1..=RANK).contains(&i));
        let mut e = [0; N];
        e[i - 1] = 1;
        e[i] = -1;
        Weight::from_eps(&e)
    }

    /// Dominant representative of the Weyl orbit.
    pub fn dominant_rep(&self) -> Weight {
        let mut e = self.to_eps();
        e.sort_unstable_by(|a, b| b.cmp(a));
        Weight::from_eps(&e)
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        let mut a = self.0;
        for (x, y) in a.iter_mut().zip(o.0) {
            *x += y;
        }
        Weight(a)
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        let mut a = self.0;
        for (x, y) in a.iter_mut().zip(o.0) {
            *x -= y;
        }
        Weight(a)
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.map(|x| -x))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.0;
        write!(f, "[{},{},{},{}]", a[0], a[1], a[2], a[3])
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Weight {
    type Err = RepError;

    /// Parses `a,b,c,d`, optionally wrapped in brackets.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || RepError::Parse(s.to_string());
        let t = s.trim();
        let t = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .unwrap_or(t);
        let parts: Vec<&str> = t.split(',').map(str::trim).collect();
        if parts.len() != RANK {
            return Err(err());
        }
        let mut a = [0; RANK];
        for (slot, p) in a.iter_mut().zip(parts) {
            *slot = p.parse().map_err(|_| err())?;
        }
        Ok(Weight(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_weights() {
        assert_eq!("1,0,2,0".parse::<Weight>().unwrap(), Weight([1, 0, 2, 0]));
        assert_eq!(" [0, 0,1,0] ".parse::<Weight>().unwrap(), Weight([0, 0, 1, 0]));
        assert_eq!("-1,0,0,3".parse::<Weight>().unwrap(), Weight([-1, 0, 0, 3]));
        for bad in ["", "1,2,3", "1,2,3,4,5", "a,b,c,d", "1,,2,3", "[1,2,3,4"] {
            assert!(bad.parse::<Weight>().is_err(), "{bad}");
        }
    }

    #[test]
    fn eps_round_trip() {
        let w = Weight([2, -1, 0, 3]);
        assert_eq!(Weight::from_eps(&w.to_eps()), w);
        assert_eq!(Weight::eps(0), Weight([1, 0, 0, 0]));
        assert_eq!(Weight::eps(4), Weight([0, 0, 0, -1]));
    }

    #[test]
    fn simple_roots_are_cartan_rows() {
        assert_eq!(Weight::simple_root(1), Weight([2, -1, 0, 0]));
        assert_eq!(Weight::simple_root(3), Weight([0, -1, 2, -1]));
        assert_eq!(Weight::simple_root(2).twice_height(), 2);
    }

    #[test]
    fn dominant_representative() {
        assert_eq!(Weight([0, 0, 0, -1]).dominant_rep(), Weight([1, 0, 0, 0]));
        assert_eq!(Weight([1, -1, 1, 0]).dominant_rep(), Weight([0, 1, 0, 0]));
    }
}
