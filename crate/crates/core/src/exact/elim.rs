//! Fraction-free row reduction.
//!
//! Rows are cleared of denominators on entry and kept primitive (content 1,
//! positive leading entry) after every combination, so elimination runs over
//! the integers and intermediate growth stays bounded by the true minors.
//! Pivots are always the leftmost nonzero column of a row, which makes the
//! echelon form (and therefore every kernel basis) independent of row order
//! up to the final reduced form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, SparseMatrix, SparseVector};

/// Sparse integer row, sorted by column, no zero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntRow(Vec<(usize, BigInt)>);

impl IntRow {
    /// Scales a rational vector to a primitive integer row. The scale factor
    /// is discarded since only the row space matters.
    pub(crate) fn from_vector(v: &SparseVector) -> IntRow {
        let mut lcm = BigInt::one();
        for (_, x) in v.iter() {
            lcm = lcm.lcm(x.denom());
        }
        let entries = v
            .iter()
            .map(|(i, x)| (i, x.numer() * (&lcm / x.denom())))
            .collect();
        let mut row = IntRow(entries);
        row.make_primitive();
        row
    }

    fn lead(&self) -> Option<(usize, &BigInt)> {
        self.0.first().map(|(c, x)| (*c, x))
    }

    fn get(&self, col: usize) -> Option<&BigInt> {
        self.0
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|k| &self.0[k].1)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn make_primitive(&mut self) {
        let mut g = BigInt::zero();
        for (_, x) in &self.0 {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        if let Some((_, lead)) = self.0.first() {
            if lead.is_negative() {
                g = -g;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for (_, x) in &mut self.0 {
                *x = &*x / &g;
            }
        }
    }

    /// Returns primitive `a * self - b * other`.
    fn combine(&self, a: &BigInt, other: &IntRow, b: &BigInt) -> IntRow {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let ci = self.0.get(i).map_or(usize::MAX, |e| e.0);
            let cj = other.0.get(j).map_or(usize::MAX, |e| e.0);
            if ci < cj {
                out.push((ci, a * &self.0[i].1));
                i += 1;
            } else if cj < ci {
                out.push((cj, -(b * &other.0[j].1)));
                j += 1;
            } else {
                let x = a * &self.0[i].1 - b * &other.0[j].1;
                if !x.is_zero() {
                    out.push((ci, x));
                }
                i += 1;
                j += 1;
            }
        }
        let mut row = IntRow(out);
        row.make_primitive();
        row
    }

    /// Eliminates the entry at `col` using `pivot`, whose leading column is `col`.
    fn eliminate(&self, pivot: &IntRow, col: usize) -> IntRow {
        let x = match self.get(col) {
            Some(x) => x.clone(),
            None => return self.clone(),
        };
        let p = pivot.lead().expect("empty pivot").1.clone();
        let g = p.gcd(&x);
        self.combine(&(&p / &g), pivot, &(&x / &g))
    }
}

/// Incrementally maintained row echelon form over the integers.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    fn reduce_row(&self, mut row: IntRow) -> IntRow {
        while let Some((c, _)) = row.lead() {
            match self.pivots.get(&c) {
                Some(p) => row = row.eliminate(p, c),
                None => break,
            }
        }
        row
    }

    /// Adds a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, v: &SparseVector) -> bool {
        assert_eq!(v.dim(), self.ncols, "dimension mismatch");
        let row = self.reduce_row(IntRow::from_vector(v));
        match row.lead() {
            Some((c, _)) => {
                self.pivots.insert(c, row);
                true
            }
            None => false,
        }
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &SparseVector) -> bool {
        assert_eq!(v.dim(), self.ncols, "dimension mismatch");
        self.reduce_row(IntRow::from_vector(v)).is_zero()
    }

    /// Reduced row echelon form: every pivot column is zero outside its pivot row.
    fn reduced(&self) -> Vec<(usize, IntRow)> {
        let mut rows: Vec<(usize, IntRow)> =
            self.pivots.iter().map(|(&c, r)| (c, r.clone())).collect();
        for k in (0..rows.len()).rev() {
            let (ck, pk) = rows[k].clone();
            for (_, r) in rows.iter_mut().take(k) {
                if r.get(ck).is_some() {
                    *r = r.eliminate(&pk, ck);
                }
            }
        }
        rows
    }

    /// Rows of the reduced echelon form, scaled so each pivot is 1.
    pub fn rref_rows(&self) -> Vec<SparseVector> {
        self.reduced()
            .into_iter()
            .map(|(_, r)| {
                let lead = Rational::from_bigint(r.lead().unwrap().1.clone());
                let mut v = SparseVector::zero(self.ncols);
                for (c, x) in &r.0 {
                    v.set(*c, Rational::from_bigint(x.clone()) / &lead);
                }
                v
            })
            .collect()
    }

    /// Kernel basis of the matrix whose rows were inserted: one vector per
    /// free column `f`, with a 1 at `f` and zeros at the other free columns.
    pub fn kernel(&self) -> Vec<SparseVector> {
        let rows = self.reduced();
        let mut kernel = Vec::new();
        for f in (0..self.ncols).filter(|c| !self.pivots.contains_key(c)) {
            let mut v = SparseVector::zero(self.ncols);
            v.set(f, Rational::one());
            for (c, r) in &rows {
                if let Some(x) = r.get(f) {
                    let p = r.lead().unwrap().1;
                    v.set(*c, -Rational::new(x.clone(), p.clone()));
                }
            }
            kernel.push(v);
        }
        kernel
    }
}

pub fn nullspace(m: &SparseMatrix) -> Vec<SparseVector> {
    let mut e = Echelon::new(m.ncols());
    for r in m.rows() {
        e.insert(r);
    }
    e.kernel()
}

pub fn rank(m: &SparseMatrix) -> usize {
    let mut e = Echelon::new(m.ncols());
    for r in m.rows() {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_rows() {
        let v = SparseVector::from_dense(&[
            Rational::new(-2, 3),
            Rational::zero(),
            Rational::new(4, 9),
        ]);
        let r = IntRow::from_vector(&v);
        assert_eq!(r.0, vec![(0, BigInt::from(3)), (2, BigInt::from(-2))]);
    }

    #[test]
    fn combine_never_stores_zero() {
        let a = IntRow(vec![(0, BigInt::from(2)), (1, BigInt::from(4))]);
        let b = IntRow(vec![(0, BigInt::from(1)), (1, BigInt::from(2)), (3, BigInt::from(1))]);
        let c = a.eliminate(&b, 0);
        assert!(c.0.iter().all(|(_, x)| !x.is_zero()));
        assert_eq!(c.0, vec![(3, BigInt::from(1))]);
    }
}
