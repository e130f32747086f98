use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{ExactError, Rational};

/// Sparse rational vector of fixed dimension. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SparseVector {
    dim: usize,
    entries: BTreeMap<usize, Rational>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        let mut v = SparseVector::zero(values.len());
        for (i, x) in values.iter().enumerate() {
            v.set(i, x.clone());
        }
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        let dense: Vec<Rational> = values.iter().map(|&x| Rational::from_int(x)).collect();
        SparseVector::from_dense(&dense)
    }

    /// Builds from `(index, value)` pairs, summing repeated indices.
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, Rational)>,
    ) -> Result<Self, ExactError> {
        let mut v = SparseVector::zero(dim);
        for (i, x) in entries {
            if i >= dim {
                return Err(ExactError::IndexOutOfRange { index: i, dim });
            }
            v.add_at(i, &x);
        }
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Rational {
        self.entries.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, x: Rational) {
        assert!(i < self.dim, "index {i} out of range for dimension {}", self.dim);
        if x.is_zero() {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, x);
        }
    }

    pub fn add_at(&mut self, i: usize, x: &Rational) {
        assert!(i < self.dim, "index {i} out of range for dimension {}", self.dim);
        if x.is_zero() {
            return;
        }
        let slot = self.entries.entry(i).or_insert_with(Rational::zero);
        *slot += x;
        if slot.is_zero() {
            self.entries.remove(&i);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(&i, x)| (i, x))
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, x) in self.iter() {
            out[i] = x.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SparseVector {
        if c.is_zero() {
            return SparseVector::zero(self.dim);
        }
        SparseVector {
            dim: self.dim,
            entries: self.entries.iter().map(|(&i, x)| (i, x * c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Rational, other: &SparseVector) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for (i, x) in other.iter() {
            self.add_at(i, &(c * x));
        }
    }

    pub fn dot(&self, other: &SparseVector) -> Rational {
        let (small, large) = if self.nnz() <= other.nnz() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .iter()
            .filter_map(|(i, x)| large.entries.get(&i).map(|y| x * y))
            .sum()
    }
}

/// Row-major sparse rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<SparseVector>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            ncols,
            rows: (0..nrows).map(|_| SparseVector::zero(ncols)).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVector>) -> Result<Self, ExactError> {
        for r in &rows {
            if r.dim() != ncols {
                return Err(ExactError::DimensionMismatch {
                    expected: ncols,
                    found: r.dim(),
                });
            }
        }
        Ok(SparseMatrix { ncols, rows })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged integer matrix");
                SparseVector::from_ints(r)
            })
            .collect();
        SparseMatrix { ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &SparseVector {
        &self.rows[i]
    }

    pub fn push_row(&mut self, row: SparseVector) {
        assert_eq!(row.dim(), self.ncols, "row dimension mismatch");
        self.rows.push(row);
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.rows[i].set(j, x);
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &Rational) {
        self.rows[i].add_at(j, x);
    }

    pub fn mul_vec(&self, v: &SparseVector) -> SparseVector {
        assert_eq!(v.dim(), self.ncols, "dimension mismatch");
        let mut out = SparseVector::zero(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            out.set(i, r.dot(v));
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows(), "dimension mismatch");
        let mut out = SparseMatrix::zero(self.nrows(), other.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            let acc = &mut out.rows[i];
            for (k, a) in r.iter() {
                acc.axpy(a, &other.rows[k]);
            }
        }
        out
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.lin_comb(&Rational::one(), other, &Rational::one())
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.lin_comb(&Rational::one(), other, &Rational::from_int(-1))
    }

    /// `a * self + b * other`.
    pub fn lin_comb(&self, a: &Rational, other: &SparseMatrix, b: &Rational) -> SparseMatrix {
        assert_eq!(self.nrows(), other.nrows());
        assert_eq!(self.ncols, other.ncols);
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(x, y)| {
                let mut r = x.scale(a);
                r.axpy(b, y);
                r
            })
            .collect();
        SparseMatrix {
            ncols: self.ncols,
            rows,
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        SparseMatrix {
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_zero())
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.nnz()).sum()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.ncols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.iter() {
                out.rows[j].set(i, x.clone());
            }
        }
        out
    }
}
