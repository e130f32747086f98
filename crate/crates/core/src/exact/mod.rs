//! Exact rational arithmetic and sparse linear algebra.

mod elim;
mod rational;
mod sparse;

pub use elim::{nullspace, rank, Echelon};
pub use rational::{ParseRationalError, Rational};
pub use sparse::{SparseMatrix, SparseVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
}

/// Whether `v` lies in the rational span of `basis`.
pub fn in_span(v: &SparseVector, basis: &[SparseVector]) -> Result<bool, ExactError> {
    for b in basis {
        if b.dim() != v.dim() {
            return Err(ExactError::DimensionMismatch {
                expected: v.dim(),
                found: b.dim(),
            });
        }
    }
    if v.is_zero() {
        return Ok(true);
    }
    let mut e = Echelon::new(v.dim());
    for b in basis {
        e.insert(b);
    }
    Ok(e.contains(v))
}

/// Binomial coefficient as an exact integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> SparseVector {
        SparseVector::from_ints(xs)
    }

    #[test]
    fn nullspace_identity_is_trivial() {
        assert!(nullspace(&SparseMatrix::identity(3)).is_empty());
    }

    #[test]
    fn nullspace_of_zero_matrix_is_everything() {
        let k = nullspace(&SparseMatrix::zero(2, 3));
        assert_eq!(k, vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]);
    }

    #[test]
    fn nullspace_of_single_row() {
        let k = nullspace(&SparseMatrix::from_ints(&[vec![1, 1]]));
        assert_eq!(k, vec![v(&[-1, 1])]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SparseMatrix::identity(4)), 4);
        assert_eq!(rank(&SparseMatrix::zero(3, 5)), 0);
        assert_eq!(rank(&SparseMatrix::from_ints(&[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn in_span_examples() {
        assert!(in_span(&v(&[0, 0]), &[v(&[1, 3])]).unwrap());
        assert!(!in_span(&v(&[1, 0]), &[v(&[0, 1])]).unwrap());
        assert!(in_span(&v(&[2, 2]), &[v(&[1, 1])]).unwrap());
        assert!(in_span(&v(&[0, 0]), &[]).unwrap());
        assert!(matches!(
            in_span(&v(&[1, 0]), &[v(&[1, 0, 0])]),
            Err(ExactError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kernel_of_rational_matrix() {
        let m = SparseMatrix::from_rows(
            3,
            vec![SparseVector::from_dense(&[
                Rational::new(1, 2),
                Rational::new(1, 3),
                Rational::zero(),
            ])],
        )
        .unwrap();
        let k = nullspace(&m);
        assert_eq!(k.len(), 2);
        for b in &k {
            assert!(m.mul_vec(b).is_zero());
        }
        assert_eq!(k[0].get(0), Rational::new(-2, 3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), 120.into());
        assert_eq!(binomial(3, 5), 0.into());
        assert_eq!(binomial(0, 0), 1.into());
    }
}
