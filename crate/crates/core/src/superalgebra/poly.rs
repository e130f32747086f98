use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exact::Rational;

use super::NVARS;

/// Exponent vector of a monomial `x_1^a_1 … x_5^a_5`.
pub type Exponent = [u32; NVARS];

pub fn exponent_degree(e: &Exponent) -> u32 {
    e.iter().sum()
}

/// Polynomial in `x_1 … x_5` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug, PartialOrd, Ord)]
pub struct PolyCoeff {
    terms: BTreeMap<Exponent, Rational>,
}

impl PolyCoeff {
    pub fn zero() -> Self {
        PolyCoeff::default()
    }

    pub fn constant(c: Rational) -> Self {
        PolyCoeff::monomial([0; NVARS], c)
    }

    pub fn one() -> Self {
        PolyCoeff::constant(Rational::one())
    }

    pub fn monomial(e: Exponent, c: Rational) -> Self {
        let mut p = PolyCoeff::zero();
        p.add_term(e, &c);
        p
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        PolyCoeff::monomial(e, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Exponent, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &Rational) -> PolyCoeff {
        if c.is_zero() {
            return PolyCoeff::zero();
        }
        PolyCoeff {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> PolyCoeff {
        let mut out = PolyCoeff::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = *e;
                f[i] -= 1;
                out.add_term(f, &(c * &Rational::from_int(e[i] as i64)));
            }
        }
        out
    }

    /// Total degrees present, as (min, max); `None` for the zero polynomial.
    pub fn degree_range(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(exponent_degree);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|e| exponent_degree(e) == d)
    }

    /// Component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> PolyCoeff {
        PolyCoeff {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| exponent_degree(e) == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Constant term, i.e. the value at the origin.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&[0; NVARS])
    }
}

impl Add for &PolyCoeff {
    type Output = PolyCoeff;
    fn add(self, o: &PolyCoeff) -> PolyCoeff {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &PolyCoeff {
    type Output = PolyCoeff;
    fn sub(self, o: &PolyCoeff) -> PolyCoeff {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Neg for &PolyCoeff {
    type Output = PolyCoeff;
    fn neg(self) -> PolyCoeff {
        self.scale(&Rational::from_int(-1))
    }
}

impl Mul for &PolyCoeff {
    type Output = PolyCoeff;
    fn mul(self, o: &PolyCoeff) -> PolyCoeff {
        let mut out = PolyCoeff::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e = std::array::from_fn(|k| a[k] + b[k]);
                out.add_term(e, &(x * y));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_derivative() {
        let x1 = PolyCoeff::var(0);
        let x2 = PolyCoeff::var(1);
        let p = &(&x1 * &x1) * &x2;
        assert_eq!(p.derivative(0), (&x1 * &x2).scale(&Rational::from_int(2)));
        assert!(p.derivative(3).is_zero());
        assert_eq!(p.degree_range(), Some((3, 3)));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let x1 = PolyCoeff::var(0);
        let z = &x1 - &x1;
        assert!(z.is_zero());
        assert_eq!(z.degree_range(), None);
    }
}
