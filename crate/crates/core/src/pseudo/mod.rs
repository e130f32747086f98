//! The Hopf algebra `H = U(𝔡)` of an abelian `𝔡 = ⟨∂_1 … ∂_5⟩`, its dual `X`,
//! the pseudoalgebras `W(𝔡) ⊃ S(𝔡)` and their annihilation algebras.
//!
//! `H` is kept in the divided-power basis `∂^(I)`, `X` in the dual basis
//! `x_I`. Everything is finitely supported, so all operations are exact.

mod ann;
mod wd;

use std::collections::BTreeMap;

use crate::exact::{binomial, Rational};
use crate::superalgebra::{exponent_degree, Exponent, NVARS};

pub use ann::{conformal_action, iota, pair_with, phi, AlgebraKind, AnnElement};
pub use wd::{div_pseudo, sab, wd_pseudobracket, PseudoTensor, WdElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PseudoError {
    #[error("the zero element has no filtration degree")]
    Zero,
    #[error("element is not divergence free, so it is not in the S annihilation algebra")]
    NotInS,
}

pub(crate) fn unit(a: usize) -> Exponent {
    let mut e = [0; NVARS];
    e[a] = 1;
    e
}

pub(crate) fn exp_add(a: &Exponent, b: &Exponent) -> Exponent {
    std::array::from_fn(|i| a[i] + b[i])
}

pub(crate) fn exp_sub(a: &Exponent, b: &Exponent) -> Option<Exponent> {
    (0..NVARS).all(|i| b[i] <= a[i]).then(|| std::array::from_fn(|i| a[i] - b[i]))
}

/// `Π_i C(a_i + b_i, a_i)`.
pub(crate) fn multi_binomial(a: &Exponent, b: &Exponent) -> Rational {
    let mut acc = num_bigint::BigInt::from(1);
    for i in 0..NVARS {
        acc *= binomial((a[i] + b[i]) as u64, a[i] as u64);
    }
    Rational::from_bigint(acc)
}

/// All `J ≤ I` componentwise.
pub(crate) fn sub_exponents(i: &Exponent) -> Vec<Exponent> {
    let mut out = vec![[0; NVARS]];
    for a in 0..NVARS {
        out = out
            .into_iter()
            .flat_map(|e| {
                (0..=i[a]).map(move |k| {
                    let mut f = e;
                    f[a] = k;
                    f
                })
            })
            .collect();
    }
    out
}

fn sign(deg: u32) -> Rational {
    Rational::from_int(if deg % 2 == 0 { 1 } else { -1 })
}

fn add_into(map: &mut BTreeMap<Exponent, Rational>, e: Exponent, c: &Rational) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(e).or_default();
    *slot += c;
    if slot.is_zero() {
        map.remove(&e);
    }
}

/// Element of `H` in the divided-power basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HElement {
    terms: BTreeMap<Exponent, Rational>,
}

impl HElement {
    pub fn zero() -> Self {
        HElement::default()
    }

    pub fn one() -> Self {
        HElement::divided([0; NVARS])
    }

    /// `∂^(I)`.
    pub fn divided(i: Exponent) -> Self {
        HElement::term(i, Rational::one())
    }

    pub fn term(i: Exponent, c: Rational) -> Self {
        let mut h = HElement::zero();
        h.add_term(i, &c);
        h
    }

    /// `∂_a`, 0-based.
    pub fn d(a: usize) -> Self {
        HElement::divided(unit(a))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: &Exponent) -> Rational {
        self.terms.get(i).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, i: Exponent, c: &Rational) {
        add_into(&mut self.terms, i, c);
    }

    pub fn add(&self, o: &HElement) -> HElement {
        let mut out = self.clone();
        for (i, c) in o.terms() {
            out.add_term(*i, c);
        }
        out
    }

    pub fn sub(&self, o: &HElement) -> HElement {
        self.add(&o.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> HElement {
        let mut out = HElement::zero();
        for (i, x) in self.terms() {
            out.add_term(*i, &(x * c));
        }
        out
    }

    /// `∂^(I) ∂^(J) = C(I+J, I) ∂^(I+J)`.
    pub fn mul(&self, o: &HElement) -> HElement {
        let mut out = HElement::zero();
        for (i, a) in self.terms() {
            for (j, b) in o.terms() {
                out.add_term(exp_add(i, j), &(&(a * b) * &multi_binomial(i, j)));
            }
        }
        out
    }

    /// `Δ(∂^(I)) = Σ_{J+K=I} ∂^(J) ⊗ ∂^(K)`, as monomial pairs.
    pub fn coproduct(&self) -> Vec<(HElement, HElement)> {
        let mut out = Vec::new();
        for (i, c) in self.terms() {
            for j in sub_exponents(i) {
                let k = exp_sub(i, &j).expect("J ≤ I");
                out.push((HElement::term(j, c.clone()), HElement::divided(k)));
            }
        }
        out
    }

    /// `S(∂^(I)) = (−1)^|I| ∂^(I)`.
    pub fn antipode(&self) -> HElement {
        let mut out = HElement::zero();
        for (i, c) in self.terms() {
            out.add_term(*i, &(c * &sign(exponent_degree(i))));
        }
        out
    }

    pub fn counit(&self) -> Rational {
        self.coeff(&[0; NVARS])
    }

    /// Largest `|I|` in the support.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(exponent_degree).max()
    }
}

/// Which side `H` acts on `X` from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `⟨hx, f⟩ = ⟨x, S(h) f⟩`.
    Left,
    /// `⟨xh, f⟩ = ⟨x, f S(h)⟩`.
    Right,
}

/// Finitely supported element of `X = H*` in the basis dual to `∂^(I)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XElement {
    terms: BTreeMap<Exponent, Rational>,
}

impl XElement {
    pub fn zero() -> Self {
        XElement::default()
    }

    /// `x_I`.
    pub fn basis(i: Exponent) -> Self {
        XElement::term(i, Rational::one())
    }

    pub fn term(i: Exponent, c: Rational) -> Self {
        let mut x = XElement::zero();
        x.add_term(i, &c);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: &Exponent) -> Rational {
        self.terms.get(i).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, i: Exponent, c: &Rational) {
        add_into(&mut self.terms, i, c);
    }

    pub fn add(&self, o: &XElement) -> XElement {
        let mut out = self.clone();
        for (i, c) in o.terms() {
            out.add_term(*i, c);
        }
        out
    }

    pub fn sub(&self, o: &XElement) -> XElement {
        self.add(&o.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> XElement {
        let mut out = XElement::zero();
        for (i, x) in self.terms() {
            out.add_term(*i, &(x * c));
        }
        out
    }

    /// `x_I x_J = x_{I+J}`, dual to the coproduct.
    pub fn mul(&self, o: &XElement) -> XElement {
        let mut out = XElement::zero();
        for (i, a) in self.terms() {
            for (j, b) in o.terms() {
                out.add_term(exp_add(i, j), &(a * b));
            }
        }
        out
    }

    /// `⟨x, h⟩`.
    pub fn pair(&self, h: &HElement) -> Rational {
        self.terms().map(|(i, c)| c * &h.coeff(i)).sum()
    }

    /// Smallest `|I|` in the support; `x ∈ F_p X` iff this is at least `p + 1`.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(exponent_degree).min()
    }

    /// `x ∂_a`; on the basis `x_I ∂_a = −I_a x_{I−e_a}`.
    pub fn right_d(&self, a: usize) -> XElement {
        self.right(&HElement::d(a))
    }

    /// Right action `xh`.
    pub fn right(&self, h: &HElement) -> XElement {
        h_action(h, self, Side::Right)
    }
}

/// `hx` or `xh`. Since `H` is commutative the two sides agree:
/// `∂^(J) x_I = (−1)^|J| C(I, J) x_{I−J}`.
pub fn h_action(h: &HElement, x: &XElement, _side: Side) -> XElement {
    let mut out = XElement::zero();
    for (j, a) in h.terms() {
        let s = sign(exponent_degree(j));
        for (i, b) in x.terms() {
            if let Some(k) = exp_sub(i, j) {
                out.add_term(k, &(&(a * b) * &(&s * &multi_binomial(&k, j))));
            }
        }
    }
    out
}
