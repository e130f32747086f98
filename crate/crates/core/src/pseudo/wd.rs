//! `W(𝔡) = H ⊗ 𝔡` and its pseudobracket into `(H ⊗ H) ⊗_H W(𝔡)`.

use std::collections::BTreeMap;

use crate::exact::Rational;
use crate::superalgebra::{exponent_degree, Exponent, NVARS};

use super::{exp_add, exp_sub, multi_binomial, sub_exponents, HElement};

/// `Σ_c h_c ⊗ ∂_c`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WdElement {
    pub coeffs: [HElement; NVARS],
}

impl WdElement {
    pub fn zero() -> Self {
        WdElement::default()
    }

    /// `h ⊗ ∂_c`.
    pub fn basis(h: HElement, c: usize) -> Self {
        let mut w = WdElement::zero();
        w.coeffs[c] = h;
        w
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(HElement::is_zero)
    }

    pub fn add(&self, o: &WdElement) -> WdElement {
        WdElement {
            coeffs: std::array::from_fn(|c| self.coeffs[c].add(&o.coeffs[c])),
        }
    }

    pub fn scale(&self, x: &Rational) -> WdElement {
        WdElement {
            coeffs: std::array::from_fn(|c| self.coeffs[c].scale(x)),
        }
    }

    /// Left `H`-module structure.
    pub fn mul_left(&self, h: &HElement) -> WdElement {
        WdElement {
            coeffs: std::array::from_fn(|c| h.mul(&self.coeffs[c])),
        }
    }
}

/// `div(Σ h_c ⊗ ∂_c) = Σ h_c ∂_c`; its kernel is `S(𝔡)`.
pub fn div_pseudo(w: &WdElement) -> HElement {
    (0..NVARS).fold(HElement::zero(), |acc, c| acc.add(&w.coeffs[c].mul(&HElement::d(c))))
}

/// `s_ab = a ⊗ b − b ⊗ a` (the bracket term vanishes for abelian `𝔡`).
pub fn sab(a: usize, b: usize) -> WdElement {
    WdElement::basis(HElement::d(a), b).add(&WdElement::basis(HElement::d(b), a).scale(&Rational::from_int(-1)))
}

/// Element of `(H ⊗ H) ⊗_H W(𝔡)`, stored in the normal form
/// `Σ (∂^(I) ⊗ 1) ⊗_H (∂^(J) ⊗ ∂_c)`, reached by
/// `(f ⊗ g) ⊗_H e ↦ Σ (f S(g_(1)) ⊗ 1) ⊗_H g_(2) e`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PseudoTensor {
    terms: BTreeMap<(Exponent, Exponent, usize), Rational>,
}

impl PseudoTensor {
    pub fn zero() -> Self {
        PseudoTensor::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(I, J, c) ↦` coefficient of `(∂^(I) ⊗ 1) ⊗_H (∂^(J) ⊗ ∂_c)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(Exponent, Exponent, usize), &Rational)> {
        self.terms.iter()
    }

    fn add_normal(&mut self, key: (Exponent, Exponent, usize), x: &Rational) {
        if x.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += x;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Adds `x (∂^(I) ⊗ ∂^(J)) ⊗_H (1 ⊗ ∂_c)`.
    pub fn add_raw(&mut self, i: Exponent, j: Exponent, c: usize, x: &Rational) {
        for j1 in sub_exponents(&j) {
            let j2 = exp_sub(&j, &j1).expect("J1 ≤ J");
            let s = if exponent_degree(&j1) % 2 == 0 { 1 } else { -1 };
            let coef = &(x * &multi_binomial(&i, &j1)) * &Rational::from_int(s);
            self.add_normal((exp_add(&i, &j1), j2, c), &coef);
        }
    }

    /// `(f ⊗ g) ⊗_H (1 ⊗ ∂_c)`.
    pub fn from_pair(f: &HElement, g: &HElement, c: usize) -> Self {
        let mut t = PseudoTensor::zero();
        t.add_pair(f, g, c, &Rational::one());
        t
    }

    pub fn add_pair(&mut self, f: &HElement, g: &HElement, c: usize, x: &Rational) {
        for (i, a) in f.terms() {
            for (j, b) in g.terms() {
                self.add_raw(*i, *j, c, &(&(a * b) * x));
            }
        }
    }

    /// The same element as `Σ (∂^(I) ⊗ ∂^(J)) ⊗_H (1 ⊗ ∂_c)`.
    pub fn to_pairs(&self) -> BTreeMap<(Exponent, Exponent, usize), Rational> {
        let mut out: BTreeMap<_, Rational> = BTreeMap::new();
        for ((i, k, c), x) in self.terms() {
            for k1 in sub_exponents(k) {
                let k2 = exp_sub(k, &k1).expect("K1 ≤ K");
                *out.entry((exp_add(i, &k1), k2, *c)).or_default() += &(x * &multi_binomial(i, &k1));
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    fn from_pairs(pairs: BTreeMap<(Exponent, Exponent, usize), Rational>) -> Self {
        let mut t = PseudoTensor::zero();
        for ((i, j, c), x) in pairs {
            t.add_raw(i, j, c, &x);
        }
        t
    }

    pub fn add(&self, o: &PseudoTensor) -> PseudoTensor {
        let mut out = self.clone();
        for (k, x) in o.terms() {
            out.add_normal(*k, x);
        }
        out
    }

    pub fn scale(&self, x: &Rational) -> PseudoTensor {
        let mut out = PseudoTensor::zero();
        for (k, y) in self.terms() {
            out.add_normal(*k, &(x * y));
        }
        out
    }

    /// `(σ ⊗_H 1)`, swapping the two `H` factors.
    pub fn swap(&self) -> PseudoTensor {
        PseudoTensor::from_pairs(self.to_pairs().into_iter().map(|((i, j, c), x)| ((j, i, c), x)).collect())
    }

    /// `((f ⊗ g) ⊗_H 1) · t`.
    pub fn mul_left(&self, f: &HElement, g: &HElement) -> PseudoTensor {
        let mut out = PseudoTensor::zero();
        for ((i, j, c), x) in self.to_pairs() {
            let fi = f.mul(&HElement::divided(i));
            let gj = g.mul(&HElement::divided(j));
            out.add_pair(&fi, &gj, c, &x);
        }
        out
    }
}

/// `[(f ⊗ a) ∗ (g ⊗ b)] = −(f ⊗ g a) ⊗_H (1 ⊗ b) + (f b ⊗ g) ⊗_H (1 ⊗ a)`,
/// extended bilinearly.
pub fn wd_pseudobracket(u: &WdElement, v: &WdElement) -> PseudoTensor {
    let mut out = PseudoTensor::zero();
    let one = Rational::one();
    let minus = Rational::from_int(-1);
    for a in 0..NVARS {
        let f = &u.coeffs[a];
        if f.is_zero() {
            continue;
        }
        for b in 0..NVARS {
            let g = &v.coeffs[b];
            if g.is_zero() {
                continue;
            }
            out.add_pair(f, &g.mul(&HElement::d(a)), b, &minus);
            out.add_pair(&f.mul(&HElement::d(b)), g, a, &one);
        }
    }
    out
}
