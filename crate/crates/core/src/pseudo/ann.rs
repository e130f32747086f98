//! The annihilation algebra `𝒲 = X ⊗_H W(𝔡) ≡ X ⊗ 𝔡`, its divergence, its
//! action on `X`, and the realization `φ` by polynomial vector fields.

use std::collections::BTreeMap;

use crate::exact::Rational;
use crate::superalgebra::{exponent_degree, EvenField, Exponent, PolyCoeff, NVARS};

use super::{HElement, PseudoError, PseudoTensor, WdElement, XElement};

/// `Σ x_I ⊗ ∂_c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AnnElement {
    terms: BTreeMap<(Exponent, usize), Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    W,
    S,
}

impl AlgebraKind {
    /// `l` in `[F_n 𝔏, F_p 𝔏] ⊆ F_{n+p−l} 𝔏`.
    pub fn shift(self) -> i32 {
        match self {
            AlgebraKind::W => 0,
            AlgebraKind::S => 1,
        }
    }
}

impl AnnElement {
    pub fn zero() -> Self {
        AnnElement::default()
    }

    /// `x_I ⊗ ∂_c`.
    pub fn basis(i: Exponent, c: usize) -> Self {
        AnnElement::from_x(&XElement::basis(i), c)
    }

    /// `x ⊗ ∂_c`.
    pub fn from_x(x: &XElement, c: usize) -> Self {
        let mut a = AnnElement::zero();
        for (i, v) in x.terms() {
            a.add_term(*i, c, v);
        }
        a
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Exponent, usize), &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, i: Exponent, c: usize, x: &Rational) {
        if x.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, c)).or_default();
        *slot += x;
        if slot.is_zero() {
            self.terms.remove(&(i, c));
        }
    }

    pub fn add(&self, o: &AnnElement) -> AnnElement {
        let mut out = self.clone();
        for ((i, c), x) in o.terms() {
            out.add_term(*i, *c, x);
        }
        out
    }

    pub fn sub(&self, o: &AnnElement) -> AnnElement {
        self.add(&o.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, x: &Rational) -> AnnElement {
        let mut out = AnnElement::zero();
        for ((i, c), y) in self.terms() {
            out.add_term(*i, *c, &(x * y));
        }
        out
    }

    /// The `X` coefficient of `∂_c`.
    pub fn component(&self, c: usize) -> XElement {
        let mut x = XElement::zero();
        for ((i, d), v) in self.terms() {
            if *d == c {
                x.add_term(*i, v);
            }
        }
        x
    }

    fn components(&self) -> [XElement; NVARS] {
        std::array::from_fn(|c| self.component(c))
    }

    /// `[x ⊗ a, y ⊗ b] = −x(ya) ⊗ b + (xb)y ⊗ a`.
    pub fn bracket(&self, o: &AnnElement) -> AnnElement {
        let (u, v) = (self.components(), o.components());
        let mut out = AnnElement::zero();
        for a in 0..NVARS {
            if u[a].is_zero() {
                continue;
            }
            for b in 0..NVARS {
                if v[b].is_zero() {
                    continue;
                }
                let first = u[a].mul(&v[b].right_d(a));
                out = out.sub(&AnnElement::from_x(&first, b));
                let second = u[a].right_d(b).mul(&v[b]);
                out = out.add(&AnnElement::from_x(&second, a));
            }
        }
        out
    }

    /// `div(Σ y_c ⊗ ∂_c) = Σ y_c ∂_c`.
    pub fn div(&self) -> XElement {
        (0..NVARS).fold(XElement::zero(), |acc, c| acc.add(&self.component(c).right_d(c)))
    }

    /// `(x ⊗ a) y = −x(ya)`.
    pub fn act_on_x(&self, y: &XElement) -> XElement {
        let mut out = XElement::zero();
        for (c, x) in self.components().iter().enumerate() {
            if !x.is_zero() {
                out = out.sub(&x.mul(&y.right_d(c)));
            }
        }
        out
    }

    /// Largest `p` with the element in `𝔏_p`: `𝒲_p = F_p X ⊗ 𝔡` and
    /// `𝒮_p = S̄ ∩ 𝒲_p`. `F_p X` is spanned by the `x_I` with `|I| > p`.
    pub fn filtration_degree(&self, kind: AlgebraKind) -> Result<i32, PseudoError> {
        if kind == AlgebraKind::S && !self.div().is_zero() {
            return Err(PseudoError::NotInS);
        }
        self.terms
            .keys()
            .map(|(i, _)| exponent_degree(i) as i32 - 1)
            .min()
            .ok_or(PseudoError::Zero)
    }
}

/// `ι(x ⊗_H Σ h_c ⊗ ∂_c) = Σ (x h_c) ⊗ ∂_c`.
pub fn iota(x: &XElement, a: &WdElement) -> AnnElement {
    (0..NVARS).fold(AnnElement::zero(), |acc, c| {
        acc.add(&AnnElement::from_x(&x.right(&a.coeffs[c]), c))
    })
}

/// `Σ (x f_i)(y g_i) ⊗_H l_i` for `t = Σ (f_i ⊗ g_i) ⊗_H l_i`, so that
/// `[x ⊗_H a, y ⊗_H b] = pair_with(x, y, [a ∗ b])`.
pub fn pair_with(x: &XElement, y: &XElement, t: &PseudoTensor) -> AnnElement {
    let mut out = AnnElement::zero();
    for ((i, j, c), v) in t.to_pairs() {
        let xf = x.right(&HElement::divided(i));
        let yg = y.right(&HElement::divided(j));
        out = out.add(&AnnElement::from_x(&xf.mul(&yg).scale(&v), c));
    }
    out
}

/// `φ(x_I ⊗ ∂_a) = −(−t)^I ∂/∂t_a`: a Lie homomorphism into `W(5)` with
/// `φ(x_0 ⊗ ∂_a) = −∂/∂t_a` and `φ(𝒲_p) ⊆ F_p W(5)`.
pub fn phi(a: &AnnElement) -> EvenField {
    let mut coeffs: [PolyCoeff; NVARS] = Default::default();
    for ((i, c), x) in a.terms() {
        let s = if exponent_degree(i) % 2 == 0 { -1 } else { 1 };
        coeffs[*c].add_term(*i, &(x * &Rational::from_int(s)));
    }
    EvenField::from_coeffs(coeffs)
}

/// Action of `x ⊗_H a` on the module `H` of the pseudoaction
/// `(f ⊗ ∂_c) ∗ g = −(f ⊗ g ∂_c) ⊗_H 1`, by
/// `(x ⊗_H a) v = Σ ⟨x, S(f_i g_i(−1))⟩ g_i(2) v_i`, `g(−1) = S(g(1))`.
pub fn conformal_action(x: &XElement, a: &WdElement, g: &HElement) -> HElement {
    let mut out = HElement::zero();
    for c in 0..NVARS {
        let f = &a.coeffs[c];
        if f.is_zero() {
            continue;
        }
        let gi = g.mul(&HElement::d(c));
        for (g1, g2) in gi.coproduct() {
            let w = x.pair(&f.mul(&g1.antipode()).antipode());
            out = out.sub(&g2.scale(&w));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_commute() {
        let a = AnnElement::basis([0; 5], 0);
        let b = AnnElement::basis([0; 5], 1);
        assert!(a.bracket(&b).is_zero());
    }

    #[test]
    fn translation_acts() {
        let a = AnnElement::basis([0; 5], 0);
        let y = XElement::basis([1, 0, 0, 0, 0]);
        assert_eq!(a.act_on_x(&y), XElement::basis([0; 5]));
        assert!(a.act_on_x(&XElement::basis([0; 5])).is_zero());
    }

    #[test]
    fn filtration() {
        assert_eq!(AnnElement::basis([0; 5], 2).filtration_degree(AlgebraKind::W), Ok(-1));
        assert_eq!(AnnElement::basis([1, 1, 0, 0, 0], 2).filtration_degree(AlgebraKind::S), Ok(1));
        assert_eq!(
            AnnElement::basis([1, 0, 0, 0, 0], 0).filtration_degree(AlgebraKind::S),
            Err(PseudoError::NotInS)
        );
        assert_eq!(AnnElement::zero().filtration_degree(AlgebraKind::W), Err(PseudoError::Zero));
    }

    #[test]
    fn phi_leading_term() {
        assert_eq!(phi(&AnnElement::basis([0; 5], 3)), EvenField::d(3).scale(&Rational::from_int(-1)));
    }

    #[test]
    fn conformal_translation() {
        let a = WdElement::basis(HElement::one(), 1);
        let r = conformal_action(&XElement::basis([0; 5]), &a, &HElement::one());
        assert_eq!(r, HElement::d(1).scale(&Rational::from_int(-1)));
    }
}
