use crate::exact::Rational;

use super::{complement0, permutation_sign, EvenField, GradedElement, OddForm, PolyCoeff, SuperError, NVARS};

/// Vector field bracket `[Σ f_i ∂_i, Σ g_j ∂_j] = Σ_j (D_1 g_j − D_2 f_j) ∂_j`.
pub fn bracket_even_even(d1: &EvenField, d2: &EvenField) -> EvenField {
    EvenField::from_coeffs(std::array::from_fn(|j| {
        &d1.apply(d2.coeff(j)) - &d2.apply(d1.coeff(j))
    }))
}

/// Lie derivative `L_D ω`, valid for any 2-form.
pub(crate) fn lie_derivative(d: &EvenField, w: &OddForm) -> OddForm {
    let mut out = OddForm::zero();
    for (&(h, k), f) in w.terms() {
        out.add_term(h, k, &d.apply(f));
        for m in 0..NVARS {
            let a = d.coeff(h).derivative(m);
            if !a.is_zero() {
                out.add_term(m, k, &(f * &a));
            }
            let b = d.coeff(k).derivative(m);
            if !b.is_zero() {
                out.add_term(h, m, &(f * &b));
            }
        }
    }
    out
}

/// `[D, ω] = L_D ω` for divergence-free `D` and closed `ω`.
pub fn bracket_even_odd(d: &EvenField, w: &OddForm) -> Result<OddForm, SuperError> {
    if !d.divergence().is_zero() {
        return Err(SuperError::NotDivergenceFree);
    }
    if !w.is_closed() {
        return Err(SuperError::NotClosed);
    }
    Ok(lie_derivative(d, w))
}

/// `d(ι_D ω)`, the Cartan-formula form of the Lie derivative on closed forms.
pub fn lie_derivative_cartan(d: &EvenField, w: &OddForm) -> OddForm {
    // ι_D(f dx_i ∧ dx_j) = f (D_i dx_j − D_j dx_i)
    let mut alpha: [PolyCoeff; NVARS] = Default::default();
    for (&(i, j), f) in w.terms() {
        alpha[j] = &alpha[j] + &(f * d.coeff(i));
        alpha[i] = &alpha[i] - &(f * d.coeff(j));
    }
    let mut out = OddForm::zero();
    for (m, a) in alpha.iter().enumerate() {
        for n in 0..NVARS {
            out.add_term(n, m, &a.derivative(n));
        }
    }
    out
}

/// Odd-odd bracket by the index formula `[ξ_ij, ξ_hk] = ε_(ijhk) ∂_(ijhk)`
/// extended bilinearly over polynomial coefficients.
pub(crate) fn odd_odd(w1: &OddForm, w2: &OddForm) -> EvenField {
    let mut coeffs: [PolyCoeff; NVARS] = Default::default();
    for (&(i, j), f) in w1.terms() {
        for (&(h, k), g) in w2.terms() {
            if let Some((l, s)) = complement0([i, j, h, k]) {
                coeffs[l] = &coeffs[l] + &(f * g).scale(&Rational::from_int(s as i64));
            }
        }
    }
    EvenField::from_coeffs(coeffs)
}

pub fn bracket_odd_odd(w1: &OddForm, w2: &OddForm) -> Result<EvenField, SuperError> {
    if !w1.is_closed() || !w2.is_closed() {
        return Err(SuperError::NotClosed);
    }
    Ok(odd_odd(w1, w2))
}

/// Odd-odd bracket through the volume form: the field `D` with
/// `ι_D(dx_1 ∧ … ∧ dx_5) = ω_1 ∧ ω_2`.
pub fn bracket_odd_odd_wedge(w1: &OddForm, w2: &OddForm) -> EvenField {
    // coefficient of dx_1..^l..dx_5 in ω_1 ∧ ω_2, by missing index l
    let mut four: [PolyCoeff; NVARS] = Default::default();
    for (&(i, j), f) in w1.terms() {
        for (&(h, k), g) in w2.terms() {
            let idx = [i, j, h, k];
            let mut seen = [false; NVARS];
            if idx.iter().any(|&x| std::mem::replace(&mut seen[x], true)) {
                continue;
            }
            let l = (0..NVARS).find(|&x| !seen[x]).unwrap();
            let s = permutation_sign(&idx);
            four[l] = &four[l] + &(f * g).scale(&Rational::from_int(s as i64));
        }
    }
    // ι_{∂_l} vol = (−1)^l dx_1..^l..dx_5 (0-based l)
    EvenField::from_coeffs(std::array::from_fn(|l| {
        if l % 2 == 0 {
            four[l].clone()
        } else {
            -&four[l]
        }
    }))
}

/// Super bracket of arbitrary elements, dispatching on parity components.
pub fn super_bracket(a: &GradedElement, b: &GradedElement) -> GradedElement {
    let even = bracket_even_even(&a.even, &b.even).add(&odd_odd(&a.odd, &b.odd));
    let odd = lie_derivative(&a.even, &b.odd).add(&lie_derivative(&b.even, &a.odd).scale(&Rational::from_int(-1)));
    GradedElement { even, odd }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::Gen;

    fn x(i: usize) -> [u32; 5] {
        let mut e = [0; 5];
        e[i] = 1;
        e
    }

    #[test]
    fn odd_odd_examples() {
        let r = bracket_odd_odd(&OddForm::xi(0, 1), &OddForm::xi(2, 3)).unwrap();
        assert_eq!(r, EvenField::d(4));
        assert!(bracket_odd_odd(&OddForm::xi(0, 1), &OddForm::xi(0, 2)).unwrap().is_zero());
        let w = OddForm::monomial(Rational::one(), x(0), 0, 1);
        let r = bracket_odd_odd(&w, &OddForm::xi(2, 3)).unwrap();
        assert_eq!(r, EvenField::x_d(0, 4));
        let bad = OddForm::monomial(Rational::one(), x(2), 0, 1);
        assert_eq!(bracket_odd_odd(&bad, &OddForm::xi(2, 3)), Err(SuperError::NotClosed));
    }

    #[test]
    fn even_odd_examples() {
        assert!(bracket_even_odd(&EvenField::d(4), &OddForm::xi(0, 1)).unwrap().is_zero());
        let r = bracket_even_odd(&EvenField::x_d(0, 1), &OddForm::xi(1, 2)).unwrap();
        assert_eq!(r, OddForm::xi(0, 2));
        assert!(bracket_even_odd(&EvenField::x_d(0, 1), &OddForm::xi(3, 4)).unwrap().is_zero());
    }

    #[test]
    fn even_even_examples() {
        assert!(bracket_even_even(&EvenField::d(0), &EvenField::d(1)).is_zero());
        let r = bracket_even_even(&EvenField::x_d(0, 1), &EvenField::x_d(1, 0));
        assert_eq!(r, EvenField::x_d(0, 0).sub(&EvenField::x_d(1, 1)));
        let r = bracket_even_even(&EvenField::x_d(0, 1), &EvenField::d(0));
        assert_eq!(r, EvenField::d(1).scale(&Rational::from_int(-1)));
    }

    #[test]
    fn super_bracket_examples() {
        let y = GradedElement::monomial(Rational::one(), x(0), Gen::Xi(0, 1));
        let r = super_bracket(&y, &GradedElement::xi(2, 3));
        assert_eq!(r, GradedElement::x_d(0, 4));
        let r = super_bracket(&GradedElement::d(0), &y);
        assert_eq!(r, GradedElement::xi(0, 1));
        let z = GradedElement::x_d(0, 1);
        assert!(super_bracket(&z, &z).is_zero());
    }

    #[test]
    fn cartan_formula_agrees_on_closed_forms() {
        let d = EvenField::x_d(0, 1);
        let w = OddForm::monomial(Rational::one(), x(0), 0, 1)
            .add(&OddForm::monomial(Rational::one(), x(2), 2, 3));
        assert!(w.is_closed());
        assert_eq!(lie_derivative(&d, &w), lie_derivative_cartan(&d, &w));
    }
}
