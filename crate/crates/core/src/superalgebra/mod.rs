//! The Lie superalgebra E(5,10).
//!
//! The even part is realized as divergence-free polynomial vector fields
//! `Σ f_i ∂_i` in `x_1 … x_5`, the odd part as closed polynomial 2-forms
//! `Σ f_ij ξ_ij` with `ξ_ij = dx_i ∧ dx_j`. The ℤ-grading has
//! `deg x_i = 2`, `deg ∂_i = −2`, `deg ξ_ij = −1`.
//!
//! Indices are 0-based in the API and 1-based in the text format
//! (`x1*d2`, `x1^2*xi45`).

mod bracket;
mod components;
mod poly;
mod text;

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::Rational;
use crate::sl5rep::Weight;

pub use bracket::{
    bracket_even_even, bracket_even_odd, bracket_odd_odd, bracket_odd_odd_wedge, lie_derivative_cartan,
    super_bracket,
};
pub(crate) use components::exponents_of_degree;
pub use components::{component_basis, l0_basis, l1_spanning, l2_spanning, lminus1_basis, lminus2_basis};
pub use poly::{exponent_degree, Exponent, PolyCoeff};
pub use text::ParseElementError;

/// Number of variables.
pub const NVARS: usize = 5;

/// The ten index pairs `(i, j)`, `i < j`, in lexicographic order.
pub const PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

/// Position of the pair `(i, j)`, `i < j`, in [`PAIRS`].
pub fn pair_index(i: usize, j: usize) -> usize {
    assert!(i < j && j < NVARS, "bad pair ({i},{j})");
    PAIRS.iter().position(|&p| p == (i, j)).unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuperError {
    #[error("index {0} out of range 1..=5")]
    IndexOutOfRange(usize),
    #[error("2-form is not closed")]
    NotClosed,
    #[error("vector field has nonzero divergence")]
    NotDivergenceFree,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("element is zero")]
    Zero,
    #[error("element does not lie in L_0")]
    NotInL0,
}

/// Complementary index and sign attached to four indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedIndex {
    /// Missing fifth index (1-based), or 0 on repetition.
    pub index: usize,
    pub sign: i32,
}

/// For 1-based indices `i, j, h, k`, the missing index `l` together with
/// the sign of the permutation `(i j h k l)`; `(0, 0)` on repetition.
pub fn complement_index(i: usize, j: usize, h: usize, k: usize) -> Result<SignedIndex, SuperError> {
    let q = [i, j, h, k];
    for &x in &q {
        if !(1..=NVARS).contains(&x) {
            return Err(SuperError::IndexOutOfRange(x));
        }
    }
    Ok(match complement0(q.map(|x| x - 1)) {
        Some((l, s)) => SignedIndex { index: l + 1, sign: s },
        None => SignedIndex { index: 0, sign: 0 },
    })
}

/// 0-based version of [`complement_index`].
pub(crate) fn complement0(q: [usize; 4]) -> Option<(usize, i32)> {
    let mut seen = [false; NVARS];
    for &x in &q {
        if seen[x] {
            return None;
        }
        seen[x] = true;
    }
    let l = (0..NVARS).find(|&x| !seen[x]).unwrap();
    let perm = [q[0], q[1], q[2], q[3], l];
    Some((l, permutation_sign(&perm)))
}

pub(crate) fn permutation_sign(p: &[usize]) -> i32 {
    let mut inversions = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Polynomial vector field `Σ f_i ∂_i`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct EvenField {
    coeffs: [PolyCoeff; NVARS],
}

impl EvenField {
    pub fn zero() -> Self {
        EvenField::default()
    }

    pub fn from_coeffs(coeffs: [PolyCoeff; NVARS]) -> Self {
        EvenField { coeffs }
    }

    /// `c · x^e ∂_i`.
    pub fn monomial(c: Rational, e: Exponent, i: usize) -> Self {
        let mut f = EvenField::zero();
        f.coeffs[i] = PolyCoeff::monomial(e, c);
        f
    }

    /// Constant field `∂_i`.
    pub fn d(i: usize) -> Self {
        EvenField::monomial(Rational::one(), [0; NVARS], i)
    }

    /// Linear field `x_i ∂_j`.
    pub fn x_d(i: usize, j: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        EvenField::monomial(Rational::one(), e, j)
    }

    pub fn coeff(&self, i: usize) -> &PolyCoeff {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[PolyCoeff; NVARS] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(PolyCoeff::is_zero)
    }

    pub fn divergence(&self) -> PolyCoeff {
        let mut out = PolyCoeff::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            out = &out + &c.derivative(i);
        }
        out
    }

    /// The derivation `D(f) = Σ f_i ∂_i f`.
    pub fn apply(&self, f: &PolyCoeff) -> PolyCoeff {
        let mut out = PolyCoeff::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &(c * &f.derivative(i));
            }
        }
        out
    }

    pub fn add(&self, o: &EvenField) -> EvenField {
        EvenField {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &o.coeffs[i]),
        }
    }

    pub fn sub(&self, o: &EvenField) -> EvenField {
        EvenField {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &o.coeffs[i]),
        }
    }

    pub fn scale(&self, c: &Rational) -> EvenField {
        EvenField {
            coeffs: std::array::from_fn(|i| self.coeffs[i].scale(c)),
        }
    }
}

/// Polynomial 2-form `Σ_{i<j} f_ij ξ_ij`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct OddForm {
    coeffs: BTreeMap<(usize, usize), PolyCoeff>,
}

impl OddForm {
    pub fn zero() -> Self {
        OddForm::default()
    }

    /// `c · x^e ξ_ij`, using `ξ_ji = −ξ_ij` and `ξ_ii = 0`.
    pub fn monomial(c: Rational, e: Exponent, i: usize, j: usize) -> Self {
        let mut f = OddForm::zero();
        f.add_term(i, j, &PolyCoeff::monomial(e, c));
        f
    }

    /// Constant form `ξ_ij`.
    pub fn xi(i: usize, j: usize) -> Self {
        OddForm::monomial(Rational::one(), [0; NVARS], i, j)
    }

    /// Adds `p · ξ_ij` for any ordered pair.
    pub fn add_term(&mut self, i: usize, j: usize, p: &PolyCoeff) {
        if i == j || p.is_zero() {
            return;
        }
        let (key, p) = if i < j { ((i, j), p.clone()) } else { ((j, i), -p) };
        let slot = self.coeffs.entry(key).or_default();
        *slot = &*slot + &p;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// Coefficient of `ξ_ij` for `i < j`.
    pub fn coeff(&self, i: usize, j: usize) -> PolyCoeff {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &PolyCoeff)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &OddForm) -> OddForm {
        let mut out = self.clone();
        for (&(i, j), p) in &o.coeffs {
            out.add_term(i, j, p);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> OddForm {
        let mut out = OddForm::zero();
        for (&(i, j), p) in &self.coeffs {
            out.add_term(i, j, &p.scale(c));
        }
        out
    }

    /// Exterior derivative, keyed by increasing index triples.
    pub fn exterior_derivative(&self) -> BTreeMap<[usize; 3], PolyCoeff> {
        let mut out: BTreeMap<[usize; 3], PolyCoeff> = BTreeMap::new();
        for (&(i, j), p) in &self.coeffs {
            for m in 0..NVARS {
                if m == i || m == j {
                    continue;
                }
                let dp = p.derivative(m);
                if dp.is_zero() {
                    continue;
                }
                let mut idx = [m, i, j];
                let sign = permutation_sign(&idx);
                idx.sort_unstable();
                let slot = out.entry(idx).or_default();
                *slot = &*slot + &dp.scale(&Rational::from_int(sign as i64));
            }
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    pub fn is_closed(&self) -> bool {
        self.exterior_derivative().is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Generator part of a monomial: `∂_i` or `ξ_ij` (`i < j`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    D(usize),
    Xi(usize, usize),
}

impl Gen {
    pub fn parity(&self) -> Parity {
        match self {
            Gen::D(_) => Parity::Even,
            Gen::Xi(..) => Parity::Odd,
        }
    }

    /// ℤ-degree of the generator itself.
    pub fn degree(&self) -> i32 {
        match self {
            Gen::D(_) => -2,
            Gen::Xi(..) => -1,
        }
    }
}

/// ℤ-degree of the monomial `x^e · g`.
pub fn monomial_degree(e: &Exponent, g: &Gen) -> i32 {
    2 * exponent_degree(e) as i32 + g.degree()
}

/// sl5 weight of the monomial `x^e · g`: `x_i` has weight ε_i, `∂_i` weight
/// −ε_i and `ξ_ij` weight ε_i + ε_j.
pub fn monomial_weight(e: &Exponent, g: &Gen) -> Weight {
    let mut eps = [0i32; NVARS];
    for (k, &a) in e.iter().enumerate() {
        eps[k] += a as i32;
    }
    match *g {
        Gen::D(i) => eps[i] -= 1,
        Gen::Xi(i, j) => {
            eps[i] += 1;
            eps[j] += 1;
        }
    }
    Weight::from_eps(&eps)
}

/// Sparse element of E(5,10): an even field plus an odd form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GradedElement {
    pub even: EvenField,
    pub odd: OddForm,
}

impl GradedElement {
    pub fn zero() -> Self {
        GradedElement::default()
    }

    pub fn from_even(even: EvenField) -> Self {
        GradedElement {
            even,
            odd: OddForm::zero(),
        }
    }

    pub fn from_odd(odd: OddForm) -> Self {
        GradedElement {
            even: EvenField::zero(),
            odd,
        }
    }

    /// `c · x^e · g`.
    pub fn monomial(c: Rational, e: Exponent, g: Gen) -> Self {
        match g {
            Gen::D(i) => GradedElement::from_even(EvenField::monomial(c, e, i)),
            Gen::Xi(i, j) => GradedElement::from_odd(OddForm::monomial(c, e, i, j)),
        }
    }

    pub fn d(i: usize) -> Self {
        GradedElement::from_even(EvenField::d(i))
    }

    pub fn xi(i: usize, j: usize) -> Self {
        GradedElement::from_odd(OddForm::xi(i, j))
    }

    pub fn x_d(i: usize, j: usize) -> Self {
        GradedElement::from_even(EvenField::x_d(i, j))
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Parity of a nonzero pure element; `None` when zero or mixed.
    pub fn parity(&self) -> Option<Parity> {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (false, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            _ => None,
        }
    }

    /// All monomials `(generator, exponent, coefficient)` in canonical order.
    pub fn terms(&self) -> Vec<(Gen, Exponent, Rational)> {
        let mut out = Vec::new();
        for (i, p) in self.even.coeffs().iter().enumerate() {
            for (e, c) in p.terms() {
                out.push((Gen::D(i), *e, c.clone()));
            }
        }
        for (&(i, j), p) in self.odd.terms() {
            for (e, c) in p.terms() {
                out.push((Gen::Xi(i, j), *e, c.clone()));
            }
        }
        out
    }

    pub fn add(&self, o: &GradedElement) -> GradedElement {
        GradedElement {
            even: self.even.add(&o.even),
            odd: self.odd.add(&o.odd),
        }
    }

    pub fn sub(&self, o: &GradedElement) -> GradedElement {
        self.add(&o.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> GradedElement {
        GradedElement {
            even: self.even.scale(c),
            odd: self.odd.scale(c),
        }
    }

    /// Divergence-free even part and closed odd part.
    pub fn is_valid(&self) -> bool {
        self.even.divergence().is_zero() && self.odd.is_closed()
    }

    pub fn validate(&self) -> Result<(), SuperError> {
        if !self.even.divergence().is_zero() {
            return Err(SuperError::NotDivergenceFree);
        }
        if !self.odd.is_closed() {
            return Err(SuperError::NotClosed);
        }
        Ok(())
    }

    /// Splits into ℤ-homogeneous components.
    pub fn components(&self) -> BTreeMap<i32, GradedElement> {
        let mut out: BTreeMap<i32, GradedElement> = BTreeMap::new();
        for (g, e, c) in self.terms() {
            let d = monomial_degree(&e, &g);
            let slot = out.entry(d).or_default();
            *slot = slot.add(&GradedElement::monomial(c, e, g));
        }
        out
    }

    /// Weight of a weight vector; `None` when zero or not a weight vector.
    pub fn weight(&self) -> Option<Weight> {
        let mut ws = self.terms().into_iter().map(|(g, e, _)| monomial_weight(&e, &g));
        let w = ws.next()?;
        ws.all(|x| x == w).then_some(w)
    }
}

/// ℤ-degree of a nonzero homogeneous element.
pub fn grading_degree(a: &GradedElement) -> Result<i32, SuperError> {
    let mut degs = a.terms().into_iter().map(|(g, e, _)| monomial_degree(&e, &g));
    let d = degs.next().ok_or(SuperError::Zero)?;
    if degs.all(|x| x == d) {
        Ok(d)
    } else {
        Err(SuperError::NotHomogeneous)
    }
}

/// 5×5 traceless matrix of `z ∈ L_0` under `x_i ∂_j ↦ −e^i_j`, where `e^i_j`
/// is the matrix unit sending the i-th basis vector to the j-th (row j,
/// column i). This is the matrix of `ad z` on `L_{−2}` in the basis
/// `∂_1 … ∂_5`.
pub fn sl5_of(z: &EvenField) -> Result<[[Rational; NVARS]; NVARS], SuperError> {
    let mut m: [[Rational; NVARS]; NVARS] = Default::default();
    for (j, p) in z.coeffs().iter().enumerate() {
        for (e, c) in p.terms() {
            if exponent_degree(e) != 1 {
                return Err(SuperError::NotInL0);
            }
            let i = e.iter().position(|&a| a == 1).unwrap();
            m[j][i] -= c;
        }
    }
    if !z.divergence().is_zero() {
        return Err(SuperError::NotInL0);
    }
    Ok(m)
}

/// Coefficients `c[i][j]` of `x_i ∂_j` in a linear field.
pub fn linear_coefficients(z: &EvenField) -> Result<[[Rational; NVARS]; NVARS], SuperError> {
    let mut c: [[Rational; NVARS]; NVARS] = Default::default();
    for (j, p) in z.coeffs().iter().enumerate() {
        for (e, x) in p.terms() {
            if exponent_degree(e) != 1 {
                return Err(SuperError::NotInL0);
            }
            let i = e.iter().position(|&a| a == 1).unwrap();
            c[i][j] = x.clone();
        }
    }
    Ok(c)
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_element(self))
    }
}

impl fmt::Debug for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for GradedElement {
    type Err = ParseElementError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        text::parse_element(s)
    }
}
