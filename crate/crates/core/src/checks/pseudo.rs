use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{Echelon, Rational, SparseVector};
use crate::pseudo::{
    conformal_action, div_pseudo, iota, pair_with, phi, sab, wd_pseudobracket, AlgebraKind, AnnElement, HElement,
    WdElement, XElement, h_action, Side,
};
use crate::superalgebra::{bracket_even_even, exponent_degree, exponents_of_degree, EvenField, Exponent, NVARS};

use super::{CheckOutcome, Options, Tally};

fn exponents_upto(k: u32) -> Vec<Exponent> {
    (0..=k).flat_map(exponents_of_degree).collect()
}

fn small(rng: &mut impl Rng) -> Rational {
    let n = rng.gen_range(1..=3);
    Rational::from_int(if rng.gen_bool(0.5) { n } else { -n })
}

fn random_h(rng: &mut impl Rng, k: u32) -> HElement {
    let es = exponents_upto(k);
    let mut h = HElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        h.add_term(*es.choose(rng).expect("nonempty"), &small(rng));
    }
    h
}

fn random_x(rng: &mut impl Rng, k: u32) -> XElement {
    let es = exponents_upto(k);
    let mut x = XElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        x.add_term(*es.choose(rng).expect("nonempty"), &small(rng));
    }
    x
}

fn random_wd(rng: &mut impl Rng, k: u32) -> WdElement {
    let mut w = WdElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let c = rng.gen_range(0..NVARS);
        w = w.add(&WdElement::basis(random_h(rng, k), c));
    }
    w
}

fn random_ann(rng: &mut impl Rng, k: u32) -> AnnElement {
    let mut a = AnnElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let c = rng.gen_range(0..NVARS);
        a = a.add(&AnnElement::from_x(&random_x(rng, k), c));
    }
    a
}

/// Random element of the `S` annihilation algebra, from the `s_ab` image.
fn random_s(rng: &mut impl Rng, k: u32) -> AnnElement {
    let mut out = AnnElement::zero();
    while out.is_zero() {
        let a = rng.gen_range(0..NVARS);
        let b = rng.gen_range(0..NVARS);
        out = iota(&random_x(rng, k + 1), &sab(a, b));
    }
    out
}

fn tensor_sum(pairs: impl IntoIterator<Item = (HElement, HElement)>) -> Vec<(Exponent, Exponent, Rational)> {
    let mut m = std::collections::BTreeMap::<(Exponent, Exponent), Rational>::new();
    for (f, g) in pairs {
        for (i, a) in f.terms() {
            for (j, b) in g.terms() {
                *m.entry((*i, *j)).or_default() += &(a * b);
            }
        }
    }
    m.into_iter().filter(|(_, c)| !c.is_zero()).map(|((i, j), c)| (i, j, c)).collect()
}

fn hopf(t: &mut Tally, k: u32) {
    for i in exponents_upto(k) {
        let h = HElement::divided(i);
        let delta = h.coproduct();
        // coassociativity, compared on triple supports
        let mut left = std::collections::BTreeMap::<(Exponent, Exponent, Exponent), Rational>::new();
        let mut right = left.clone();
        for (a, b) in &delta {
            for (a1, a2) in a.coproduct() {
                for (p, x) in a1.terms() {
                    for (q, y) in a2.terms() {
                        for (r, z) in b.terms() {
                            *left.entry((*p, *q, *r)).or_default() += &(&(x * y) * z);
                        }
                    }
                }
            }
            for (b1, b2) in b.coproduct() {
                for (p, x) in a.terms() {
                    for (q, y) in b1.terms() {
                        for (r, z) in b2.terms() {
                            *right.entry((*p, *q, *r)).or_default() += &(&(x * y) * z);
                        }
                    }
                }
            }
        }
        left.retain(|_, c| !c.is_zero());
        right.retain(|_, c| !c.is_zero());
        t.case(left == right, || format!("coassociativity at ∂^({i:?})"));
        let l = delta.iter().fold(HElement::zero(), |acc, (a, b)| acc.add(&b.scale(&a.counit())));
        let r = delta.iter().fold(HElement::zero(), |acc, (a, b)| acc.add(&a.scale(&b.counit())));
        t.case(l == h && r == h, || format!("counit at ∂^({i:?})"));
        let eps = HElement::one().scale(&h.counit());
        let l = delta.iter().fold(HElement::zero(), |acc, (a, b)| acc.add(&a.antipode().mul(b)));
        let r = delta.iter().fold(HElement::zero(), |acc, (a, b)| acc.add(&a.mul(&b.antipode())));
        t.case(l == eps && r == eps, || format!("antipode at ∂^({i:?})"));
        for j in exponents_upto(k.min(2)) {
            let g = HElement::divided(j);
            let lhs = tensor_sum(h.mul(&g).coproduct());
            let mut prod = Vec::new();
            for (a, b) in &delta {
                for (c, d) in g.coproduct() {
                    prod.push((a.mul(&c), b.mul(&d)));
                }
            }
            t.case(lhs == tensor_sum(prod), || format!("Δ multiplicative at ∂^({i:?}), ∂^({j:?})"));
        }
    }
}

fn pairing(t: &mut Tally, k: u32) {
    let es = exponents_upto(k);
    for i in &es {
        let x = XElement::basis(*i);
        for j in &es {
            let h = HElement::divided(*j);
            let hx = h_action(&h, &x, Side::Left);
            let xh = h_action(&h, &x, Side::Right);
            for l in &es {
                let f = HElement::divided(*l);
                let want_l = x.pair(&h.antipode().mul(&f));
                let want_r = x.pair(&f.mul(&h.antipode()));
                t.case(hx.pair(&f) == want_l && xh.pair(&f) == want_r, || {
                    format!("x_{i:?}, h = ∂^({j:?}), f = ∂^({l:?})")
                });
            }
        }
        for j in &es {
            let y = XElement::basis(*j);
            for l in exponents_upto(exponent_degree(i) + exponent_degree(j)) {
                let h = HElement::divided(l);
                let lhs = x.mul(&y).pair(&h);
                let rhs: Rational = h.coproduct().iter().map(|(a, b)| &x.pair(a) * &y.pair(b)).sum();
                t.case(lhs == rhs, || format!("product dual to coproduct: x_{i:?}, x_{j:?}, ∂^({l:?})"));
            }
        }
    }
}

fn ann_basis(k: u32) -> Vec<AnnElement> {
    exponents_upto(k)
        .into_iter()
        .flat_map(|i| (0..NVARS).map(move |c| AnnElement::basis(i, c)))
        .collect()
}

fn ann_jacobi(t: &mut Tally, k: u32) {
    let b = ann_basis(k);
    let table: Vec<Vec<AnnElement>> = b.iter().map(|x| b.iter().map(|y| x.bracket(y)).collect()).collect();
    for i in 0..b.len() {
        for j in 0..b.len() {
            t.case(table[i][j] == table[j][i].scale(&Rational::from_int(-1)), || {
                format!("skew: {:?}, {:?}", b[i], b[j])
            });
        }
    }
    for i in 0..b.len() {
        for j in i..b.len() {
            for l in j..b.len() {
                let jac = b[i]
                    .bracket(&table[j][l])
                    .add(&b[j].bracket(&table[l][i]))
                    .add(&b[l].bracket(&table[i][j]));
                t.case(jac.is_zero(), || format!("jacobi: {:?}, {:?}, {:?}", b[i], b[j], b[l]));
                if t.failed() {
                    return;
                }
            }
        }
    }
}

/// Coordinates of the homogeneous part with coefficients of degree `d`.
fn ann_coordinates(a: &AnnElement, d: u32) -> SparseVector {
    let es = exponents_of_degree(d);
    let mut v = SparseVector::zero(es.len() * NVARS);
    for ((i, c), x) in a.terms() {
        if let Some(pos) = es.iter().position(|e| e == i) {
            v.add_at(pos * NVARS + c, x);
        }
    }
    v
}

/// Divergence-free homogeneous elements of degree `p` are exactly the span
/// of the `ι(x ⊗_H s_ab)`.
fn s_rank(t: &mut Tally, k: u32) {
    for p in -1..=k as i32 {
        let d = (p + 1) as u32;
        let es = exponents_of_degree(d);
        let n = es.len() * NVARS;
        // kernel of div on this piece
        let mut rows = Echelon::new(n);
        let targets = if d == 0 { Vec::new() } else { exponents_of_degree(d - 1) };
        let mut cols: Vec<SparseVector> = Vec::new();
        for i in &es {
            for c in 0..NVARS {
                let dv = AnnElement::basis(*i, c).div();
                let mut v = SparseVector::zero(targets.len().max(1));
                for (e, x) in dv.terms() {
                    let pos = targets.iter().position(|f| f == e).expect("degree drops by one");
                    v.add_at(pos, x);
                }
                cols.push(v);
            }
        }
        for r in 0..targets.len() {
            let mut row = SparseVector::zero(n);
            for (col, v) in cols.iter().enumerate() {
                row.add_at(col, &v.get(r));
            }
            rows.insert(&row);
        }
        let kernel_dim = n - rows.rank();
        let mut image = Echelon::new(n);
        let mut all_in_kernel = true;
        for i in exponents_of_degree(d + 1) {
            for a in 0..NVARS {
                for b in a + 1..NVARS {
                    let s = iota(&XElement::basis(i), &sab(a, b));
                    all_in_kernel &= s.div().is_zero();
                    image.insert(&ann_coordinates(&s, d));
                }
            }
        }
        let r = image.rank();
        t.case(all_in_kernel && r == kernel_dim, || {
            format!("degree {p}: image rank {r}, kernel dimension {kernel_dim}")
        });
    }
}

fn minus(x: &XElement) -> XElement {
    x.scale(&Rational::from_int(-1))
}

fn min_poly_degree(f: &EvenField) -> Option<u32> {
    f.coeffs().iter().flat_map(|p| p.terms().map(|(e, _)| exponent_degree(e))).min()
}

pub fn pseudo_suite(opts: &Options) -> Vec<CheckOutcome> {
    let k = opts.max_support;
    let n = opts.samples;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();

    let mut t = Tally::new("hopf_axioms");
    hopf(&mut t, k.max(3));
    out.push(t.finish());

    let mut t = Tally::new("pairing_identities");
    pairing(&mut t, k);
    out.push(t.finish());

    let mut t = Tally::new("pseudobracket_skew_and_bilinear");
    for _ in 0..n {
        let (u, v) = (random_wd(&mut rng, k), random_wd(&mut rng, k));
        let uv = wd_pseudobracket(&u, &v);
        let vu = wd_pseudobracket(&v, &u);
        t.case(vu == uv.swap().scale(&Rational::from_int(-1)), || format!("skew: {u:?}, {v:?}"));
        let (f, g) = (random_h(&mut rng, 2), random_h(&mut rng, 2));
        let lhs = wd_pseudobracket(&u.mul_left(&f), &v.mul_left(&g));
        t.case(lhs == uv.mul_left(&f, &g), || format!("H-bilinear: {u:?}, {v:?}, f = {f:?}, g = {g:?}"));
    }
    out.push(t.finish());

    let mut t = Tally::new("s_ab_divergence_free");
    for a in 0..NVARS {
        for b in 0..NVARS {
            t.case(div_pseudo(&sab(a, b)).is_zero(), || format!("div s_{a}{b} ≠ 0"));
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("annihilation_bracket_from_pseudobracket");
    for _ in 0..n {
        let (x, y) = (random_x(&mut rng, k + 1), random_x(&mut rng, k + 1));
        let (a, b) = (random_wd(&mut rng, 1), random_wd(&mut rng, 1));
        let lhs = iota(&x, &a).bracket(&iota(&y, &b));
        let rhs = pair_with(&x, &y, &wd_pseudobracket(&a, &b));
        t.case(lhs == rhs, || format!("x = {x:?}, y = {y:?}, a = {a:?}, b = {b:?}"));
    }
    out.push(t.finish());

    let mut t = Tally::new("annihilation_jacobi");
    ann_jacobi(&mut t, k);
    out.push(t.finish());

    let mut t = Tally::new("div_leibniz");
    for _ in 0..n {
        let (a, b) = (random_ann(&mut rng, 3), random_ann(&mut rng, 3));
        let lhs = a.bracket(&b).div();
        let rhs = a.act_on_x(&b.div()).sub(&b.act_on_x(&a.div()));
        t.case(lhs == rhs, || format!("A = {a:?}, B = {b:?}"));
    }
    out.push(t.finish());

    let mut t = Tally::new("action_on_x");
    for _ in 0..n {
        let (a, b) = (random_ann(&mut rng, k), random_ann(&mut rng, k));
        let (y, z) = (random_x(&mut rng, k + 1), random_x(&mut rng, k + 1));
        let leibniz = a.act_on_x(&y.mul(&z)) == a.act_on_x(&y).mul(&z).add(&y.mul(&a.act_on_x(&z)));
        let hom = a.bracket(&b).act_on_x(&y) == a.act_on_x(&b.act_on_x(&y)).sub(&b.act_on_x(&a.act_on_x(&y)));
        t.case(leibniz && hom, || format!("A = {a:?}, B = {b:?}, y = {y:?}, z = {z:?}"));
    }
    let x0 = XElement::basis([0; NVARS]);
    for c in 0..NVARS {
        t.case(AnnElement::basis([0; NVARS], c).act_on_x(&x0).is_zero(), || format!("x_0 ⊗ ∂_{c} on x_0"));
    }
    out.push(t.finish());

    let mut t = Tally::new("s_image_is_kernel_of_div");
    s_rank(&mut t, k);
    out.push(t.finish());

    let mut t = Tally::new("phi");
    for c in 0..NVARS {
        let f = phi(&AnnElement::basis([0; NVARS], c));
        t.case(f == EvenField::d(c).scale(&Rational::from_int(-1)), || format!("leading term of φ(x_0 ⊗ ∂_{c})"));
    }
    for _ in 0..n {
        let (a, b) = (random_ann(&mut rng, k + 1), random_ann(&mut rng, k + 1));
        t.case(phi(&a.bracket(&b)) == bracket_even_even(&phi(&a), &phi(&b)), || {
            format!("homomorphism: A = {a:?}, B = {b:?}")
        });
        if let Ok(p) = a.filtration_degree(AlgebraKind::W) {
            let q = min_poly_degree(&phi(&a)).map(|d| d as i32 - 1);
            t.case(q.is_some_and(|q| q >= p), || format!("filtration: A = {a:?} in degree {p}"));
        }
        let s = random_s(&mut rng, k);
        t.case(phi(&s).divergence().is_zero(), || format!("φ(S) divergence free: {s:?}"));
    }
    out.push(t.finish());

    let mut t = Tally::new("filtration_shift");
    for _ in 0..n {
        for kind in [AlgebraKind::W, AlgebraKind::S] {
            let (a, b) = match kind {
                AlgebraKind::W => (random_ann(&mut rng, k + 1), random_ann(&mut rng, k + 1)),
                AlgebraKind::S => (random_s(&mut rng, k), random_s(&mut rng, k)),
            };
            let c = a.bracket(&b);
            if c.is_zero() {
                continue;
            }
            let (Ok(p), Ok(q), Ok(r)) = (a.filtration_degree(kind), b.filtration_degree(kind), c.filtration_degree(kind))
            else {
                t.error(format!("{kind:?}: element left the algebra: {a:?}, {b:?}"));
                break;
            };
            // [F_{p+l}, F_{q+l}] ⊆ F_{p+q+l}
            let l = kind.shift();
            t.case(r + l >= (p + l) + (q + l) - l, || format!("{kind:?}: {p} + {q} gave {r}"));
        }
    }
    out.push(t.finish());

    // the module H is the contragredient of X twisted by the divergence:
    // ⟨y, A·g⟩ = −⟨A·y, g⟩ + ⟨div(A) y, g⟩
    let mut t = Tally::new("conformal_action_matches_action_on_x");
    for _ in 0..n {
        let x = random_x(&mut rng, k);
        let a = random_wd(&mut rng, k);
        let g = random_h(&mut rng, k);
        let v = conformal_action(&x, &a, &g);
        let big = iota(&x, &a);
        let top = v.degree().unwrap_or(0).max(g.degree().unwrap_or(0)) + 1;
        let mut ok = true;
        for i in exponents_upto(top) {
            let y = XElement::basis(i);
            let lhs = y.pair(&v);
            let rhs = &minus(&big.act_on_x(&y)).pair(&g) + &big.div().mul(&y).pair(&g);
            ok &= lhs == rhs;
        }
        t.case(ok, || format!("x = {x:?}, a = {a:?}, g = {g:?}"));
    }
    out.push(t.finish());

    out
}
