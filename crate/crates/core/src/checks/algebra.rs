use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::Rational;
use crate::superalgebra::{component_basis, grading_degree, super_bracket, GradedElement, Parity};

use super::{CheckOutcome, Options, Tally};

fn basis() -> Vec<GradedElement> {
    (-2..=2).flat_map(|d| component_basis(d).expect("supported degree")).collect()
}

fn odd(a: &GradedElement) -> bool {
    a.parity() == Some(Parity::Odd)
}

/// `(−1)^{p(a)p(b)}`.
fn sign(a: &GradedElement, b: &GradedElement) -> Rational {
    Rational::from_int(if odd(a) && odd(b) { -1 } else { 1 })
}

/// `[a,[b,c]] − [[a,b],c] − (−1)^{p(a)p(b)} [b,[a,c]]`.
fn jacobiator(a: &GradedElement, b: &GradedElement, c: &GradedElement) -> GradedElement {
    super_bracket(a, &super_bracket(b, c))
        .sub(&super_bracket(&super_bracket(a, b), c))
        .sub(&super_bracket(b, &super_bracket(a, c)).scale(&sign(a, b)))
}

fn jacobi_case(t: &mut Tally, a: &GradedElement, b: &GradedElement, c: &GradedElement) {
    let j = jacobiator(a, b, c);
    t.case(j.is_zero(), || format!("a = {a}, b = {b}, c = {c}: jacobiator {j}"));
}

/// Super-Jacobi over every ordered triple of basis elements of
/// `L_{−2} ⊕ … ⊕ L_2`.
pub fn jacobi_exhaustive() -> CheckOutcome {
    let b = basis();
    let table: Vec<Vec<GradedElement>> = b.iter().map(|x| b.iter().map(|y| super_bracket(x, y)).collect()).collect();
    let mut t = Tally::new("super_jacobi_all_triples");
    for i in 0..b.len() {
        for j in 0..b.len() {
            let s = sign(&b[i], &b[j]);
            for k in 0..b.len() {
                let lhs = super_bracket(&b[i], &table[j][k]);
                let rhs = super_bracket(&table[i][j], &b[k]).add(&super_bracket(&b[j], &table[i][k]).scale(&s));
                let (x, y, z) = (&b[i], &b[j], &b[k]);
                t.case(lhs == rhs, || format!("a = {x}, b = {y}, c = {z}"));
                if t.failed() {
                    return t.finish();
                }
            }
        }
    }
    t.finish()
}

pub fn e510_suite(opts: &Options) -> Vec<CheckOutcome> {
    let b = basis();
    let mut out = Vec::new();

    let mut t = Tally::new("super_antisymmetry");
    for x in &b {
        for y in &b {
            let l = super_bracket(x, y);
            let r = super_bracket(y, x).scale(&-sign(x, y));
            t.case(l == r, || format!("[{x}, {y}] = {l} but −(−1)^p [{y}, {x}] = {r}"));
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("odd_odd_symmetry");
    for x in b.iter().filter(|x| odd(x)) {
        for y in b.iter().filter(|y| odd(y)) {
            let (l, r) = (super_bracket(x, y), super_bracket(y, x));
            t.case(l == r, || format!("[{x}, {y}] = {l} ≠ {r}"));
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("grading_and_closure");
    for x in &b {
        for y in &b {
            let z = super_bracket(x, y);
            if z.is_zero() {
                t.case(true, String::new);
                continue;
            }
            let ok = z.is_valid()
                && match (grading_degree(x), grading_degree(y), grading_degree(&z)) {
                    (Ok(p), Ok(q), Ok(r)) => p + q == r,
                    _ => false,
                };
            t.case(ok, || format!("[{x}, {y}] = {z}"));
        }
    }
    out.push(t.finish());

    if opts.exhaustive {
        out.push(jacobi_exhaustive());
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut t = Tally::new("super_jacobi_sampled");
        for _ in 0..opts.samples * 100 {
            let (x, y, z) = (
                &b[rng.gen_range(0..b.len())],
                &b[rng.gen_range(0..b.len())],
                &b[rng.gen_range(0..b.len())],
            );
            jacobi_case(&mut t, x, y, z);
        }
        out.push(t.finish());
    }
    out
}
