use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::Rational;
use crate::singular::{find_singular, is_s5_singular};
use crate::sl5rep::Weight;
use crate::superalgebra::{component_basis, super_bracket, GradedElement, Parity, PAIRS};
use crate::verma::{VermaModule, VermaVector};

use super::{CheckOutcome, Options, Tally};

fn random_vector(module: &VermaModule, max_deg: u32, nterms: usize, rng: &mut impl Rng) -> VermaVector {
    let mut v = VermaVector::zero(module.lambda());
    for _ in 0..nterms {
        let p = rng.gen_range(0..=max_deg);
        let Ok(basis) = module.enumerate_basis(p) else { continue };
        if let Some(&(idx, b)) = basis.choose(rng) {
            v.add_term(idx, b, &Rational::from_int(rng.gen_range(1..=3)));
        }
    }
    v
}

fn sign(a: &GradedElement, b: &GradedElement) -> Rational {
    let odd = |x: &GradedElement| x.parity() == Some(Parity::Odd);
    Rational::from_int(if odd(a) && odd(b) { -1 } else { 1 })
}

/// `a(bv) − (−1)^{p(a)p(b)} b(av) = [a,b]v` for an `L_0 × L_1` and an
/// `L_1 × L_1` pair on each of `count` random vectors of degree at most 4,
/// spread over `lambdas`.
pub fn representation_check(lambdas: &[Weight], count: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l0 = component_basis(0).expect("L_0");
    let l1 = component_basis(1).expect("L_1");
    let mut t = Tally::new("representation_property");
    let modules: Vec<VermaModule> = match lambdas.iter().map(|&l| VermaModule::new(l)).collect() {
        Ok(m) => m,
        Err(e) => {
            t.error(e);
            return t.finish();
        }
    };
    for n in 0..count {
        let module = &modules[n % modules.len()];
        let v = random_vector(module, 4, 3, &mut rng);
        for first in [&l0, &l1] {
            let a = first.choose(&mut rng).expect("nonempty");
            let b = l1.choose(&mut rng).expect("nonempty");
            let r = (|| {
                let lhs = module
                    .act(a, &module.act(b, &v)?)?
                    .sub(&module.act(b, &module.act(a, &v)?)?.scale(&sign(a, b)))?;
                let rhs = module.act(&super_bracket(a, b), &v)?;
                Ok::<_, crate::verma::VermaError>(lhs == rhs)
            })();
            match r {
                Ok(ok) => t.case(ok, || format!("a = {a}, b = {b}, λ = {}, v = {}", module.lambda(), v.to_json())),
                Err(e) => t.error(e),
            }
        }
    }
    t.finish()
}

/// The `L_2` action on `Γ_m / Γ_{m−1}` agrees with projecting the full
/// action, for `per_level` random classes at each odd level `1 … 10`.
pub fn quotient_check(lambda: Weight, per_level: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new("quotient_action");
    let module = match VermaModule::new(lambda) {
        Ok(m) => m,
        Err(e) => {
            t.error(e);
            return t.finish();
        }
    };
    let l2 = component_basis(2).expect("L_2");
    for m in 1..=10u32 {
        for _ in 0..per_level {
            let n = rng.gen_range(0..=2);
            let r = (|| {
                let labels = module.enumerate_bidegree(n, m)?;
                let mut v = VermaVector::zero(module.lambda());
                for _ in 0..2 {
                    let &(idx, b) = labels.choose(&mut rng).expect("nonempty bidegree");
                    v.add_term(idx, b, &Rational::from_int(rng.gen_range(1..=3)));
                }
                let y = l2.choose(&mut rng).expect("nonempty");
                let c = module.project_to_quotient(&v, m)?;
                let fast = module.quotient_act_l2(y, &c)?;
                let slow = module.project_to_quotient(&module.act(y, &c.lift())?, m)?;
                Ok::<_, crate::verma::VermaError>((fast == slow, y.clone(), v))
            })();
            match r {
                Ok((ok, y, v)) => t.case(ok, || format!("level {m}, y = {y}, v = {}", v.to_json())),
                Err(e) => t.error(e),
            }
        }
    }
    t.finish()
}

/// `ξ v` is `S(5)`-singular for every singular `v` of degree at most
/// `max_degree` in `T(V(λ))`, every `λ` in `lambdas` and every basis `ξ`.
pub fn xi_lemma_check(lambdas: &[Weight], max_degree: u32) -> CheckOutcome {
    let mut t = Tally::new("xi_times_singular_is_s5_singular");
    for &lambda in lambdas {
        let module = match VermaModule::new(lambda) {
            Ok(m) => m,
            Err(e) => {
                t.error(e);
                return t.finish();
            }
        };
        for p in 0..=max_degree {
            let report = match find_singular(&module, p, None) {
                Ok(r) => r,
                Err(e) => {
                    t.error(e);
                    return t.finish();
                }
            };
            for v in &report.basis {
                for &(a, b) in PAIRS.iter() {
                    let xi = GradedElement::xi(a, b).odd;
                    let r = module.multiply_xi(&xi, v).and_then(|w| is_s5_singular(&module, &w));
                    match r {
                        Ok(ok) => t.case(ok, || {
                            format!("λ = {lambda}, degree {p}, ξ_{}{}, v = {}", a + 1, b + 1, v.to_json())
                        }),
                        Err(e) => t.error(e),
                    }
                }
            }
        }
    }
    t.finish()
}

fn fundamentals_and_trivial() -> Vec<Weight> {
    std::iter::once(Weight::ZERO).chain((1..=4).map(Weight::fundamental)).collect()
}

pub fn verma_suite(opts: &Options) -> Vec<CheckOutcome> {
    vec![
        representation_check(
            &[Weight([0, 0, 0, 1]), Weight([1, 0, 0, 0]), Weight([0, 1, 0, 0])],
            opts.samples,
            opts.seed,
        ),
        quotient_check(Weight([1, 0, 0, 0]), opts.samples.div_ceil(10).max(1), opts.seed),
        xi_lemma_check(&fundamentals_and_trivial(), 1),
    ]
}
