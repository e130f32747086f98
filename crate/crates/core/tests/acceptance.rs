//! One line per acceptance criterion. Exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use e510::bound::{candidates, degree_bound_report, omega, table_cell};
use e510::checks::{self, Options, Suite};
use e510::exact::{binomial, Echelon, Rational, SparseVector};
use e510::singular::{find_singular, is_singular};
use e510::sl5rep::{weyl_dim, Decomposition, Weight};
use e510::verma::VermaModule;
use serde::Deserialize;

#[derive(Deserialize)]
struct Cell {
    j: usize,
    i: usize,
    weights: Vec<Weight>,
}

#[derive(Deserialize)]
struct Table {
    cells: Vec<Cell>,
}

fn set(ws: &[[i32; 4]]) -> BTreeSet<Weight> {
    ws.iter().map(|&w| Weight(w)).collect()
}

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure(took <= limit, || format!("took {took:?}, limit {limit:?}"))
}

fn suite_failures(reports: &[checks::CheckOutcome]) -> Outcome {
    for c in reports {
        if !c.passed() {
            return Err(format!("{}: {}", c.name, c.counterexample.clone().unwrap_or_default()));
        }
        if c.cases == 0 {
            return Err(format!("{}: no cases ran", c.name));
        }
    }
    Ok(())
}

fn table_reproduction() -> Outcome {
    within(Duration::from_secs(120), || {
        let t: Table = serde_json::from_str(include_str!("../data/reference_table.json")).map_err(|e| e.to_string())?;
        let mut entries = 0;
        for c in &t.cells {
            let got: BTreeSet<Weight> = table_cell(c.j, c.i).map_err(|e| e.to_string())?.support().into_iter().collect();
            let want: BTreeSet<Weight> = c.weights.iter().copied().collect();
            ensure(got == want, || format!("cell j={} i={}: {got:?} vs {want:?}", c.j, c.i))?;
            entries += want.len();
        }
        ensure(t.cells.len() == 20 && entries == 82, || format!("{} cells, {entries} entries", t.cells.len()))
    })
}

fn top_column() -> Outcome {
    for i in 0..=4 {
        let d = table_cell(10, i).map_err(|e| e.to_string())?;
        ensure(*d == Decomposition::single(omega(i)), || format!("i={i}: {d}"))?;
    }
    Ok(())
}

fn dimension_audit() -> Outcome {
    for j in 0..=10 {
        for i in 0..=4 {
            let d = table_cell(j, i).map_err(|e| e.to_string())?;
            let mut sum = 0u64;
            for (w, m) in d.iter() {
                sum += m * weyl_dim(w).map_err(|e| e.to_string())?;
            }
            let want = binomial(10, j as u64) * weyl_dim(&omega(i)).map_err(|e| e.to_string())?;
            ensure(Rational::from_int(sum as i64) == Rational::from_bigint(want.clone()), || format!("j={j} i={i}: {sum} vs {want}"))?;
        }
    }
    Ok(())
}

fn bound_reproduction() -> Outcome {
    within(Duration::from_secs(60), || {
        for p in [13, 14] {
            let c = candidates(p).map_err(|e| e.to_string())?.candidates;
            ensure(c.is_empty(), || format!("degree {p}: {c:?}"))?;
        }
        let c12 = candidates(12).map_err(|e| e.to_string())?.candidates;
        ensure(c12 == set(&[[0, 0, 1, 0]]), || format!("degree 12: {c12:?}"))?;
        let c10 = candidates(10).map_err(|e| e.to_string())?.candidates;
        let want10 = set(&[
            [0, 0, 0, 0],
            [1, 0, 0, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 0],
            [0, 1, 0, 0],
            [1, 1, 0, 0],
            [0, 1, 1, 0],
            [1, 0, 0, 1],
            [0, 0, 1, 1],
            [1, 0, 1, 0],
            [0, 1, 0, 1],
            [1, 1, 0, 1],
            [0, 2, 0, 0],
            [2, 0, 0, 0],
            [1, 0, 2, 0],
            [3, 0, 0, 1],
        ]);
        ensure(c10 == want10, || format!("degree 10: {c10:?}"))?;
        let r = degree_bound_report().map_err(|e| e.to_string())?;
        ensure(r.global == 12, || format!("global bound {}", r.global))
    })
}

fn degree_eleven() -> Outcome {
    let r = candidates(11).map_err(|e| e.to_string())?;
    let stated = set(&[[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 1, 1, 0], [1, 0, 0, 1]]);
    ensure(stated.is_subset(&r.candidates), || format!("missing: {:?}", r.missing))?;
    ensure(r.surplus.is_subset(&set(&[[0, 0, 0, 0]])), || format!("surplus: {:?}", r.surplus))?;
    ensure(r.discrepancy() == !r.surplus.is_empty(), || "discrepancy flag inconsistent".into())?;
    ensure(r.to_json().contains("\"discrepancy\""), || "flag not emitted".into())
}

fn example_vector() -> Outcome {
    within(Duration::from_secs(30), || {
        let module = VermaModule::new(Weight([0, 0, 0, 1])).map_err(|e| e.to_string())?;
        let v = common::example_vector(&module);
        ensure(is_singular(&module, &v).map_err(|e| e.to_string())?, || "not singular".into())?;
        let w = module.weight_of(&v).map_err(|e| e.to_string())?;
        ensure(w == Weight([1, 0, 0, 0]), || format!("weight {w}"))?;
        let r = find_singular(&module, 1, None).map_err(|e| e.to_string())?;
        let basis = module.enumerate_basis(1).map_err(|e| e.to_string())?;
        let coords = |x: &e510::verma::VermaVector| {
            let mut s = SparseVector::zero(basis.len());
            for (pos, (idx, b)) in basis.iter().enumerate() {
                s.set(pos, x.get(idx, *b));
            }
            s
        };
        let mut ech = Echelon::new(basis.len());
        for k in &r.basis {
            ech.insert(&coords(k));
        }
        ensure(ech.contains(&coords(&v)), || "not in the computed kernel".into())
    })
}

fn structural() -> Outcome {
    let opts = Options {
        exhaustive: true,
        ..Options::default()
    };
    suite_failures(&checks::run(Suite::E510, &opts).checks)?;
    suite_failures(&[checks::representation_check(
        &[Weight([0, 0, 0, 1]), Weight([1, 0, 0, 0]), Weight([0, 1, 0, 0])],
        50,
        opts.seed,
    )])
}

fn xi_lemma() -> Outcome {
    let lambdas: Vec<Weight> = std::iter::once(Weight::ZERO).chain((1..=4).map(Weight::fundamental)).collect();
    suite_failures(&[checks::xi_lemma_check(&lambdas, 2)])
}

fn quotient() -> Outcome {
    suite_failures(&[checks::quotient_check(Weight([1, 0, 0, 0]), 20, 9)])
}

fn pseudo() -> Outcome {
    within(Duration::from_secs(60), || suite_failures(&checks::run(Suite::Pseudo, &Options::default()).checks))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("table reproduction, 20 cells and 82 entries", table_reproduction),
        ("top exterior power column", top_column),
        ("dimension audits", dimension_audit),
        ("degree bound reproduction", bound_reproduction),
        ("degree 11 comparison with flag", degree_eleven),
        ("singular example in T(V(0,0,0,1))", example_vector),
        ("structural suites", structural),
        ("xi times singular is S(5)-singular", xi_lemma),
        ("quotient action consistency", quotient),
        ("pseudoalgebra suite", pseudo),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = f();
        let took = start.elapsed();
        match r {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({took:.2?})", n + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({took:.2?}): {e}", n + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
