use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use e510::bound::{self, candidates_with_passes, degree_bound_report, table_cell, CandidateStatus};
use e510::checks::{self, parse_suites, Options};
use e510::singular::{find_singular, SingularError};
use e510::sl5rep::{
    decompose_character, exterior_power_character, irr_character, tensor_decompose, Decomposition, RepError, Weight,
};
use e510::verma::{VermaModule, DEFAULT_BUDGET};

const GOLDEN_TABLE: &str = include_str!("../../core/data/reference_table.json");

/// Exact computations for the Lie superalgebra E(5,10).
///
/// Weights are written `a,b,c,d` in fundamental-weight coordinates.
#[derive(Parser)]
#[command(name = "e510", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a tensor product or an exterior power into irreducibles.
    Decompose(DecomposeArgs),
    /// Regenerate the table of Λ^j(s*) ⊗ V(ω_i), j = 6..10, i = 0..4.
    Table {
        /// Compare supports with the embedded transcription (j = 6..9).
        #[arg(long, conflicts_with_all = ["md", "json"])]
        check: bool,
        #[arg(long, conflicts_with = "json")]
        md: bool,
        #[arg(long)]
        json: bool,
    },
    /// Highest weights that may carry a singular vector of the given degree.
    Candidates {
        #[arg(long)]
        degree: u32,
        /// Number of ξ-passes; values above 1 are experimental.
        #[arg(long, default_value_t = 1)]
        xi_passes: u32,
        #[arg(long, conflicts_with = "md")]
        json: bool,
        #[arg(long)]
        md: bool,
    },
    /// Degree bound for singular vectors, per highest weight and overall.
    BoundReport {
        #[arg(long)]
        json: bool,
    },
    /// Singular vectors of a given degree in the generalized Verma module.
    Sing {
        /// Highest weight of the sl5-module V.
        #[arg(long)]
        hw: Weight,
        #[arg(long)]
        degree: u32,
        /// Restrict to one weight space.
        #[arg(long)]
        weight: Option<Weight>,
        /// Maximal dimension of a graded piece.
        #[arg(long, env = "E510_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run the seeded property suites.
    Verify {
        /// e510, verma, pseudo or all.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Check super-Jacobi on every basis triple.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Run the pseudoalgebra suite and print a JSON report.
    PseudoCheck {
        #[arg(long, default_value_t = 2)]
        max_support: u32,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true)))]
struct DecomposeArgs {
    /// V(λ) ⊗ V(μ).
    #[arg(long, num_args = 2, value_names = ["LAMBDA", "MU"], group = "what")]
    tensor: Option<Vec<Weight>>,
    /// Λ^k V(λ).
    #[arg(long, requires = "k", group = "what")]
    ext: Option<Weight>,
    #[arg(long)]
    k: Option<usize>,
    /// Tensor the exterior power with V(μ).
    #[arg(long, requires = "ext")]
    tensor_with: Option<Weight>,
    #[arg(long, conflicts_with = "md")]
    json: bool,
    #[arg(long)]
    md: bool,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<RepError> for Failure {
    fn from(e: RepError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn decomposition_md(d: &Decomposition) -> String {
    let mut s = String::from("| highest weight | multiplicity |\n|---|---|\n");
    for (w, m) in d.iter() {
        s.push_str(&format!("| {w} | {m} |\n"));
    }
    s
}

fn decompose(a: &DecomposeArgs) -> Outcome {
    let d = if let Some(ws) = &a.tensor {
        tensor_decompose(&ws[0], &ws[1])?
    } else {
        let lambda = a.ext.expect("clap group");
        let k = a.k.expect("clap requires");
        let ext = exterior_power_character(&lambda, k)?;
        match &a.tensor_with {
            Some(mu) => decompose_character(&ext.product(&*irr_character(mu)?))?,
            None => decompose_character(&ext)?,
        }
    };
    if a.json {
        println!("{}", d.to_json());
    } else if a.md {
        print!("{}", decomposition_md(&d));
    } else {
        println!("{d}");
    }
    Ok(())
}

#[derive(Deserialize)]
struct GoldenCell {
    j: usize,
    i: usize,
    weights: Vec<Weight>,
}

#[derive(Deserialize)]
struct Golden {
    cells: Vec<GoldenCell>,
}

fn table(check: bool, json: bool) -> Outcome {
    if check {
        let golden: Golden = serde_json::from_str(GOLDEN_TABLE).expect("embedded table");
        let mut bad = Vec::new();
        for c in &golden.cells {
            let got: BTreeSet<Weight> = table_cell(c.j, c.i)?.support().into_iter().collect();
            let want: BTreeSet<Weight> = c.weights.iter().copied().collect();
            if got != want {
                let extra: Vec<_> = got.difference(&want).collect();
                let missing: Vec<_> = want.difference(&got).collect();
                bad.push(format!("j={} i={}: extra {extra:?}, missing {missing:?}", c.j, c.i));
            }
        }
        let total = golden.cells.len();
        println!("{}/{total} cells match", total - bad.len());
        if bad.is_empty() {
            return Ok(());
        }
        return Err(Failure::Mismatch(bad.join("\n")));
    }
    if json {
        #[derive(Serialize)]
        struct Cell {
            j: usize,
            i: usize,
            decomposition: serde_json::Value,
        }
        let mut cells = Vec::new();
        for j in (6..=10).rev() {
            for i in 0..=4 {
                let d = table_cell(j, i)?;
                cells.push(Cell {
                    j,
                    i,
                    decomposition: serde_json::from_str(&d.to_json()).expect("valid json"),
                });
            }
        }
        println!("{}", serde_json::to_string_pretty(&cells).expect("serializable"));
        return Ok(());
    }
    print!("{}", bound::table_markdown()?);
    let top: Vec<String> = (0..=4)
        .map(|i| table_cell(10, i).map(|d| format!("Λ¹⁰(s*)⊗V(ω{i}) = {d}")))
        .collect::<Result<_, _>>()?;
    println!();
    for line in top {
        println!("{line}");
    }
    Ok(())
}

fn weights(ws: &BTreeSet<Weight>) -> String {
    if ws.is_empty() {
        return "(none)".into();
    }
    ws.iter().map(Weight::to_string).collect::<Vec<_>>().join(" ")
}

fn candidates(p: u32, xi_passes: u32, json: bool, md: bool) -> Outcome {
    if xi_passes == 0 {
        return Err(Failure::Usage("--xi-passes must be at least 1".into()));
    }
    let r = candidates_with_passes(p, xi_passes)?;
    if json {
        println!("{}", r.to_json());
        return Ok(());
    }
    if r.status == CandidateStatus::UnboundedByThisArgument {
        println!("degree {p}: no restriction (every admissible top term is S(5)-constant)");
        return Ok(());
    }
    if md {
        println!("| weight | first pass | ξ-pass |\n|---|---|---|");
        for (w, (a, xs)) in &r.witnesses {
            let show = |x: &bound::Witness| match x.omega {
                Some(i) => format!("({}|{}) ω{i}", x.n, x.m),
                None => format!("({}|{})", x.n, x.m),
            };
            let first = a.as_ref().map(show).unwrap_or_else(|| "any".into());
            let xi: Vec<String> = xs.iter().map(show).collect();
            println!("| {w} | {first} | {} |", xi.join(", "));
        }
        println!();
    }
    println!("degree {p}: {} candidate(s)", r.candidates.len());
    println!("computed: {}", weights(&r.candidates));
    if let Some(stated) = &r.stated {
        println!("stated:   {}", weights(stated));
        if r.discrepancy() {
            println!(
                "discrepancy: surplus {}; missing {}",
                weights(&r.surplus),
                weights(&r.missing)
            );
        }
    }
    Ok(())
}

fn bound_report(json: bool) -> Outcome {
    let r = degree_bound_report()?;
    if json {
        println!("{}", r.to_json());
        return Ok(());
    }
    println!("global bound: {}", r.global);
    println!("default bound: 10");
    println!("| weight | bound |\n|---|---|");
    for (w, b) in &r.exceptional {
        println!("| {w} | {b} |");
    }
    Ok(())
}

fn sing(hw: Weight, degree: u32, weight: Option<Weight>, budget: u64, json: bool) -> Outcome {
    if budget == 0 {
        return Err(Failure::Usage("budget must be positive".into()));
    }
    let module = VermaModule::with_budget(hw, budget).map_err(|e| Failure::Usage(e.to_string()))?;
    let r = find_singular(&module, degree, weight).map_err(|e| {
        Failure::Usage(match e {
            SingularError::DegreeCap { .. } => format!("{e}, e.g. --weight a,b,c,d"),
            SingularError::Verma(ref v) => format!("{v}; restrict with --weight or raise --budget"),
            other => other.to_string(),
        })
    })?;
    if json {
        println!("{}", r.to_json());
        return Ok(());
    }
    println!("λ = {hw}, degree {degree}: dimension {}", r.dimension());
    for (w, d) in &r.per_weight {
        println!("  weight {w}: {d}");
    }
    for v in &r.basis {
        println!("{}", v.to_json());
    }
    Ok(())
}

fn print_report(r: &checks::SuiteReport) {
    for c in &r.checks {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        println!("{}/{} {status} ({} cases)", r.suite, c.name, c.cases);
        if let Some(x) = &c.counterexample {
            println!("  counterexample: {x}");
        }
    }
}

fn verify(suite: &str, opts: Options) -> Outcome {
    let suites = parse_suites(suite).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut ok = true;
    for s in suites {
        let r = checks::run(s, &opts);
        print_report(&r);
        ok &= r.passed();
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch("verification failed".into()))
    }
}

fn pseudo_check(opts: Options) -> Outcome {
    let r = checks::run(checks::Suite::Pseudo, &opts);
    println!("{}", r.to_json());
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch("pseudoalgebra suite failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.command {
        Command::Decompose(a) => decompose(&a),
        Command::Table { check, json, .. } => table(check, json),
        Command::Candidates {
            degree,
            xi_passes,
            json,
            md,
        } => candidates(degree, xi_passes, json, md),
        Command::BoundReport { json } => bound_report(json),
        Command::Sing {
            hw,
            degree,
            weight,
            budget,
            json,
        } => sing(hw, degree, weight, budget, json),
        Command::Verify {
            suite,
            seed,
            samples,
            exhaustive,
        } => verify(
            &suite,
            Options {
                seed,
                samples,
                exhaustive,
                ..Options::default()
            },
        ),
        Command::PseudoCheck {
            max_support,
            samples,
            seed,
        } => pseudo_check(Options {
            seed,
            samples,
            max_support,
            ..Options::default()
        }),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
