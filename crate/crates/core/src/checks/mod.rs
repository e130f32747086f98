//! Seeded property suites over the exact engines. Each check stops at its
//! first counterexample and reports it.

mod algebra;
mod module;
mod pseudo;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use algebra::{e510_suite, jacobi_exhaustive};
pub use module::{representation_check, quotient_check, xi_lemma_check, verma_suite};
pub use pseudo::pseudo_suite;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            suite: Suite,
            seed: u64,
            passed: bool,
            checks: &'a [CheckOutcome],
        }
        let out = Out {
            suite: self.suite,
            seed: self.seed,
            passed: self.passed(),
            checks: &self.checks,
        };
        serde_json::to_string_pretty(&out).expect("serializable")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    E510,
    Verma,
    Pseudo,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::E510 => "e510",
            Suite::Verma => "verma",
            Suite::Pseudo => "pseudo",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite {0:?}; expected e510, verma, pseudo or all")]
pub struct UnknownSuite(pub String);

/// Parses a suite name; `all` expands to every suite.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>, UnknownSuite> {
    match s {
        "all" => Ok(vec![Suite::E510, Suite::Verma, Suite::Pseudo]),
        other => other.parse().map(|x| vec![x]),
    }
}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "e510" => Ok(Suite::E510),
            "verma" => Ok(Suite::Verma),
            "pseudo" => Ok(Suite::Pseudo),
            _ => Err(UnknownSuite(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    /// Random samples per sampled check.
    pub samples: usize,
    /// Largest `|I|` of basis supports in the pseudoalgebra suite.
    pub max_support: u32,
    /// Run the super-Jacobi check over every unordered basis triple.
    pub exhaustive: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 7,
            samples: 20,
            max_support: 2,
            exhaustive: false,
        }
    }
}

pub fn run(suite: Suite, opts: &Options) -> SuiteReport {
    let checks = match suite {
        Suite::E510 => e510_suite(opts),
        Suite::Verma => verma_suite(opts),
        Suite::Pseudo => pseudo_suite(opts),
    };
    SuiteReport {
        suite,
        seed: opts.seed,
        checks,
    }
}

/// Counts cases until the first failure.
pub(crate) struct Tally {
    name: String,
    cases: u64,
    counterexample: Option<String>,
}

impl Tally {
    pub(crate) fn new(name: &str) -> Self {
        Tally {
            name: name.to_string(),
            cases: 0,
            counterexample: None,
        }
    }

    pub(crate) fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    /// Records one case; `detail` is only built on failure.
    pub(crate) fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if self.failed() {
            return;
        }
        self.cases += 1;
        if !ok {
            self.counterexample = Some(detail());
        }
    }

    pub(crate) fn error(&mut self, e: impl fmt::Display) {
        if !self.failed() {
            self.counterexample = Some(format!("error: {e}"));
        }
    }

    pub(crate) fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}
