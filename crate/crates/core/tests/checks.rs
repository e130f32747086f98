use e510::checks::{parse_suites, run, Options, Suite};

fn assert_suite(suite: Suite, opts: &Options) {
    let r = run(suite, opts);
    for c in &r.checks {
        assert!(c.passed(), "{suite}/{}: {:?}", c.name, c.counterexample);
        assert!(c.cases > 0, "{suite}/{} ran no cases", c.name);
    }
}

#[test]
fn e510_suite_passes() {
    assert_suite(Suite::E510, &Options::default());
}

#[test]
fn verma_suite_passes() {
    assert_suite(Suite::Verma, &Options::default());
}

#[test]
fn pseudo_suite_passes() {
    assert_suite(Suite::Pseudo, &Options::default());
}

#[test]
fn reports_are_reproducible() {
    let opts = Options { samples: 5, ..Options::default() };
    assert_eq!(run(Suite::Pseudo, &opts).to_json(), run(Suite::Pseudo, &opts).to_json());
}

#[test]
fn suite_names() {
    assert_eq!(parse_suites("all").unwrap().len(), 3);
    assert_eq!(parse_suites("verma").unwrap(), vec![Suite::Verma]);
    assert!(parse_suites("lie").is_err());
}
