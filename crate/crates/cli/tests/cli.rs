use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e510"))
        .args(args)
        .env_remove("E510_BUDGET")
        .output()
        .expect("binary runs")
}

/// Compares stdout with `tests/golden/<name>`. Set `BLESS=1` to rewrite.
fn golden(name: &str, args: &[&str]) {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(String::from_utf8_lossy(&out.stdout), want, "{args:?}");
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exited normally")
}

#[test]
fn table_outputs() {
    golden("table_check.txt", &["table", "--check"]);
    golden("table.md", &["table"]);
    golden("table.json", &["table", "--json"]);
}

#[test]
fn candidate_outputs() {
    golden("candidates_11.txt", &["candidates", "--degree", "11"]);
    golden("candidates_11.json", &["candidates", "--degree", "11", "--json"]);
    golden("candidates_12.md", &["candidates", "--degree", "12", "--md"]);
    golden("candidates_13.txt", &["candidates", "--degree", "13"]);
    golden("candidates_9.txt", &["candidates", "--degree", "9"]);
}

#[test]
fn bound_report_outputs() {
    golden("bound_report.txt", &["bound-report"]);
    golden("bound_report.json", &["bound-report", "--json"]);
}

#[test]
fn decompose_outputs() {
    golden("decompose_tensor.txt", &["decompose", "--tensor", "1,0,0,0", "0,0,0,1"]);
    golden("decompose_ext.md", &["decompose", "--ext", "0,1,0,0", "--k", "2", "--md"]);
    golden(
        "decompose_ext_tensor.json",
        &["decompose", "--ext", "0,0,1,0", "--k", "9", "--tensor-with", "0,0,0,1", "--json"],
    );
}

#[test]
fn sing_outputs() {
    golden("sing_0001_1.txt", &["sing", "--hw", "0,0,0,1", "--degree", "1"]);
    golden("sing_0001_1.json", &["sing", "--hw", "0,0,0,1", "--degree", "1", "--json"]);
}

#[test]
fn suite_outputs() {
    golden("verify_e510.txt", &["verify", "--suite", "e510", "--samples", "3"]);
    golden("pseudo_check.json", &["pseudo-check", "--samples", "3"]);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["verify", "--suite", "bogus"]), 2);
    assert_eq!(code(&["decompose", "--tensor", "1,x", "0,0,0,0"]), 2);
    assert_eq!(code(&["decompose", "--tensor", "0,0,0,0", "0,0,0,0", "--ext", "1,0,0,0", "--k", "1"]), 2);
    assert_eq!(code(&["candidates", "--degree", "11", "--xi-passes", "0"]), 2);
    assert_eq!(code(&["decompose", "--tensor", "-1,0,0,0", "0,0,0,0"]), 2);
}

#[test]
fn degree_cap_suggests_a_weight() {
    let out = run(&["sing", "--hw", "1,0,0,0", "--degree", "20"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--weight"));
}

#[test]
fn budget_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_e510"))
        .args(["sing", "--hw", "0,0,0,1", "--degree", "2"])
        .env("E510_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget of 3"));
}
