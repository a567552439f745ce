use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_entcont");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&["verify", "--suite", "nonsense"]), 2);
    assert_eq!(code(&["figure1", "--trials", "0"]), 2);
    assert_eq!(code(&["figure1", "--ensemble", "equal-marginal", "--dim", "7"]), 2);
    assert_eq!(code(&["verify", "--ensemble", "equal-marginal", "--trials", "5"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn tightness_passes_and_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = run(&["tightness", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("dim,epsilon,entropy_gap,bound,af,slack,af_slack\n"));
    assert_eq!(text.lines().count(), 13);
}

#[test]
fn small_figure1_run_writes_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.csv");
    let out = run(&["figure1", "--dim", "4", "--trials", "5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(path).unwrap();
    assert_eq!(text.lines().next().unwrap(), entcont::experiments::CSV_HEADER.join(","));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn equal_marginal_figure1_on_composite_dimension() {
    let out = run(&["figure1", "--ensemble", "equal-marginal", "--dim", "6", "--trials", "20"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_writes_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = run(&["verify", "--suite", "dmax", "--dim", "3", "--trials", "20", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&std::fs::read(path).unwrap()).unwrap();
    assert_eq!(report["suite"], "dmax");
    assert!(report["checks"].as_array().is_some_and(|c| !c.is_empty()));
}

#[test]
fn impossible_tolerance_fails() {
    let out = run(&["verify", "--suite", "proof-lemmas", "--dim", "3", "--trials", "50", "--tolerance", "1e-300"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn unwritable_output_names_the_path() {
    let out = run(&["figure1", "--dim", "3", "--trials", "2", "--out", "/nonexistent/dir/x.csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/dir/x.csv"));
}
