use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use quadalg::cli::exit_code;
use quadalg::Error;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn quadalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadalg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_input(dir: &Path, text: &str) -> PathBuf {
    let path = dir.join("input.qb");
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn check_example1() {
    let o = quadalg(&["check", &fixture("example1.qb")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\"quantum_binomial\":true"));
    assert!(out.contains("\"symmetric\":true"));
}

#[test]
fn classify_two_generators() {
    let o = quadalg(&["classify", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("classes: 1\n"));
    assert!(out.contains("total_quantum_binomial: 1\n"));
}

#[test]
fn harness_on_non_pbw_example_is_all_false() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("h.json");
    let o = quadalg(&["harness", &fixture("example2.qb"), "--report", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    let t3 = &v["harness"]["theorem3"];
    assert_eq!(t3["all_equal"], true);
    for key in [
        "pbw_finite_gldim",
        "pbw_polynomial_growth",
        "as_regular",
        "yang_baxter",
        "skew_polynomial",
        "dim_a3",
        "hilbert_series",
        "dual_grassmann",
    ] {
        assert_eq!(t3[key], false, "{key}");
    }
    assert_eq!(t3["pbw_orders"], serde_json::json!([]));
}

#[test]
fn report_file_matches_summary() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let o = quadalg(&["dims", &fixture("example2.qb"), "--max", "4", "--report", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert_eq!(v["command"], "dims");
    assert_eq!(v["dim_A"], serde_json::json!({"0": 1, "1": 4, "2": 10, "3": 18, "4": 28}));
    assert_eq!(v["dual_formula"]["holds"], true);
}

#[test]
fn pbw_order_and_search() {
    let o = quadalg(&["pbw", &fixture("example3.qb"), "--order", "t>x>z>y", "--search"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("pbw_order_count: 8\n"));
    assert!(out.contains("\"is_pbw\":true"));
}

#[test]
fn unknown_generator_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_input(dir.path(), "gens x y\nrel x*z = y*x\n");
    let o = quadalg(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2: unknown generator `z`"));
}

#[test]
fn syntax_error_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_input(dir.path(), "gens x y\nrel x*y y*x\n");
    let o = quadalg(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2, column 9"));
}

#[test]
fn duplicate_monomial_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_input(dir.path(), "gens x y\nrel x*y = y*x\nrel x*y = x*x\n");
    let o = quadalg(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn missing_file_exits_2() {
    let o = quadalg(&["check", "/nonexistent/file.qb"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: cannot read"));
}

#[test]
fn bad_order_exits_2() {
    let o = quadalg(&["pbw", &fixture("example3.qb"), "--order", "t>x>q>y"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn census_bound_exits_2() {
    let o = quadalg(&["classify", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bound exceeded"));
}

#[test]
fn fixture_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let witnesses = dir.path().join("w");
    let o = quadalg(&["suite", "--scope", "fixtures", "--witness-dir", witnesses.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("passed: true"));
    assert_eq!(std::fs::read_dir(&witnesses).unwrap().count(), 0);
}

#[test]
fn violations_map_to_exit_1() {
    let v = Error::TheoremViolation {
        statement: "dim".into(),
        details: "18 != 20".into(),
    };
    assert_eq!(exit_code(Err(v)), 1);
    assert_eq!(exit_code(Err(Error::InvalidInput("x".into()))), 2);
    assert_eq!(exit_code(Ok(1)), 1);
    assert_eq!(exit_code(Ok(0)), 0);
}
