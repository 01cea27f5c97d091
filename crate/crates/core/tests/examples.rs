//! Reports on the shipped fixtures, compared byte for byte with the files in
//! `tests/golden/`. Run with `UPDATE_GOLDEN=1` to rewrite them.

use std::path::{Path, PathBuf};
use std::process::Command;

fn manifest() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn report(args: &[String]) -> Vec<u8> {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let status = Command::new(env!("CARGO_BIN_EXE_quadalg"))
        .args(args)
        .arg("--report")
        .arg(&path)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0), "{args:?}");
    std::fs::read(path).unwrap()
}

fn golden(name: &str, args: &[String]) {
    let path: PathBuf = manifest().join("tests/golden").join(name);
    let actual = report(args);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = std::fs::read(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert!(
        expected == actual,
        "{name} differs from the stored report:\n{}",
        String::from_utf8_lossy(&actual)
    );
}

fn report_fixture(stem: &str) {
    let file = manifest().join("fixtures").join(format!("{stem}.qb"));
    golden(
        &format!("{stem}.json"),
        &["report".to_string(), file.display().to_string()],
    );
}

#[test]
fn example1_report() {
    report_fixture("example1");
}

#[test]
fn example2_report() {
    report_fixture("example2");
}

#[test]
fn example3_report() {
    report_fixture("example3");
}

#[test]
fn example3_signed_report() {
    report_fixture("example3_signed");
}

#[test]
fn example3_scaled_report() {
    report_fixture("example3_scaled");
}

#[test]
fn census_n3() {
    golden("classify_n3.json", &["classify".into(), "--n".into(), "3".into()]);
}

#[test]
fn census_n4() {
    golden("classify_n4.json", &["classify".into(), "--n".into(), "4".into()]);
}
