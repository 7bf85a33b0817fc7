use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/v1")
}

fn qlike(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qlike")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn report(args: &[&str]) -> (i32, Value) {
    let (code, stdout, stderr) = qlike(args);
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout} {stderr}"));
    (code, v)
}

fn structure(name: &str) -> String {
    fixtures().join("structures").join(name).display().to_string()
}

#[test]
fn analyze_fixture_structures() {
    for (file, label) in [
        ("quaternionic.json", "quaternionic"),
        ("conic_r3.json", "rho-star-quaternionic"),
        ("complex_c4.json", "general"),
    ] {
        let (code, v) = report(&["analyze", &structure(file)]);
        assert_eq!(code, 0, "{file}: {v}");
        assert_eq!(v["command"], "analyze");
        assert_eq!(v["verdict"], "ok");
        assert_eq!(v["result"]["label"], label, "{file}");
        let digest = v["inputs_digest"].as_str().unwrap();
        assert!(digest.len() == 64 && digest.bytes().all(|b| b.is_ascii_hexdigit()));
    }
}

#[test]
fn dual_output_analyzes_as_the_dual_class() {
    let (code, v) = report(&["dual", &structure("conic_r3.json")]);
    assert_eq!(code, 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dual.json");
    std::fs::write(&path, v["result"].to_string()).unwrap();
    let (code, v) = report(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["label"], "rho-quaternionic");
    assert!(v["result"]["flags"].as_array().unwrap().iter().any(|f| f == "co-CR"));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"mode\": \"complex\", \"dim\": 2").unwrap();
    assert_eq!(qlike(&["analyze", broken.to_str().unwrap()]).0, 2);

    let bad_form = dir.path().join("bad_form.json");
    std::fs::write(&bad_form, r#"{"mode":"complex","dim":2,"k":1,"spanning":[["z0^","z1"]]}"#).unwrap();
    assert_eq!(qlike(&["analyze", bad_form.to_str().unwrap()]).0, 2);

    assert_eq!(qlike(&["analyze", dir.path().join("missing.json").to_str().unwrap()]).0, 2);
    assert_eq!(qlike(&["twistor"]).0, 2);
}

#[test]
fn twistor_catalog_entry() {
    let (code, v) = report(&["twistor", "--catalog", "veronese:3"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["report"]["normal"], serde_json::json!([5, 5]));
}

#[test]
fn twistor_from_fixture_file() {
    let path = fixtures().join("catalog/sp-4.json");
    let entry: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("sp4.json");
    std::fs::write(&q, entry["quadruple"].to_string()).unwrap();
    let (code, v) = report(&["twistor", "--file", q.to_str().unwrap()]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["report"]["normal"], serde_json::json!([2, 2]));
}

#[test]
fn text_format_lists_fields() {
    let (code, stdout, _) = qlike(&["twistor", "--catalog", "sp:4", "--text"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().any(|l| l == "verdict: ok"), "{stdout}");
    assert!(stdout.lines().any(|l| l == "result.report.normal: [2,2]"), "{stdout}");
}

#[test]
fn verify_suites_pass() {
    for suite in ["core", "catalog"] {
        let (code, v) = report(&["verify", "--suite", suite]);
        assert_eq!(code, 0, "{suite}: {v}");
    }
}

#[test]
fn fixtures_are_current() {
    let dir = fixtures();
    let (code, _, stderr) = qlike(&["catalog-regen", "--out", dir.to_str().unwrap(), "--check"]);
    assert_eq!(code, 0, "{stderr}");
}

#[test]
fn stale_fixture_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(qlike(&["catalog-regen", "--out", out]).0, 0);
    assert_eq!(qlike(&["catalog-regen", "--out", out, "--check"]).0, 0);
    std::fs::write(dir.path().join("catalog/sp-4.json"), "{}\n").unwrap();
    let (code, _, stderr) = qlike(&["catalog-regen", "--out", out, "--check"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("sp-4.json"), "{stderr}");
}
