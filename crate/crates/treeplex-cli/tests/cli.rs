//! End-to-end checks against the compiled binary.

use std::process::{Command, Output};

fn treeplex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treeplex"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn enumerate_emits_canonical_json() {
    let out = treeplex(&["enumerate", "--kind", "planar-trees", "--n", "3"]);
    assert!(out.status.success());
    let records: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let records = records.as_array().unwrap();
    assert_eq!(records.len(), 5);
    let codes: Vec<&str> = records.iter().map(|r| r["code"].as_str().unwrap()).collect();
    let mut sorted = codes.clone();
    sorted.sort_unstable();
    assert_eq!(codes, sorted, "records arrive in canonical order");
    assert!(codes.contains(&"1(2(3))"));
}

#[test]
fn export_dot_renders_a_digraph() {
    let out = treeplex(&["export-dot", "--kind", "bool", "--n", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches(" -> ").count(), 4, "boolean lattice on 2 atoms has 4 covers");
}

#[test]
fn out_flag_writes_the_file() {
    let path = std::env::temp_dir().join(format!("treeplex-cli-test-{}.json", std::process::id()));
    let out = treeplex(&[
        "enumerate",
        "--kind",
        "ncht",
        "--n",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let records: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(records.as_array().unwrap().len(), 4);
}

#[test]
fn out_of_range_sizes_fail_loudly() {
    let out = treeplex(&["enumerate", "--kind", "planar-trees", "--n", "99"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("out of range"), "stderr names the problem: {err}");
}

#[test]
fn verify_json_report_round_trips() {
    let out = treeplex(&["verify", "--suite", "planar", "--n", "3", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["suite"], "planar");
    assert_eq!(report["overall"], "pass");
    assert!(report["checks"].as_array().unwrap().len() >= 3);
}
