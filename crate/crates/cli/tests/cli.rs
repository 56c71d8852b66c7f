use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_groupomega"))
        .args(args)
        .env_remove("GROUPOMEGA_BUDGET")
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr))
    });
    assert_eq!(v["schema"], 1);
    (out.status.code().unwrap(), v)
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("groupomega-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn slice_bound_golden() {
    let (code, v) = run_json(&["slice-bound", "ut:4,2", "-p", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["pDegrees"], json!([3, 2, 1]));
    assert_eq!(v["deltaG"], "5");
    assert_eq!(v["order"], "64");
}

#[test]
fn young_ratio_golden() {
    let (code, v) = run_json(&["young", "ratio", "--hexagon", "6", "--triangle", "13"]);
    assert_eq!(code, 0);
    assert_eq!(v["ratio"], "2940/1573");
    assert_eq!(v["numerator"]["n"], 91);
}

#[test]
fn cyclic_border_golden() {
    let (code, v) = run_json(&["matching", "cyclic", "-m", "100"]);
    assert_eq!(code, 0);
    assert_eq!(v["cardinality"], 50);
    assert_eq!(v["border"], true);
}

#[test]
fn nilpotent_bound_golden() {
    let out = run(&["nilpotent-bound", "product:abelian:2,2,2,2|cyclic:3"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("33"));
}

#[test]
fn tpp_verdicts_and_exit_codes() {
    let good = temp_file("good.json", r#"{"group":"sym:3","triples":[{"S":[0,1],"T":[0,2],"U":[0]}]}"#);
    let (code, v) = run_json(&["tpp", "verify", good.to_str().unwrap()]);
    assert_eq!((code, v["holds"].clone()), (0, json!(true)));

    let bad = temp_file("bad.json", r#"{"group":"cyclic:4","triples":[{"S":[0,1],"T":[0,1],"U":[0,1,2]}]}"#);
    let (code, v) = run_json(&["tpp", "verify", bad.to_str().unwrap()]);
    assert_eq!((code, v["holds"].clone()), (1, json!(false)));

    let out = Command::new(env!("CARGO_BIN_EXE_groupomega"))
        .args(["tpp", "verify", good.to_str().unwrap()])
        .env("GROUPOMEGA_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["--budget", "1", "tpp", "verify", good.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["group", "info", "cyclic:"]).status.code(), Some(2));
    assert_eq!(run(&["slice-bound", "ut:3,2", "-p", "4"]).status.code(), Some(2));
    assert_eq!(run(&["tpp", "verify", "/nonexistent/file.json"]).status.code(), Some(2));
    let junk = temp_file("junk.json", "{not json");
    assert_eq!(run(&["tpp", "verify", junk.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn tensor_ranks_from_file() {
    // Diagonal tensor of size 2 over F_2.
    let t = temp_file("diag.txt", "2 2 2 2\n10\n00\n00\n01\n");
    let (code, v) = run_json(&["tensor", "slicerank", t.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["sliceRank"], 2);
    let (_, v) = run_json(&["tensor", "flatrank", t.to_str().unwrap()]);
    assert_eq!(v["flatRank"], 2);
}

#[test]
fn matching_chain_and_verify() {
    let (code, v) = run_json(&["matching", "chain", "ut:3,3", "-p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["cardinality"], 8);
    let m = temp_file("m.json", r#"{"group":"cyclic:5","s":[0,1],"t":[0,1],"u":[0,3]}"#);
    let (code, _) = run_json(&["matching", "verify", m.to_str().unwrap()]);
    assert_eq!(code, 0);
    let m = temp_file("m_bad.json", r#"{"group":"cyclic:5","s":[0,1],"t":[0,1],"u":[0,4]}"#);
    let (code, v) = run_json(&["matching", "verify", m.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(!v["counterexample"].is_null());
}

#[test]
fn young_and_explore_commands() {
    let (code, v) = run_json(&["young", "triangle", "-m", "13"]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 91);
    assert_eq!(v["necTppVacuous"], true);
    let (code, _) = run_json(&["young", "binomial", "-n", "60"]);
    assert_eq!(code, 0);
    let (code, _) = run_json(&["young", "scan", "--c", "0.1", "--d", "2", "--shapes", "triangle:2..6"]);
    assert!(code == 0 || code == 1);
    let (code, _) = run_json(&["explore", "delta-prime", "--c", "-2"]);
    assert_eq!(code, 0);
}

#[test]
fn group_and_jennings_text() {
    let out = run(&["group", "info", "sym:4"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("24"));
    let (code, v) = run_json(&["jennings", "cyclic:8", "-p", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["pDegrees"], json!([1, 1, 0, 1]));
    let (code, _) = run_json(&["ideal-dims", "abelian:2,2", "-p", "2"]);
    assert_eq!(code, 0);
}

#[test]
fn omega_on_instance() {
    let f = temp_file("s3.json", r#"{"group":"sym:3","triples":[{"S":[0,1],"T":[0,2],"U":[0,3]}]}"#);
    let (code, v) = run_json(&["omega", f.to_str().unwrap(), "--degrees", "1,1,2"]);
    assert!(code == 0 || code == 1, "{v}");
    assert!(v.get("omegaStar").is_some(), "{v}");
}
