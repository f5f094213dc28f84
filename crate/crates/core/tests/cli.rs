use std::process::{Command, Output};

use num_bigint::BigUint;
use serde_json::Value;
use unitfrac::{verify_decomposition, Fraction};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unitfrac")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn big_list(v: &Value) -> Vec<BigUint> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().parse().unwrap())
        .collect()
}

#[test]
fn summarize_json_matches_the_documented_shape() {
    let o = run(&["summarize", "--k", "3", "--format", "json"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), r#"{"k":3,"F":1,"D":[2,3,6],"v":4}"#);
}

#[test]
fn telescope_lists_terms_and_sum() {
    let o = run(&["telescope", "--m", "5"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("sum = 1/5"));
    assert!(s.contains("14 terms"));
}

#[test]
fn empty_enumeration_exits_zero() {
    let o = run(&["enumerate", "--k", "2", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["summarize", "--k", "3", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--target", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["summarize", "--k", "9"]).status.code(), Some(2));
}

#[test]
fn unsat_exits_one() {
    assert_eq!(run(&["anchored", "--m", "4", "--budget", "3"]).status.code(), Some(1));
    let o = run(&["certify", "--from", "4", "--to", "4", "--budget", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("m = 4"));
    assert_eq!(run(&["shortest", "--target", "10/11", "--max-terms", "3"]).status.code(), Some(1));
}

#[test]
fn emitted_decompositions_reverify() {
    let o = run(&["enumerate", "--k", "5", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 72);
    for s in sols {
        assert!(verify_decomposition(&Fraction::one(), &big_list(s)).valid);
    }
    for args in [
        vec!["anchored", "--m", "433", "--format", "json"],
        vec!["decompose", "--target", "9/10", "--exclude", "3", "--format", "json"],
    ] {
        let v: Value = serde_json::from_str(&stdout(&run(&args))).unwrap();
        let target: Fraction = v["target"].as_str().unwrap().parse().unwrap();
        assert!(verify_decomposition(&target, &big_list(&v["denominators"])).valid);
    }
    let v: Value = serde_json::from_str(&stdout(&run(&["shortest", "--target", "9/10", "--format", "json"]))).unwrap();
    assert_eq!(v["min_terms"], 3);
    let target = Fraction::new(9u32, 10u32).unwrap();
    assert!(verify_decomposition(&target, &big_list(&v["witness"])).valid);
}

#[test]
fn output_is_deterministic_across_worker_counts() {
    let a = run(&["enumerate", "--k", "6", "--format", "csv", "--jobs", "1"]);
    let b = run(&["enumerate", "--k", "6", "--format", "csv", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["certify", "--to", "60", "--jobs", "1"]);
    let b = run(&["certify", "--to", "60", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn certificate_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let p = path.to_str().unwrap();
    let o = run(&["certify", "--from", "2", "--to", "100", "--budget", "41", "--out", p]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["range_from", "range_to", "budget", "entries", "tool_version"]);
    assert_eq!(v["entries"].as_array().unwrap().len(), 99);
    let o = run(&["verify", "--in", p]);
    assert!(o.status.success(), "{}", stdout(&o));

    let text = std::fs::read_to_string(&path).unwrap().replacen("\"3\"", "\"5\"", 1);
    std::fs::write(&path, text).unwrap();
    assert_eq!(run(&["verify", "--in", p]).status.code(), Some(1));
}

#[test]
fn report_formats() {
    let o = run(&["report", "--k", "4", "--format", "csv", "--vose-C", "10"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "k,F,|D|,v,lower_bound,upper_bound");
    assert!(lines[4].starts_with("4,6,15,11,"));
    assert!(lines[4].ends_with(",26"));
    let o = run(&["report", "--k", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["c_conditional_on_C"], true);
    assert_eq!(v["rows"][2]["v"], 4);
}

#[test]
fn split_and_extend() {
    let o = run(&["split", "--n", "6", "--a", "3", "--format", "csv"]);
    assert_eq!(stdout(&o).trim(), "6,9,18");
    let o = run(&["extend", "--tuple", "2,4,6,12", "--m", "12"]);
    assert!(stdout(&o).contains("(2,4,7,12,42)"));
    assert!(stdout(&o).contains("last_simple"));
    assert_eq!(run(&["extend", "--tuple", "2,3,5", "--m", "2"]).status.code(), Some(2));
}
