use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn sgchain(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgchain"))
        .args(args)
        .env_remove("SGCHAIN_RADIUS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn doc(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn analyze_table_file() {
    let f = doc("# left zero semigroup\nkind: table\nlabels: p q\nrow: p p\nrow: q q\n");
    let out = sgchain(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["ideals"]["minimal_right"].as_array().unwrap().len(), 2);
    assert_eq!(v["ideals"]["kernel"], serde_json::json!(["p", "q"]));
    assert_eq!(v["classification"]["is_completely_simple"], true);
}

#[test]
fn golden_outputs() {
    for (args, golden) in [
        (&["analyze", "zoo:lz2"][..], include_str!("golden/analyze_lz2.json")),
        (&["chains", "zoo:rees9"][..], include_str!("golden/chains_rees9.json")),
    ] {
        let out = sgchain(args);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden, "{:?}", args);
    }
}

#[test]
fn parse_error_exit_code_and_line() {
    let f = doc("kind: table\nlabels: a b\nrow: a a\nrow: a c\n");
    let out = sgchain(&["green", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4"), "{}", err);
    assert!(out.stdout.is_empty());
}

#[test]
fn non_associative_table_is_input_error() {
    let f = doc("kind: table\nlabels: x y\nrow: x y\nrow: x x\n");
    let out = sgchain(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("not associative"));
}

#[test]
fn missing_file_and_bad_flags() {
    assert_eq!(sgchain(&["analyze", "/nonexistent/instance.txt"]).status.code(), Some(2));
    assert_eq!(sgchain(&["rewrite", "zoo:abb_aba"]).status.code(), Some(2));
    assert_eq!(sgchain(&["green", "zoo:free2"]).status.code(), Some(2));
    assert_eq!(sgchain(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn socle_sides() {
    let out = sgchain(&["socle", "zoo:x_union", "--side", "right"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["socle"]["null_part"], serde_json::json!(["x", "0"]));
    let out = sgchain(&["socle", "zoo:x_union", "--side", "left"]);
    assert_eq!(json(&out)["socle"]["sigma"].as_array().unwrap().len(), 18);
}

#[test]
fn kernel_antichain_of_fifty() {
    let out = sgchain(&["chains", "zoo:abb_aba", "--kernel-only", "--antichain", "50", "--radius", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["antichain"]["size"], 50);
    assert_eq!(v["antichain"]["validated"], true);
    assert_eq!(v["antichain"]["checked_bound"], 12);
    assert_eq!(v["antichain"]["elements"][3], "baaa");
}

#[test]
fn reesz_row_antichain_of_hundred() {
    let f = doc("kind: reesz\nrows: 2\ncols: 2\np: 0 .\np: . 0\n");
    let out = sgchain(&["chains", f.path().to_str().unwrap(), "--antichain", "100", "--row", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["antichain"]["size"], 100);
    assert_eq!(v["antichain"]["verdict_basis"], "Exact");
    assert_eq!(v["annihilator"], "Infinite");
}

#[test]
fn radius_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_sgchain"))
        .args(["chains", "zoo:free1", "--antichain", "2"])
        .env("SGCHAIN_RADIUS", "15")
        .output()
        .unwrap();
    let v = json(&out);
    assert_eq!(v["radius"], 15);
    assert_eq!(v["antichain"]["found"], false);
}

#[test]
fn rewrite_commands() {
    let v = json(&sgchain(&["rewrite", "zoo:abb_aba", "--reduce", "a^2 b^2 a b^2"]));
    assert_eq!(v["normal_form"], "b");
    let v = json(&sgchain(&["rewrite", "zoo:abb_aba", "--normal-forms", "5"]));
    let counts: Vec<u64> = v["normal_forms"].as_array().unwrap().iter().map(|x| x["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![2, 4, 6, 8, 10]);
    let f = doc("kind: presentation\ngens: a b\nrel: a b = b\nrel: b a = a\n");
    let v = json(&sgchain(&["rewrite", f.path().to_str().unwrap(), "--complete"]));
    assert_eq!(v["confluent"], false);
    assert_eq!(v["completed"], true);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "paper-finite", "--seed", "9", "--count", "12"];
    let a = sgchain(&args);
    let b = sgchain(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["schema"], 1);
    assert!(v["summary"]["distinct_checks"].as_u64().unwrap() >= 30);
}

#[test]
fn verify_reports_mutation() {
    let out = sgchain(&["verify", "--suite", "paper-finite", "--count", "2", "--mutate", "c2_0"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let fails: Vec<&Value> = v["records"].as_array().unwrap().iter().filter(|r| r["verdict"] == "Fail").collect();
    assert!(!fails.is_empty());
    for r in fails {
        assert_eq!(r["instance"], "mutated:c2_0");
        assert!(r["witness"].as_str().is_some_and(|w| !w.is_empty()));
    }
}
