use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_desargues"))
        .args(args)
        .current_dir(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../.."))
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_json_lists_bindings_and_witnesses() {
    let out = run(&["check", "geo/desargues.geo", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["passed"], true);
    assert!(report["assertions"]
        .as_array()
        .unwrap()
        .iter()
        .all(|a| a["verdict"] == "holds"));
    assert_eq!(report["bindings"]["A"]["coords"], serde_json::json!(["3", "1", "1"]));
}

#[test]
fn check_reports_evaluation_errors() {
    let out = run(&["check", "geo/eval_errors.geo"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("geo/eval_errors.geo:6:"), "{text}");
    assert!(text.contains("geo/eval_errors.geo:7:"), "{text}");
    assert!(text.ends_with("FAIL\n"));
}

#[test]
fn parse_error_json_goes_to_stdout() {
    let out = run(&["check", "geo/errors/kind.geo", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["error"]["kind"], "kind");
    assert_eq!(
        (report["error"]["line"].as_u64(), report["error"]["column"].as_u64()),
        (Some(4), Some(17))
    );
}

#[test]
fn invalid_fuzz_specs_are_usage_errors() {
    for args in [
        ["fuzz", "--theorem", "desargues", "--trials", "0", "--seed", "1"],
        ["fuzz", "--theorem", "desargues", "--trials", "5", "--seed", "-1"],
        ["fuzz", "--theorem", "pappus", "--trials", "5", "--seed", "1"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
    let out = run(&[
        "fuzz",
        "--theorem",
        "menelaus",
        "--trials",
        "5",
        "--seed",
        "1",
        "--bound",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fuzz_records_have_the_documented_fields() {
    let out = run(&[
        "fuzz",
        "--theorem",
        "desargues",
        "--trials",
        "3",
        "--seed",
        "42",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    for (i, rec) in lines[..3].iter().enumerate() {
        assert_eq!(rec["index"], i);
        for field in ["seed", "points", "verdicts", "witnesses", "rejections"] {
            assert!(!rec[field].is_null(), "missing {field}");
        }
        assert!(rec.get("falsification").is_none());
        assert_eq!(rec["points"]["O"].as_array().unwrap().len(), 3);
    }
    assert_eq!(lines[3]["summary"]["trials"], 3);
}

#[test]
fn seed_changes_the_stream() {
    let a = run(&[
        "fuzz",
        "--theorem",
        "newton-gauss",
        "--trials",
        "5",
        "--seed",
        "1",
        "--json",
    ]);
    let b = run(&[
        "fuzz",
        "--theorem",
        "newton-gauss",
        "--trials",
        "5",
        "--seed",
        "2",
        "--json",
    ]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn text_fuzz_summary() {
    let out = run(&["fuzz", "--theorem", "problem1", "--trials", "50", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("problem1: 50 trials, seed 3, bound 10\n"), "{text}");
    assert!(text.contains("  claim_b: 50/50\n"));
    assert!(text.contains("claim_a_literal: "));
    assert!(text.ends_with("falsifications: 0\n"));
}

#[test]
fn figure_io_errors() {
    let out = run(&["figure", "geo/missing.geo", "-o", "/tmp/never.svg"]);
    assert_eq!(out.status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("no/such/dir/out.svg");
    let out = run(&["figure", "geo/fig1.geo", "-o", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn figure_refuses_programs_with_evaluation_errors() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("e.svg");
    let out = run(&["figure", "geo/eval_errors.geo", "-o", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!target.exists());
}

#[test]
fn demos() {
    let p1 = run(&["demo", "problem1"]);
    assert_eq!(p1.status.code(), Some(0));
    let text = stdout(&p1);
    assert!(text.contains("claim a discrepancy"));
    assert!(text.contains("claim b     A1B1, C1D1, AC: concurrent at ideal [3:1:0]"));

    let p2 = run(&["demo", "problem2"]);
    assert_eq!(p2.status.code(), Some(0));
    let text = stdout(&p2);
    for pair in ["POR / GHI", "POR / JKL", "POR / MNQ", "POR / UVT"] {
        let line = text.lines().find(|l| l.contains(pair)).unwrap();
        assert!(line.ends_with("= Newton-Gauss line"), "{line}");
    }
    assert!(text.contains("iv  centers"));
    assert!(text.contains("v   centers"));
}
