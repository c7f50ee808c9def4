use std::process::{Command, Output};

use mdc_cli::ColoringDocument;
use mdc_core::validate::validate_assignment;
use mdc_core::OrientedPath;
use serde_json::Value;

fn mdc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mdc"))
        .args(args)
        .output()
        .expect("run mdc")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn color_bfbf() {
    let out = mdc(&["color", "BFBF"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["colors"], 3);
    assert_eq!(doc["valid"], true);
    assert_eq!(doc["n"], 5);
    assert_eq!(doc["classes"]["0"], serde_json::json!([2, 4]));
}

#[test]
fn color_single_edge() {
    let doc = json(&mdc(&["color", "F"]));
    assert_eq!(doc["colors"], 2);
    assert_eq!(doc["classes"], serde_json::json!({"0": [1], "1": [2]}));
}

#[test]
fn color_accepts_arrow_aliases() {
    let doc = json(&mdc(&["color", "<><>"]));
    assert_eq!(doc["orientation"], "BFBF");
}

#[test]
fn random_is_byte_identical() {
    let a = mdc(&["color", "--random", "9", "42"]);
    let b = mdc(&["color", "--random", "9", "42"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["n"], 9);
}

#[test]
fn document_round_trips_through_validator() {
    for orientation in ["BFBF", "FBFBF", "FFBBFBFBBF", ""] {
        let out = mdc(&["color", orientation]);
        let doc: ColoringDocument = serde_json::from_slice(&out.stdout).unwrap();
        let path: OrientedPath = doc.orientation.parse().unwrap();
        let report = validate_assignment(&path, &doc.assignment).unwrap();
        assert_eq!(report.valid, doc.valid);
        let distinct: std::collections::BTreeSet<_> = doc.assignment.iter().collect();
        assert_eq!(distinct.len(), doc.colors);
        for (color, vertices) in &doc.classes {
            for v in vertices {
                assert_eq!(doc.assignment[v - 1], *color);
            }
        }
    }
}

#[test]
fn parse_error_exits_one_with_position() {
    let out = mdc(&["color", "BFxF"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 3"));
}

#[test]
fn validate_command() {
    let ok = mdc(&["validate", "BFBF", "1,0,1,0,2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["valid"], true);

    let merged = mdc(&["validate", "BFBF", "1,0,1,0,1"]);
    assert_eq!(merged.status.code(), Some(1));
    let report = json(&merged);
    assert_eq!(report["dominator"], false);
    assert!(report["domination_violations"]
        .as_array()
        .unwrap()
        .contains(&Value::from(4)));

    assert_eq!(mdc(&["validate", "BFBF", "1,0"]).status.code(), Some(1));
    assert_eq!(mdc(&["validate", "BFBF", "1,a,0"]).status.code(), Some(1));
}

#[test]
fn oracle_command() {
    let out = mdc(&["oracle", "BFBF"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["min_colors"], 3);
    assert_eq!(doc["matches_fast"], true);

    assert_eq!(json(&mdc(&["oracle", "BFBFB"]))["min_colors"], 3);

    let too_big = mdc(&["oracle", "FFFFFFFFFFFFFFFFF"]);
    assert_eq!(too_big.status.code(), Some(1));
}

#[test]
fn survey_command() {
    let out = mdc(&["survey", "--from", "6", "--to", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n=6\tmin=3\tformula=3\tagrees=true"));
    assert!(text.lines().last().unwrap().ends_with("all agree"));

    let oracle = mdc(&["survey", "--from", "4", "--to", "9", "--method", "oracle"]);
    assert_eq!(oracle.status.code(), Some(0));
    assert_eq!(String::from_utf8(oracle.stdout).unwrap().lines().count(), 7);

    assert_eq!(
        mdc(&["survey", "--from", "13", "--method", "oracle"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        mdc(&["survey", "--from", "5", "--method", "slow"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn optimal_command() {
    let doc = json(&mdc(&["optimal", "8"]));
    assert_eq!(doc["orientation"], "FBFBFBF");
    assert_eq!(doc["colors"], 4);
    assert_eq!(mdc(&["optimal", "0"]).status.code(), Some(1));
}

#[test]
fn bench_command() {
    let out = mdc(&["bench", "--sizes", "100,1000", "--repetitions", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "n\tmedian_ns\tsteps\tsteps_per_vertex");
    assert!(lines[3].starts_with("summary\t"));
    assert_eq!(mdc(&["bench", "--repetitions", "2"]).status.code(), Some(1));
}

#[test]
fn export_dot_command() {
    let out = mdc(&["export-dot", "BFBF"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(dot.starts_with("digraph P5 {"));
    assert_eq!(dot.matches(" -> ").count(), 4);
    assert_eq!(out.stdout, mdc(&["export-dot", "BFBF"]).stdout);

    let single = String::from_utf8(mdc(&["export-dot", ""]).stdout).unwrap();
    assert_eq!(single.matches("[label=").count(), 1);
    assert!(!single.contains("->"));

    let plain = String::from_utf8(mdc(&["export-dot", "BFBF", "--plain"]).stdout).unwrap();
    assert!(!plain.contains("fillcolor"));
    let given = mdc(&["export-dot", "BFBF", "--assignment", "1,0,1,0,2"]);
    assert_eq!(given.status.code(), Some(0));
    assert_eq!(
        mdc(&["export-dot", "BFBF", "--assignment", "0,2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(mdc(&["export-dot", "BQ"]).status.code(), Some(1));
}

#[test]
fn unknown_subcommand_is_an_input_error() {
    assert_eq!(mdc(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(mdc(&["--help"]).status.code(), Some(0));
}
