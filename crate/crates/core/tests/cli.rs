use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mobius-pauli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

#[test]
fn pair_matches_golden() {
    let out = bin(&["pair", "--n", "5", "--p", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        golden("pair_n5_p2.json")
    );
}

#[test]
fn pauli_demo_matches_golden() {
    let out = bin(&["pauli-demo"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, golden("pauli_demo.json"));
    let doc: Value = serde_json::from_str(&text).unwrap();
    let row: Vec<&str> = doc["payload"]["pq_table"][0]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(row, ["x00", "y00", "zx0", "zy0", "zzx", "zzy"]);
    assert_eq!(doc["payload"]["element_count"], 48);
    let m = doc["payload"]["commutation"].as_array().unwrap();
    for i in 0..12 {
        for j in 0..12 {
            let expect = u64::from(i / 6 != j / 6 && i % 6 != j % 6);
            assert_eq!(m[i][j], expect, "entry [{i}][{j}]");
        }
    }
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["pair", "--n", "7", "--p", "3"][..],
        &["pauli-demo", "--format", "csv"],
        &["nested", "--n", "7", "--p", "5", "--indices", "1,2,4,6"],
        &["check-theorem2", "--n", "3", "--p", "2", "--format", "text"],
    ] {
        assert_eq!(bin(args).stdout, bin(args).stdout, "{args:?}");
    }
}

#[test]
fn keys_are_sorted() {
    let text = String::from_utf8(bin(&["pair", "--n", "3", "--p", "3"]).stdout).unwrap();
    let top: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    assert_eq!(top, ["command", "parameters", "payload", "schema_version"]);
}

#[test]
fn verify_roundtrip_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.json");
    let p = path.to_str().unwrap();
    let out = bin(&["pair", "--n", "5", "--p", "3", "--output", p]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());

    let out = bin(&["verify", p]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["payload"]["valid"], true);

    // move Q_0 onto Q_1: now it lies in face opposite of more than one P_j
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    doc["payload"]["second"][0] = doc["payload"]["second"][1].clone();
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = bin(&["verify", p]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    assert_eq!(report["payload"]["valid"], false);
    assert!(!report["payload"]["failures"].as_array().unwrap().is_empty());
    assert!(!out.stderr.is_empty());

    // a zero vertex is not a point at all
    doc["payload"]["first"][2] = serde_json::json!([0, 0, 0, 0, 0, 0]);
    std::fs::write(&path, doc.to_string()).unwrap();
    assert_eq!(code(&bin(&["verify", p])), 3);

    let text = golden("pair_n5_p2.json");
    std::fs::write(&path, &text[..text.len() / 3]).unwrap();
    assert_eq!(code(&bin(&["verify", p])), 3);

    assert_eq!(
        code(&bin(&[
            "verify",
            dir.path().join("missing.json").to_str().unwrap()
        ])),
        3
    );
}

#[test]
fn nested_pair_center() {
    let out = bin(&["nested", "--n", "5", "--p", "2", "--indices", "0,1,2,3"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(
        doc["payload"]["ambient"]["center"],
        serde_json::json!([1, 1, 1, 1, 0, 0])
    );
    assert_eq!(doc["payload"]["valid"], true);
}

#[test]
fn classify_examples() {
    let doc = json(&bin(&["classify", "--vector", "111111"]));
    assert_eq!(doc["payload"]["class"], "even_weight_center");
    assert_eq!(doc["payload"]["full_pair"], true);
    let doc = json(&bin(&["classify", "--vector", "110000"]));
    assert_eq!(doc["payload"]["class"], "edge_point");
    assert_eq!(doc["payload"]["indices"], serde_json::json!([0, 1]));
    let doc = json(&bin(&["classify", "--vector", "111000"]));
    assert_eq!(doc["payload"]["class"], "odd_weight");
}

#[test]
fn theorem2_command() {
    for (n, p) in [("5", "2"), ("3", "3"), ("3", "2")] {
        let out = bin(&["check-theorem2", "--n", n, "--p", p]);
        assert_eq!(code(&out), 0, "n={n} p={p}");
        assert_eq!(json(&out)["payload"]["theorem2"]["all_hold"], true);
    }
    let doc = json(&bin(&["check-theorem2", "--n", "5", "--p", "2"]));
    assert_eq!(doc["payload"]["x_family"][0], "x00");
    assert_eq!(doc["payload"]["y_family"][5], "00x");
}

#[test]
fn parameter_errors_exit_two() {
    for args in [
        &["pair", "--n", "4", "--p", "2"][..],
        &["pair", "--n", "3", "--p", "4"],
        &["pair", "--n", "3", "--p", "11"],
        &["pair", "--n", "three", "--p", "2"],
        &["nested", "--n", "5", "--p", "2", "--indices", "0,1,2"],
        &["nested", "--n", "5", "--p", "2", "--indices", "2,1,0,3"],
        &["classify", "--vector", "000000"],
        &["classify", "--vector", "10000"],
        &["check-theorem2", "--n", "5", "--p", "7"],
        &["pair", "--n", "3", "--p", "2", "--format", "xml"],
        &["frobnicate"],
    ] {
        let out = bin(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn csv_projection_of_pair() {
    let out = bin(&["pair", "--n", "3", "--p", "2", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let mut rdr = csv::Reader::from_reader(&out.stdout[..]);
    let rows: Vec<(String, String)> = rdr.deserialize().map(|r| r.unwrap()).collect();
    assert!(rows.contains(&("payload.center".into(), "1 1 1 1".into())));
    assert!(rows.contains(&("payload.valid".into(), "true".into())));
}
