// SPDX-License-Identifier: Apache-2.0

use std::process::Command;

use rotbent::cli::{BentCheckRecord, ClassifyRecord, HcoeffRecord, SearchRecord, SpectrumRecord};
use rotbent::Sanf;

fn rotbent(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rotbent"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn bent_check_examples() {
    for method in ["walsh", "valuation", "auto"] {
        let (code, out, _) = rotbent(&["bent-check", "x1x5", "-n", "8", "--method", method]);
        assert_eq!((code, out.trim()), (0, "bent"), "{method}");
        let (code, out, _) = rotbent(&["bent-check", "x1x2x3+x1x2x4", "-n", "6", "--method", method]);
        assert_eq!((code, out.trim()), (1, "not bent"), "{method}");
    }
    assert_eq!(rotbent(&["bent-check", "x1x2x3", "-n", "7"]).0, 1);
}

#[test]
fn parse_and_usage_errors_exit_2() {
    let (code, _, err) = rotbent(&["bent-check", "x1 x", "-n", "8"]);
    assert_eq!(code, 2);
    assert!(err.contains("error"));
    assert_eq!(rotbent(&["bent-check", "x1x5"]).0, 2);
    assert_eq!(rotbent(&["frobnicate"]).0, 2);
    assert_eq!(rotbent(&["--help"]).0, 0);
    assert_eq!(rotbent(&["hcoeff", "x1x2", "-n", "2"]).0, 2);
    assert_eq!(rotbent(&["hcoeff", "x1x2", "-n", "2", "111"]).0, 2);
    assert_eq!(rotbent(&["nonexist", "x1x2+x1x2x3", "-n", "8"]).0, 2);
}

#[test]
fn classify_lines() {
    let (code, out, _) = rotbent(&["classify-deg2", "-n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "x1x2\ncount: 1\n");
    let (_, out, _) = rotbent(&["classify-deg2", "-n", "8", "--format", "json"]);
    let rec: ClassifyRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(rec.count, 8);
    for s in &rec.sanfs {
        assert_eq!(&Sanf::parse(8, s).unwrap().to_string(), s);
    }
    assert_eq!(rotbent(&["classify-deg2", "-n", "7"]).0, 2);
}

#[test]
fn search_summaries() {
    let (code, out, _) = rotbent(&["search", "-n", "10", "-d", "3"]);
    assert_eq!((code, out.trim()), (0, "0 bent / 4095 tested"));
    let (_, out, _) = rotbent(&["search", "-n", "8", "-d", "2", "--mode", "full"]);
    assert_eq!(out.lines().last(), Some("8 bent / 15 tested"));
    let (_, out, _) = rotbent(&["search", "-n", "6", "-d", "3"]);
    assert_eq!(out.trim(), "0 bent / 15 tested");
    let (_, out, _) = rotbent(&["search", "-n", "8", "-d", "2", "--format", "json"]);
    let rec: SearchRecord = serde_json::from_str(&out).unwrap();
    assert_eq!((rec.bent.len(), rec.candidates_tested, rec.orbit_count), (8, 15, 4));
}

#[test]
fn search_over_budget_points_at_shards() {
    let (code, _, err) = rotbent(&["search", "-n", "10", "-d", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("shard"), "{err}");
}

#[test]
fn checkpoint_resume_skips_done_shards() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ck.jsonl");
    let p = path.to_str().unwrap();
    for i in 0..3 {
        let shard = format!("{i}/3");
        let (code, _, err) = rotbent(&["search", "-n", "10", "-d", "3", "--shard", &shard, "--out", p]);
        assert_eq!(code, 0);
        assert!(!err.contains("from checkpoint"));
    }
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 3);
    let (code, out, err) = rotbent(&["search", "-n", "10", "-d", "3", "--shard", "1/3", "--out", p]);
    assert_eq!(code, 0);
    assert!(err.contains("from checkpoint"), "{err}");
    assert!(out.contains("0 bent"));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
}

#[test]
fn spectrum_and_hcoeff_json_roundtrip() {
    let (_, out, _) = rotbent(&["spectrum", "x1x2", "-n", "2"]);
    assert_eq!(out.trim(), "2 2 2 -2");
    let (_, out, _) = rotbent(&["spectrum", "x1x4", "-n", "6", "--format", "json"]);
    let rec: SpectrumRecord = serde_json::from_str(&out).unwrap();
    assert!(rec.values.iter().all(|v| v.abs() == 8));
    assert_eq!(Sanf::parse(6, &rec.sanf).unwrap().to_string(), "x1x4");

    for route in ["direct", "spectral", "auto"] {
        let (code, out, _) = rotbent(&["hcoeff", "x1x2", "-n", "2", "11", "--route", route]);
        assert_eq!((code, out.trim()), (0, "value=-2 v2=1"));
    }
    let (_, out, _) = rotbent(&["hcoeff", "x1x2x3+x1x2x4", "-n", "6", "--all-u", "--format", "json"]);
    let recs: Vec<HcoeffRecord> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 64);
    let ones = recs.iter().find(|r| r.u == "111111").unwrap();
    assert_eq!(ones.value, 12);
}

#[test]
fn nonexist_compare_table() {
    let (code, out, _) = rotbent(&["nonexist", "x1x2x3+x1x2x4", "-n", "10", "--compare"]);
    assert_eq!(code, 0);
    let row = |name: &str| out.lines().find(|l| l.starts_with(name)).unwrap().to_owned();
    assert!(row("prop2").contains("NOT_BENT"));
    assert!(row("theorem1").contains("INCONCLUSIVE"));
    let (_, out, _) = rotbent(&["nonexist", "x1x2x3", "-n", "9"]);
    assert!(out.contains("odd_n"));
}

#[test]
fn bent_check_json() {
    let (code, out, _) = rotbent(&["--format", "json", "bent-check", "x1x3+x1x5", "-n", "8"]);
    let rec: BentCheckRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(code, 0);
    assert_eq!((rec.bent, rec.walsh, rec.valuation), (true, Some(true), Some(true)));
}
