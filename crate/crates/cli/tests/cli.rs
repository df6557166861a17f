use std::fs;
use std::path::Path;
use std::process::Command;

use ade_cli::cache::{self, CacheOutcome};
use ade_cli::{exit, run};
use ade_core::parse_diagram;
use serde_json::Value;

fn ade(dir: &Path, args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["ade", "--cache-dir", dir.to_str().unwrap()];
    argv.extend_from_slice(args);
    let out = run(argv);
    let v = serde_json::from_str(&out.stdout).unwrap_or_else(|_| panic!("not JSON: {}", out.stdout));
    (out.code, v)
}

fn strip_runtime(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("runtime_ms");
            m.values_mut().for_each(strip_runtime);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_runtime),
        _ => {}
    }
}

#[test]
fn ab_square_is_simple_generator() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = ade(dir.path(), &["ab", "A2", "1 1"]);
    assert_eq!(code, exit::OK);
    assert_eq!(v["coords"], serde_json::json!([{"root": [1, 0], "value": 1}]));
}

#[test]
fn domain_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for (args, name) in [
        (vec!["ab", "A2", "1"], "NotPure"),
        (vec!["ab", "A2", "3"], "GeneratorOutOfRange"),
        (vec!["ab", "A2", "1 x"], "UnparsableWord"),
        (vec!["roots", "D3"], "InvalidRank"),
        (vec!["roots", "F4"], "UnparsableSpec"),
        (vec!["weyl-order", "A4", "--cap", "10"], "CapExceeded"),
        (vec!["verify", "an-decomp", "A7"], "RankOutOfRange"),
        (vec!["verify", "an-decomp", "D4"], "InvalidParams"),
        (vec!["verify", "nope", "A2"], "InvalidParams"),
        (vec!["oracle", "A2", "1 1", "--radius", "3/4"], "InvalidParams"),
    ] {
        let (code, v) = ade(dir.path(), &args);
        assert_eq!(code, exit::USAGE, "{args:?}");
        assert_eq!(v["error"], name, "{args:?}");
    }
}

#[test]
fn usage_errors_report_grammar() {
    let out = run(["ade", "frobnicate"]);
    assert_eq!(out.code, exit::USAGE);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"], "Usage");
    assert!(v["message"].as_str().unwrap().contains("Usage:"));
    assert_eq!(run(["ade", "--help"]).code, exit::OK);
}

#[test]
fn oracle_reports_residuals() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = ade(dir.path(), &["oracle", "A2", "1 2 2 -1"]);
    assert_eq!(code, exit::OK);
    assert_eq!(v["coords"], serde_json::json!([{"root": [1, 1], "value": 1}]));
    assert_eq!(v["residuals"].as_array().unwrap().len(), 3);
    assert!(v["max_residual"].as_f64().unwrap() < 1e-6);
}

#[test]
fn a_degenerate_path_is_a_verification_failure() {
    let dir = tempfile::tempdir().unwrap();
    // one sample per half-circle cuts straight through the wall
    let (code, v) = ade(dir.path(), &["oracle", "A2", "1 1", "--samples", "1"]);
    assert_eq!(code, exit::FAILED, "{v}");
    assert_eq!(v["error"], "PathTooCloseToHyperplane");
}

#[test]
fn verify_reports() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = ade(dir.path(), &["verify", "nonsplit", "A2"]);
    assert_eq!(code, exit::OK);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["witness"]["z_infeasibility"]["infeasible"], true);
    assert_eq!(v["witness"]["half_splitting"]["splits"], true);
    for key in ["lemma_id", "diagram", "status", "witness", "residuals", "runtime_ms"] {
        assert!(v.get(key).is_some());
    }
}

#[test]
fn verify_all_is_ordered_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (code, mut a) = ade(dir.path(), &["verify-all", "A4"]);
    let (_, mut b) = ade(dir.path(), &["verify-all", "A4"]);
    assert_eq!(code, exit::OK);
    let ids: Vec<&str> = a["reports"].as_array().unwrap().iter().map(|r| r["lemma_id"].as_str().unwrap()).collect();
    assert_eq!(
        ids,
        ["relations", "positive-simple", "ses", "nonsplit", "splitting-pab", "splitting-zphi", "mapfrompab", "an-decomp"]
    );
    strip_runtime(&mut a);
    strip_runtime(&mut b);
    assert_eq!(a.to_string(), b.to_string());
    let (_, d4) = ade(dir.path(), &["verify-all", "D4"]);
    assert_eq!(d4["reports"].as_array().unwrap().len(), 7);
}

#[test]
fn cache_cold_warm_and_corrupt() {
    let dir = tempfile::tempdir().unwrap();
    let e8 = parse_diagram("E8").unwrap();
    let no_corruption = |e: &cache::CacheError| panic!("unexpected {e}");
    let (cold, o) = cache::roundtrip(dir.path(), &e8, no_corruption).unwrap();
    assert_eq!((o, cold.len()), (CacheOutcome::Cold, 240));
    let path = cache::entry_path(dir.path(), &e8);
    let bytes = fs::read(&path).unwrap();

    let (warm, o) = cache::roundtrip(dir.path(), &e8, no_corruption).unwrap();
    assert_eq!(o, CacheOutcome::Warm);
    assert_eq!(warm.roots(), cold.roots());
    let entry = cache::CacheEntry { format_version: cache::FORMAT_VERSION, key: "E8".into(), payload: warm.to_json() };
    assert_eq!(serde_json::to_vec(&entry).unwrap(), bytes);

    // swap two positive roots: canonical order check must reject it
    let mut v: Value = serde_json::from_slice(&bytes).unwrap();
    v["payload"]["roots"].as_array_mut().unwrap().swap(0, 5);
    fs::write(&path, v.to_string()).unwrap();
    let mut seen = Vec::new();
    let (rebuilt, o) = cache::roundtrip(dir.path(), &e8, |e| seen.push(e.to_string())).unwrap();
    assert_eq!(o, CacheOutcome::Rebuilt);
    assert!(seen[0].contains("corrupt"));
    assert_eq!(rebuilt.roots(), cold.roots());
    assert_eq!(fs::read(&path).unwrap(), bytes);

    for garbage in ["not json", r#"{"format_version":99,"key":"E8","payload":null}"#] {
        fs::write(&path, garbage).unwrap();
        let (_, o) = cache::roundtrip(dir.path(), &e8, |_| {}).unwrap();
        assert_eq!(o, CacheOutcome::Rebuilt);
    }
}

#[test]
fn cache_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let (_, p) = ade(dir.path(), &["cache", "path"]);
    assert_eq!(p["path"], dir.path().to_str().unwrap());
    ade(dir.path(), &["roots", "A3"]);
    ade(dir.path(), &["roots", "D4"]);
    let (code, c) = ade(dir.path(), &["cache", "clear"]);
    assert_eq!((code, c["removed"].as_u64()), (exit::OK, Some(2)));
}

#[test]
fn corrupt_cache_is_noted_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("A2.json"), "{").unwrap();
    let out = run(["ade", "--cache-dir", dir.path().to_str().unwrap(), "roots", "A2"]);
    assert_eq!(out.code, exit::OK);
    assert!(out.stderr.contains("CacheCorrupt"));
}

#[test]
fn binary_exit_codes_and_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_ade");
    let status = |args: &[&str]| {
        Command::new(bin).args(args).env(cache::ENV_VAR, dir.path()).output().unwrap()
    };
    let ok = status(&["ab", "A2", "1 1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(dir.path().join("A2.json").exists());
    assert_eq!(status(&["ab", "A2", "1"]).status.code(), Some(2));
    assert_eq!(status(&["verify", "ses", "E6"]).status.code(), Some(0));
}
