use amalgams::cli::{main_with, EXIT_CHECK_FAILED, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};
use std::path::Path;

fn run(args: &[&str]) -> i32 {
    main_with(std::iter::once("amalgam").chain(args.iter().copied()))
}

fn lines(path: &Path) -> Vec<serde_json::Value> {
    std::fs::read_to_string(path).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]), EXIT_USAGE);
    assert_eq!(run(&["complete", "--target", "m23"]), EXIT_USAGE);
    assert_eq!(run(&["graph", "--completion", "m24", "--bogus"]), EXIT_USAGE);
    assert_eq!(run(&["complete"]), EXIT_USAGE);
}

#[test]
fn structure_passes_and_report_is_sorted() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    assert_eq!(run(&["structure", "--no-timing", "--out", out.to_str().unwrap()]), EXIT_OK);
    let rows = lines(&out);
    let (summary, checks) = rows.split_last().unwrap();
    assert_eq!(summary["summary"], true);
    assert_eq!(summary["failed"], 0);
    assert_eq!(summary["passed"].as_u64().unwrap() as usize, checks.len());
    let keys: Vec<(String, String)> =
        checks.iter().map(|c| (c["suite"].as_str().unwrap().into(), c["check"].as_str().unwrap().into())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(checks.iter().all(|c| c.get("elapsed_ms").is_none()));
}

#[test]
fn coset_limit_exits_3_with_partial_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let code = run(&["complete", "--target", "m24", "--max-cosets", "500", "--no-cache", "--out", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_RESOURCE);
    let rows = lines(&out);
    assert!(rows.iter().any(|r| r["suite"] == "presentations" && r["status"] == "pass"));
    assert!(rows.iter().any(|r| r["suite"] == "complete.m24" && r["status"] == "fail"));
}

#[test]
fn warm_cache_gives_identical_report() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let (a, b) = (dir.path().join("a.jsonl"), dir.path().join("b.jsonl"));
    let args = |out: &Path| {
        vec![
            "complete".to_string(),
            "--target".into(),
            "m24".into(),
            "--strategy".into(),
            "both".into(),
            "--no-timing".into(),
            "--cache".into(),
            cache.to_str().unwrap().into(),
            "--out".into(),
            out.to_str().unwrap().into(),
        ]
    };
    assert_eq!(main_with(std::iter::once("amalgam".to_string()).chain(args(&a))), EXIT_OK);
    assert!(cache.join("m24.first.ctb").exists());
    assert_eq!(main_with(std::iter::once("amalgam".to_string()).chain(args(&b))), EXIT_OK);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    // A corrupted cache entry is recomputed, not trusted.
    let entry = cache.join("m24.first.ctb");
    let mut bytes = std::fs::read(&entry).unwrap();
    let mid = bytes.len() / 2;
    bytes[mid] ^= 0x55;
    std::fs::write(&entry, &bytes).unwrap();
    assert_eq!(main_with(std::iter::once("amalgam".to_string()).chain(args(&b))), EXIT_OK);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn presentation_file_enumerates() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a5.txt");
    std::fs::write(&file, "gens: x y\nrel: x^2\nrel: y^3\nrel: (x*y)^5\nsub: y\n").unwrap();
    let out = dir.path().join("r.jsonl");
    let code = run(&["complete", "--presentation", file.to_str().unwrap(), "--strategy", "both", "--out", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let rows = lines(&out);
    let index = rows.iter().find(|r| r["check"] == "file.index").unwrap();
    assert_eq!(index["actual"], "20");
    assert!(rows.iter().any(|r| r["check"] == "file.strategies_agree" && r["status"] == "pass"));
    assert!(rows.last().unwrap()["inputs"][0][0] == "presentation");
}

#[test]
fn he_graph_is_skipped_without_deep() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    assert_eq!(run(&["graph", "--completion", "he", "--out", out.to_str().unwrap()]), EXIT_OK);
    let rows = lines(&out);
    assert_eq!(rows[0]["status"], "skipped");
    assert_eq!(rows.last().unwrap()["skipped"], 1);
}

#[test]
fn failed_check_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    // An undeclared generator in a `sub:` line is reported as a failed check.
    std::fs::write(&file, "gens: x\nrel: x^3\nsub: y\n").unwrap();
    assert_eq!(run(&["complete", "--presentation", file.to_str().unwrap()]), EXIT_CHECK_FAILED);
}
