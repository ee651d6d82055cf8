//! End-to-end checks of the binary: exit codes, record schemas, sweep
//! determinism, and the classification table.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqblocks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON value")
}

#[test]
fn witness_records() {
    let out = run(&["witness", "sym", "-n", "9", "-p", "3", "-q", "2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["partition"], "1^9");
    assert_eq!(v["case"], "Sign");
    assert_eq!(v["degree"], "1");

    let out = run(&["witness", "alt", "-n", "9", "-p", "3", "-q", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["partition"], "1^4,5");
    assert_eq!(v["constituent"], "plus");
    assert_eq!(v["degree"], "35");

    let out = run(&[
        "witness", "typebc", "-n", "3", "--field", "3", "-p", "2", "-q", "5",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["case"], "I");
    assert_eq!(v["label"]["top"], serde_json::json!([0, 2]));
    assert_eq!(v["label"]["bottom"], serde_json::json!([2]));

    let out = run(&[
        "witness", "typea", "-n", "5", "--field", "2", "-p", "31", "-q", "7",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["label"], "1^3,2");
    assert_eq!(v["case"], "IIa");

    let out = run(&[
        "witness",
        "typea",
        "-n",
        "2",
        "--field",
        "3",
        "--epsilon",
        "-1",
        "-p",
        "2",
        "-q",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(2), "order bound guard");
}

#[test]
fn usage_guards_exit_two() {
    let out = run(&["witness", "sym", "-n", "2", "-p", "2", "-q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = run(&["witness", "typea", "-n", "4", "-p", "2", "-q", "5"]);
    assert_eq!(out.status.code(), Some(2), "missing --field");

    let out = run(&["witness", "nosuch", "-n", "4", "-p", "2", "-q", "3"]);
    assert_eq!(out.status.code(), Some(2), "unknown family");

    let out = run(&["verify", "sym", "-n", "50", "-p", "3", "-q", "7"]);
    assert_eq!(out.status.code(), Some(2), "oracle bound");
}

#[test]
fn verify_reports() {
    let out = run(&["verify", "sym", "-n", "10", "-p", "3", "-q", "7"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!(v["cardinality"].as_u64().unwrap() > 1);
    assert_eq!(v["witness_contained"], true);

    let out = run(&["verify", "alt", "-n", "9", "-p", "3", "-q", "2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["cardinality"], 3);

    let out = run(&[
        "verify", "typebc", "-n", "3", "--field", "3", "-p", "2", "-q", "5",
    ]);
    assert!(out.status.success());
}

#[test]
fn sweep_is_deterministic_and_reparses() {
    let dir = std::env::temp_dir();
    let one = dir.join("pqblocks_sweep_jobs1.jsonl");
    let four = dir.join("pqblocks_sweep_jobs4.jsonl");
    let csv = dir.join("pqblocks_sweep.csv");
    let out = run(&[
        "sweep",
        "sym",
        "--n-max",
        "14",
        "--oracle",
        "--out",
        one.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let summary = String::from_utf8_lossy(&out.stderr);
    assert!(summary.contains("0 failures"), "{summary}");
    let out = run(&[
        "sweep",
        "sym",
        "--n-max",
        "14",
        "--oracle",
        "--jobs",
        "4",
        "--out",
        four.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let a = std::fs::read_to_string(&one).unwrap();
    let b = std::fs::read_to_string(&four).unwrap();
    assert_eq!(a, b, "records identical across parallelism widths");
    assert!(!a.is_empty());
    for line in a.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("line re-parses");
        assert_eq!(v["ok"], true);
        assert!(v["oracle"]["cardinality"].as_u64().unwrap() > 1);
    }
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = csv_text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "group,n,p,q,intersection,witness_found,witness_label"
    );
    assert_eq!(csv_text.lines().count(), a.lines().count() + 1);
}

#[test]
fn sweep_empty_range_is_ok() {
    let out = run(&["sweep", "sym", "--n-min", "10", "--n-max", "9"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn sweep_lie_families() {
    let out = run(&[
        "sweep", "typebc", "--n-max", "5", "--fields", "2,3", "--oracle", "--jobs", "2",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().count() > 10);

    // A bounded sweep at a rank where the cyclotomic route would overflow.
    let out = run(&[
        "sweep",
        "typea",
        "--n-min",
        "60",
        "--n-max",
        "64",
        "--fields",
        "2",
        "--prime-bound",
        "13",
    ]);
    assert!(out.status.success());
}

#[test]
fn classify_table() {
    let out = run(&["classify", "--max-n", "40", "--json", "--no-oracle"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let rows: Vec<(u64, u64)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["n"].as_u64().unwrap(), r["p"].as_u64().unwrap()))
        .collect();
    assert_eq!(
        rows,
        vec![(4, 3), (5, 5), (8, 7), (9, 3), (17, 17), (32, 31)]
    );

    let out = run(&["classify", "--max-n", "12"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("9\t3\t2"));
    assert!(text.contains("oracle cross-checked"));

    let out = run(&["classify", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["classify", "--max-n", "61"]);
    assert_eq!(out.status.code(), Some(2));
}
