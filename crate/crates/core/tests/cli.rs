//! End-to-end tests of the `spectral-bounds` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectral-bounds"))
        .args(args)
        .env_remove("SPECTRAL_BOUNDS_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn turan_prints_root_and_eigenvalue() {
    let out = run(&["turan", "--r", "2", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2.449489742783\n2.449489742783\n");
}

#[test]
fn mu_from_graph6_and_edge_list() {
    let out = run(&["mu", "D?{"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2.000000000000\n");

    let dir = std::env::temp_dir().join(format!("spectral-bounds-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.txt");
    std::fs::write(&path, "5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let out = run(&["mu", "--edges", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2.000000000000\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gen_friendship() {
    let out = run(&["gen", "--family", "friendship", "--t", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let g = spectral_bounds::graph::graph6::from_graph6(text.trim()).unwrap();
    assert_eq!(g, spectral_bounds::graph::friendship(2).unwrap());
    assert_eq!(text, "D{c\n");
}

#[test]
fn report_is_json_with_every_bound() {
    let out = run(&["report", "Dhc", "--r", "2", "--k", "0", "--l", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["n"], 5);
    let bounds = v["bounds"].as_object().unwrap();
    assert_eq!(bounds.len(), 7);
    assert_eq!(bounds["th3_upper"]["status"], "applicable");
    assert_eq!(bounds["th3_upper"]["tight"], true);
    assert_eq!(bounds["th2_gap_threshold"]["status"], "not-applicable");
}

#[test]
fn verify_writes_a_passing_record() {
    let out = run(&["verify", "--theorem", "3", "--k", "0", "--l", "1", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["campaign"], "theorem3");
    assert_eq!(v["passed"], true);
    assert_eq!(v["graphs_checked"], (1..=6u32).map(|n| 1u64 << (n * (n - 1) / 2)).sum::<u64>());
}

#[test]
fn verify_multiple_r_values_and_out_path() {
    let dir = std::env::temp_dir().join(format!("spectral-bounds-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("records.json");
    let out = run(&[
        "verify",
        "--theorem",
        "1",
        "--r",
        "2,3",
        "--n-min",
        "4",
        "--n-max",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert_eq!(records[0]["params"]["r"], 2);
    assert_eq!(records[1]["params"]["r"], 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn thread_override_keeps_records_identical() {
    let strip = |out: Output| {
        let mut v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        v.as_object_mut().unwrap().remove("wall_time_secs");
        v
    };
    let args = ["verify", "--theorem", "2", "--n-max", "6"];
    let one = Command::new(env!("CARGO_BIN_EXE_spectral-bounds"))
        .args(args)
        .env("SPECTRAL_BOUNDS_THREADS", "1")
        .output()
        .unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_spectral-bounds"))
        .args(args)
        .env("SPECTRAL_BOUNDS_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(strip(one), strip(four));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["mu"],
        &["mu", "D?"],
        &["turan", "--r", "1", "--n", "5"],
        &["gen", "--family", "friendship"],
        &["verify", "--theorem", "3", "--k", "2", "--l", "1"],
        &["verify", "--theorem", "1"],
        &["verify", "--theorem", "2", "--n-max", "8"],
        &["verify", "--theorem", "2", "--tol", "0.1"],
        &["verify", "--theorem", "2", "--graph6", "/nonexistent/file.g6"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
