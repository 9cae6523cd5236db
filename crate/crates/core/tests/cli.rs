//! End-to-end tests of the `rainbowsat` binary: exact output bytes, exit
//! codes, and schedule independence under `--jobs`.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rainbowsat"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn tmp_file(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("rainbowsat-cli-{name}-{}", std::process::id()))
}

#[test]
fn construct_block_exact_bytes() {
    let out = run(&["construct", "H", "--ell", "5"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "5 5\n0 1 1\n0 2 2\n1 2 3\n1 3 4\n1 4 5\n2 3 5\n2 4 4\n"
    );
}

#[test]
fn construct_block_rejects_small_order() {
    let out = run(&["construct", "H", "--ell", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("too small"));
}

#[test]
fn construct_and_check_union() {
    let path = tmp_file("gstar.ecg");
    let out = run(&[
        "construct",
        "gstar",
        "--ell",
        "5",
        "--k",
        "2",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let check = run(&[
        "check",
        "saturated",
        "--ell",
        "5",
        "--t",
        "5",
        path.to_str().unwrap(),
    ]);
    assert!(check.status.success());
    assert_eq!(stdout(&check), "SATURATED, 0 defects\n");

    // Identical output regardless of worker count.
    for jobs in ["1", "4"] {
        let again = run(&[
            "check",
            "saturated",
            "--ell",
            "5",
            "--t",
            "5",
            "--jobs",
            jobs,
            path.to_str().unwrap(),
        ]);
        assert_eq!(stdout(&again), stdout(&check), "jobs = {jobs}");
    }
    std::fs::remove_file(&path).ok();
}

#[test]
fn check_saturated_reports_defects() {
    let path = tmp_file("edgeless.ecg");
    std::fs::write(&path, "3 2\n").unwrap();
    let out = run(&[
        "check",
        "saturated",
        "--ell",
        "3",
        "--t",
        "2",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("NOT SATURATED, 6 defects\n"), "{text}");
    assert!(text.contains("0 1 1\n"));

    let json = run(&[
        "check",
        "saturated",
        "--ell",
        "3",
        "--t",
        "2",
        "--json",
        path.to_str().unwrap(),
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(parsed["schema_version"], 1);
    assert_eq!(parsed["saturated"], false);
    assert_eq!(parsed["defects"].as_array().unwrap().len(), 6);
    std::fs::remove_file(&path).ok();
}

#[test]
fn check_rainbow_free_verdicts() {
    let path = tmp_file("k4.ecg");
    let out = run(&[
        "construct",
        "rainbowK",
        "--a",
        "4",
        "--t",
        "6",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let free = run(&[
        "check",
        "rainbow-free",
        "--ell",
        "4",
        path.to_str().unwrap(),
    ]);
    assert_eq!(free.status.code(), Some(1));
    assert!(stdout(&free).starts_with("NOT RAINBOW-FREE"));
    let free5 = run(&[
        "check",
        "rainbow-free",
        "--ell",
        "5",
        path.to_str().unwrap(),
    ]);
    assert_eq!(free5.status.code(), Some(0));
    assert_eq!(stdout(&free5), "RAINBOW-FREE\n");
    std::fs::remove_file(&path).ok();
}

#[test]
fn blocked_colors_output() {
    let path = tmp_file("h5.ecg");
    run(&["construct", "H", "--ell", "5", "-o", path.to_str().unwrap()]);
    let out = run(&[
        "colors",
        "blocked",
        "--vertex",
        "1",
        "--order",
        "4",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{2}\n");

    let all = tmp_file("lonely.ecg");
    std::fs::write(&all, "2 3\n").unwrap();
    let out = run(&[
        "colors",
        "blocked",
        "--vertex",
        "0",
        "--order",
        "2",
        all.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&out), "ALL\n");
    std::fs::remove_file(&path).ok();
    std::fs::remove_file(&all).ok();
}

#[test]
fn search_min_json_outcome() {
    let out = run(&[
        "search", "min", "--n", "3", "--ell", "3", "--t", "2", "--jobs", "2",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["schema_version"], 1);
    assert_eq!(parsed["minimum"], 3);
    assert_eq!(parsed["exhausted"], true);
    let witness = parsed["witness_ecg"].as_str().unwrap();
    assert!(witness.starts_with("3 2\n"));
    assert!(parsed["nodes_explored"].as_u64().unwrap() > 0);
}

#[test]
fn bounds_table_output() {
    let out = run(&[
        "bounds",
        "--ell-from",
        "5",
        "--ell-to",
        "6",
        "--n-multiplier",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        " ell      n      old      new  improved\n   5     10       18       14  true\n   6     12       30       20  true\n"
    );
}

#[test]
fn case_infeasible_exit_code() {
    let out = run(&["construct", "case", "--n", "19", "--ell", "7"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("INFEASIBLE"));

    // The deviating order-5 residue builds, with a palette comment.
    let out = run(&["construct", "case", "--n", "11", "--ell", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# palette raised from 5 to 6"), "{text}");
    assert!(text.contains("11 6\n"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let path = tmp_file("bad.ecg");
    std::fs::write(&path, "3 2\n0 1 3\n").unwrap();
    let out = run(&[
        "check",
        "rainbow-free",
        "--ell",
        "3",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_paper_filter_and_exit() {
    let out = run(&["verify-paper", "--ell-max", "5", "--filter", "P2.5-*"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("P2.5-sat"));
    assert!(text.contains("summary: pass="));
    assert!(!text.contains("REGRESSION"));

    // The infeasible discrepancy claims are whitelisted, so even alone they
    // exit zero and are labeled as known.
    let known = run(&["verify-paper", "--ell-max", "5", "--filter", "C1-n≡*"]);
    assert!(known.status.success());
    assert!(stdout(&known).contains("known discrepancy"));
}

#[test]
fn verify_paper_output_is_stable_across_jobs() {
    let a = run(&["verify-paper", "--ell-max", "6", "--jobs", "1"]);
    let b = run(&["verify-paper", "--ell-max", "6", "--jobs", "4"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn usage_error_exit_code() {
    let out = run(&["construct", "H"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_json_mode() {
    let out = run(&["construct", "H", "--ell", "5", "--json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["schema_version"], 1);
    assert_eq!(parsed["edges"], 7);
    assert!(parsed["ecg"].as_str().unwrap().starts_with("5 5\n"));
}

#[test]
fn env_budget_skips_searches() {
    let out = bin()
        .args(["verify-paper", "--ell-max", "5", "--filter", "T1.1*"])
        .env("RS_LAB_BUDGET_SECS", "0")
        .output()
        .expect("binary runs");
    // Skipped searches are not regressions; exit stays zero.
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("SKIPPED"), "{text}");
    assert!(text.contains("skipped=3"), "{text}");
}
