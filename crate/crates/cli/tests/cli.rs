//! End-to-end runs of the `subpower` binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subpower"))
        .args(args)
        .env("SUBPOWER_CACHE_DIR", env!("CARGO_TARGET_TMPDIR"))
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    run(args).status.code()
}

#[test]
fn table_json_matches_first_rows() {
    assert_eq!(
        stdout(&["table", "--max-m", "5", "--format", "json"]),
        r#"{"rows":[["1"],["0","1"],["0","1","2"],["0","1","6","6"],["0","1","14","36","24"],["0","1","30","150","240","120"]]}"#
            .to_owned()
            + "\n"
    );
}

#[test]
fn table_markdown_layout() {
    let out = stdout(&["table", "--max-m", "8", "--format", "markdown"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[2], "| 0 | 1 |  |  |  |  |  |  |  |  |");
    assert_eq!(lines[10], "| 8 | 0 | 1 | 254 | 5796 | 40824 | 126000 | 191520 | 141120 | 40320 |");
}

#[test]
fn table_single_cell() {
    assert_eq!(stdout(&["table", "--max-m", "0"]), "m,0\n0,1\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["table"]), Some(2));
    assert_eq!(code(&["oeis", "670", "--against", "fubini"]), Some(2));
    assert_eq!(code(&["fermat", "--max-m", "0"]), Some(2));
    assert_eq!(code(&["plot-data", "--n-max", "3", "--z-min", "2", "--z-max", "1", "--step", "0.1"]), Some(2));
    assert_eq!(code(&["plot-data", "--n-max", "3", "--z-min", "0", "--z-max", "1", "--step", "0"]), Some(2));
    assert_eq!(code(&["check", "--suite", "bogus"]), Some(2));
    assert_eq!(code(&["check", "--suite", "core", "--tol", "-1"]), Some(2));
    assert_eq!(code(&["seq", "triangle", "--count", "3", "-c"]), Some(2));
}

#[test]
fn missing_snapshot_is_io_error() {
    let out = run(&["oeis", "A000001", "--against", "fubini"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--fetch"));
}

#[test]
fn oeis_snapshots_match() {
    let out = stdout(&["oeis", "A131689", "--against", "triangle"]);
    assert!(out.contains("compared 91, matched 91, mismatches 0"), "{out}");
    let out = stdout(&["oeis", "A000670", "--against", "fubini"]);
    assert!(out.contains("mismatches 0"), "{out}");
}

#[test]
fn wrong_reference_is_mismatch() {
    let out = run(&["oeis", "A000670", "--against", "triangle"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("first mismatch at index"));
}

#[test]
fn check_suites_pass() {
    let out = stdout(&["check", "--suite", "core"]);
    assert!(out.contains("failures=0"));
    assert!(!out.contains("checks_run=0 "));
    let out = stdout(&["check", "--suite", "analytic", "--tol", "1e-6"]);
    assert!(out.contains("failures=0") && out.contains("575/216"));
}

#[test]
fn check_all_aggregates_modules() {
    let all = stdout(&["check", "--suite", "all", "--max-m", "5"]);
    for group in ["three-way subpower agreement", "euler difference formula", "fermat analogue", "harmonic numbers", "A131689"] {
        assert!(all.contains(group), "missing {group}");
    }
}

#[test]
fn fermat_reports() {
    assert_eq!(stdout(&["fermat", "--max-m", "2"]), "m=1: none\nm=2: (1,1,2)\nsolutions for m in 1..=2: 2\n");
    let out = stdout(&["fermat", "--max-m", "40"]);
    assert!(out.ends_with("solutions for m in 1..=40: 2,5,7\n"));
    assert!(out.contains("m=7: (4,4,5)\n"));
}

#[test]
fn plot_data_shape() {
    let out = stdout(&["plot-data", "--n-max", "5", "--z-min", "0", "--z-max", "5", "--step", "0.1"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 52);
    assert_eq!(lines[0], "z,n1,n2,n3,n4,n5");
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 6 && l.split(',').nth(1) == Some("1.0")));
    assert_eq!(lines[51], "5.0,1.0,30.0,150.0,240.0,120.0");
}

#[test]
fn plot_data_negative_range() {
    let out = stdout(&["plot-data", "--n-max", "2", "--z-min", "-2", "--z-max", "-1", "--step", "1"]);
    assert_eq!(out, "z,n1,n2\n-2.0,1.0,-1.75\n-1.0,1.0,-1.5\n");
}

#[test]
fn families_render_exactly() {
    assert!(stdout(&["bernoulli", "--upto", "12", "--method", "explicit"]).contains("\n1,1/2\n"));
    assert_eq!(stdout(&["sum-powers", "--m", "5", "--n", "4", "--method", "direct"]), "1300\n");
    assert_eq!(stdout(&["fubini", "--upto", "4", "--method", "recurrence"]), "m,F_m\n0,1\n1,1\n2,3\n3,13\n4,75\n");
    assert_eq!(stdout(&["seq", "fubini", "--count", "3", "--format", "json"]), "{\"columns\":[\"i\",\"value\"],\"rows\":[[\"0\",\"1\"],[\"1\",\"1\"],[\"2\",\"3\"]]}\n");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["check", "--suite", "families", "--max-m", "6"][..],
        &["plot-data", "--n-max", "4", "--z-min", "-1", "--z-max", "2", "--step", "0.25"],
        &["table", "--max-m", "10", "--format", "markdown"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}
