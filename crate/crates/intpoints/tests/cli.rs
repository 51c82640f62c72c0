//! End-to-end checks of the command-line interface: exit codes, output
//! formats, and that machine-readable output re-parses and re-verifies.

use intpoints::arith::int;
use intpoints::cli::SolveOutput;
use intpoints::curves::{CurveParams, IntegerPoint};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_intpoints"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn hessian_solve_text_prints_point_tuples() {
    let out = run(&["hessian", "solve", "-d", "25", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12);
    assert!(lines.contains(&"(27, -19)"));
    assert!(lines.contains(&"(-13, -9)"));
}

#[test]
fn fieldpoly_quartic_row() {
    let out = run(&["fieldpoly", "quartic", "--x", "-1", "--y", "-5"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "L = 10; t^4 + 148*t^3 + 102*t^2 + 20*t + 1"
    );
}

#[test]
fn congruence_verify_reports_quotients() {
    let out = run(&["congruence", "verify", "--f", "t", "--g", "-t-1", "--family", "cubic"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "OK, lambda = 3");

    let out = run(&[
        "congruence", "verify", "--f", "t", "--g", "1/2*(t^2+2*t+2)", "--family", "quartic",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "OK, L = -2");

    let out = run(&["congruence", "verify", "--f", "t", "--g", "t+1", "--family", "cubic"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("not a solution; remainder ="));
}

#[test]
fn json_output_reparses_reverifies_and_is_byte_stable() {
    let first = run(&["hessian", "solve", "-d", "49", "--format", "json"]);
    let second = run(&["hessian", "solve", "-d", "49", "--format", "json"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "byte-stable across runs");

    let payload: SolveOutput = serde_json::from_str(stdout(&first).trim()).unwrap();
    assert_eq!(payload.family, "hessian");
    let params = CurveParams::Hessian { d: int(49) };
    assert_eq!(payload.solutions.len(), 10);
    for [x, y] in &payload.solutions {
        let p = IntegerPoint::new(x.parse::<i64>().unwrap(), y.parse::<i64>().unwrap());
        assert!(params.is_on_curve(&p), "{p} not on H_49");
    }
    assert_eq!(payload.solutions.len(), payload.classes.len());
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["hessian", "solve", "--nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["congruence", "verify", "--f", "t^", "--g", "t", "--family", "cubic"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_1_and_name_the_precondition() {
    let out = run(&["hessian", "solve", "-d", "-3"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("x + y + 1 = 0"), "message: {err}");

    let out = run(&["balady", "solve", "-T", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("singular"));

    let out = run(&["balady", "solve", "-T", "7"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("even"));

    let out = run(&["qab", "solve", "-a", "8", "-b", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("y = x ± (x^2 + 2)/2"));

    let out = run(&["congruence", "orbit", "--seed", "nope", "--steps", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scan_exit_code_reflects_error_records() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("with_degenerate.jsonl");
    let out = run(&[
        "hessian", "scan", "--from", "-5", "--to", "5",
        "--out", bad.to_str().unwrap(),
    ]);
    // d = -3 inside the range leaves an error-flagged record
    assert_eq!(out.status.code(), Some(1));

    let good = dir.path().join("clean.jsonl");
    let out = run(&[
        "hessian", "scan", "--from", "0", "--to", "5",
        "--out", good.to_str().unwrap(), "--workers", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("6 records"));

    // stats over the produced file
    let out = run(&["stats", good.to_str().unwrap(), "--threshold", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("6 records"));
    assert!(text.contains("records with errors: 0"));
}

#[test]
fn scan_family_and_csv_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("family.jsonl");
    let out = run(&[
        "balady", "scan-family", "--poly", "2*t^3",
        "--t-from", "1", "--t-to", "6",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let csv = run(&["qab", "solve", "-a", "12", "-b", "4", "--format", "csv"]);
    assert!(csv.status.success());
    let text = stdout(&csv);
    assert!(text.starts_with("family,param,x,y,class\n"));
    assert!(text.contains("quartic_ab,12,0,1,trivial"));

    // --out writes the same content to a file
    let target = dir.path().join("points.txt");
    let out = run(&[
        "balady", "solve", "-T", "40", "--out", target.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&target).unwrap();
    assert!(written.contains("(-1, -5)"));
    assert_eq!(written.lines().count(), 4);
}

#[test]
fn budget_environment_variable_is_honored() {
    // a semiprime beyond the trial-division bound cannot be finished with a
    // zero rho budget
    let semiprime = (1_000_003i64 as i128 * 1_000_033) .to_string();
    let out = bin()
        .args(["tools", "factor", "-n", &semiprime])
        .env("INTPOINTS_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("incomplete"));

    // an explicit flag overrides the environment
    let out = bin()
        .args(["tools", "factor", "-n", &semiprime, "--budget", "100000000"])
        .env("INTPOINTS_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1000003 * 1000033"));
}

#[test]
fn systems_check_against_reference_tables() {
    let out = run(&[
        "systems", "build", "--family", "cubic", "--m", "2", "--n", "2", "--check-appendix",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("S(2,2):"));
    assert!(text.contains("G1: matches reference"));

    // no reference table for this shape
    let out = run(&[
        "systems", "build", "--family", "cubic", "--m", "1", "--n", "3", "--check-appendix",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
