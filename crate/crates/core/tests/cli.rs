//! The `eulerzeta` binary end to end: output shapes, files and exit codes.

use std::path::Path;
use std::process::{Command, Output};

use eulerzeta::identities::read_json_lines;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerzeta")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_prints_json() {
    let o = run(&["eval", "lambda", "--s", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let re = v["value"]["re"].as_f64().unwrap();
    assert!((re - std::f64::consts::PI.powi(2) / 8.0).abs() < 1e-14);
    assert_eq!(v["value"]["im"].as_f64(), Some(0.0));
    assert!(v["est_error"].as_f64().unwrap() < 1e-12);

    let o = run(&["--format", "json", "eval", "zeta-e", "--s", "1", "--x", "0.3"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["method"], "hurwitz-difference-perturbed");
    assert!(v["value"]["re"].as_f64().unwrap().is_finite());
}

#[test]
fn eval_human_uses_fifteen_digits() {
    let o = run(&["eval", "zeta-e", "--s", "0", "--x", "0.7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0.5"), "{}", stdout(&o));
    let o = run(&["eval", "lambda", "--s", "2"]);
    assert!(stdout(&o).contains("1.23370055013617"), "{}", stdout(&o));
}

#[test]
fn eval_errors_are_usage_errors() {
    for args in [
        &["eval", "lerch-e", "--s", "2", "--x", "1.5"][..],
        &["eval", "nope", "--s", "2"],
        &["eval", "lambda"],
        &["eval", "lambda", "--s", "2", "--y", "3"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = stderr(&o);
        assert!(err.starts_with("error: ") && err.trim_end().lines().count() == 1, "{args:?}: {err}");
    }
}

#[test]
fn check_exit_codes() {
    let o = run(&["check", "EULER-PROD", "--m", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1/12"));

    let o = run(&["check", "CATALAN"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0.91596559417721"));

    // disputed identities report both sides and still exit 0
    let o = run(&["check", "EXP-SUM", "--m", "3", "--alpha", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("DISPUTED") && out.contains("lhs") && out.contains("rhs"), "{out}");

    // with zero tolerances a quadrature-based identity fails
    let o = run(&["check", "CATALAN", "--tol-abs", "0", "--tol-rel", "0"]);
    assert_eq!(o.status.code(), Some(1));

    assert_eq!(run(&["check", "NO-SUCH-ID"]).status.code(), Some(2));
    assert_eq!(run(&["check", "EULER-PROD", "--m", "x"]).status.code(), Some(2));
    // outside the grid constraint m + n <= 12
    assert_eq!(run(&["check", "EULER-PROD", "--m", "9", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn check_json_is_a_report() {
    let o = run(&["check", "FOUR-SIN", "--s", "-1.5", "--k", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let reports = read_json_lines(o.stdout.as_slice()).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].id, "FOUR-SIN");
}

#[test]
fn suite_subset_with_grid_override() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("prod.jsonl");
    let o = run(&[
        "suite",
        "--filter",
        "PROD-*",
        "--grid",
        "s=-3:0:0.5",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let reports = read_json_lines(std::io::BufReader::new(std::fs::File::open(&out).unwrap())).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.id.starts_with("PROD-")));
    // the report went to the file, so the counts are on stdout
    assert!(stdout(&o).contains(&format!("total {}", reports.len())), "{}", stdout(&o));
}

#[test]
fn suite_writes_csv_with_header() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.csv");
    let o = run(&["suite", "--filter", "LAMBDA-*,BETA-*", "--format", "csv", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("id,status,point_index,point,"));
    // disputed BETA-EVEN rows are written too
    assert!(text.contains("BETA-EVEN,disputed"));
    assert_eq!(text.lines().count(), 1 + 8 + 9 + 3 + 3 + 4);
}

#[test]
fn suite_human_summary_and_failure_exit() {
    let o = run(&["suite", "--filter", "TANH-COLLAPSE,MUL-DIS"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("total 77  pass 7  fail 0  skipped 0  disputed 70"), "{}", stdout(&o));

    // zero tolerance turns rounding-level differences into failures
    let o = run(&["suite", "--filter", "SQUARE", "--tol-abs", "0", "--tol-rel", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

fn write(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("suite.conf");
    let json_out = dir.path().join("from-config.jsonl");
    write(
        &cfg,
        &format!(
            "# squares only on a coarse grid\nformat = json\nout = {}\ngrid = s=-2:0:1\nthreads = 2\n",
            json_out.display()
        ),
    );
    let o = run(&["--config", cfg.to_str().unwrap(), "suite", "--filter", "SQUARE"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let reports = read_json_lines(std::io::BufReader::new(std::fs::File::open(&json_out).unwrap())).unwrap();
    assert_eq!(reports.len(), 3);

    // flags override the file
    let csv_out = dir.path().join("flag.csv");
    let o = run(&[
        "--config",
        cfg.to_str().unwrap(),
        "suite",
        "--filter",
        "SQUARE",
        "--format",
        "csv",
        "--out",
        csv_out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&csv_out).unwrap().lines().count(), 4);

    write(&cfg, "colour = blue\n");
    let o = run(&["--config", cfg.to_str().unwrap(), "suite"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown key"));
}

#[test]
fn tables() {
    let o = run(&["table", "lambda-even", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for form in ["π^2/8", "π^4/96", "π^6/960"] {
        assert!(out.contains(form), "{out}");
    }
    let o = run(&["table", "euler-numbers", "6", "--format", "json"]);
    let rows: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let forms: Vec<&str> = rows.as_array().unwrap().iter().map(|r| r["closed_form"].as_str().unwrap()).collect();
    assert_eq!(forms, ["1", "0", "-1", "0", "5", "0", "-61"]);

    let o = run(&["table", "beta-odd", "2", "--format", "csv"]);
    assert!(stdout(&o).contains("5π^5/1536"));
    assert_eq!(run(&["table", "beta-odd", "31"]).status.code(), Some(2));
}

#[test]
fn catalog_lists_every_identity() {
    let o = run(&["catalog", "--format", "json"]);
    let entries: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = entries.as_array().unwrap();
    assert_eq!(entries.len(), eulerzeta::identities::catalog().len());
    let disputed: Vec<&str> = entries
        .iter()
        .filter(|e| e["status"] == "disputed")
        .map(|e| e["id"].as_str().unwrap())
        .collect();
    assert_eq!(disputed, ["BETA-EVEN", "EULER-FOURIER-COMPLEX", "EXP-SUM", "MUL-DIS"]);
}
