use std::process::{Command, Output};

use catalan_cli::report::{read_rows_csv, CSV_HEADER};
use catalan_cli::{ReportDocument, VerificationRow};
use serde_json::Value;

fn catalan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn exact_examples() {
    for (args, want) in [
        (&["exact", "catalan", "4"][..], "14"),
        (&["exact", "ballot", "1", "0"], "1"),
        (&["exact", "fuss", "5", "2", "1"], "42"),
        (&["exact", "catalan", "5"], "42"),
        (&["exact", "paths", "6"], "132"),
        (&["exact", "dyck", "6"], "132"),
        (&["exact", "catalan", "0"], "1"),
    ] {
        let o = catalan(args);
        assert_eq!(code(&o), 0, "{args:?}");
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
}

#[test]
fn exact_failures() {
    assert_eq!(code(&catalan(&["exact", "ballot", "2", "3"])), 2);
    assert_eq!(code(&catalan(&["exact", "ballot", "0", "0"])), 2);
    assert_eq!(code(&catalan(&["exact", "fuss", "3", "0", "1"])), 2);
    assert_eq!(code(&catalan(&["exact", "catalan", "-1"])), 2);
    assert_eq!(code(&catalan(&["exact", "dyck", "15"])), 3);
}

#[test]
fn dyck_listing() {
    let o = catalan(&["exact", "dyck", "4", "--list"]);
    let words: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(words.len(), 14);
    assert!(words.iter().all(|w| w.len() == 8));
}

fn integral_row(args: &[&str]) -> (i32, VerificationRow) {
    let o = catalan(args);
    (
        code(&o),
        serde_json::from_str(stdout(&o).trim()).expect("one JSON row"),
    )
}

#[test]
fn integral_examples() {
    let (c, row) = integral_row(&["integral", "feaux", "4", "1e-12"]);
    assert_eq!(c, 0);
    assert_eq!(row.exact, "14");
    assert!(row.abs_log_error <= 1e-9 && row.converged);

    let (c, row) = integral_row(&["integral", "duplication", "1", "1e-12"]);
    assert_eq!(c, 0);
    assert!(row.abs_log_error <= 1e-9);

    assert_eq!(code(&catalan(&["integral", "feaux", "0", "1e-12"])), 2);
    assert_eq!(code(&catalan(&["integral", "feaux", "3", "0"])), 2);
}

#[test]
fn integral_budget_overrun_still_prints_the_row() {
    let (c, row) = integral_row(&["integral", "feaux", "3", "1e-12", "--max-evals", "100"]);
    assert_eq!(c, 4);
    assert!(!row.converged);
    assert_eq!(row.exact, "5");
}

#[test]
fn verify_csv_twelve() {
    let o = catalan(&[
        "verify",
        "--max-n",
        "12",
        "--reprs",
        "feaux,duplication",
        "--tol",
        "1e-12",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some(CSV_HEADER));
    let rows = read_rows_csv(text.as_bytes()).unwrap();
    assert_eq!(rows.len(), 24);
    assert!(rows.iter().all(|r| r.passes(1e-8)));
    assert!(rows
        .windows(2)
        .all(|w| (w[0].n, &w[0].repr) < (w[1].n, &w[1].repr)));
}

#[test]
fn verify_single_row() {
    let o = catalan(&["verify", "--max-n", "1", "--reprs", "feaux"]);
    assert_eq!(code(&o), 0);
    assert_eq!(read_rows_csv(stdout(&o).as_bytes()).unwrap().len(), 1);
}

#[test]
fn verify_json_thirty_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = catalan(&[
        "verify",
        "--max-n",
        "30",
        "--reprs",
        "feaux",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let doc = ReportDocument::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.rows.len(), 30);
    assert!(doc
        .rows
        .iter()
        .all(|r| r.abs_log_error <= 1e-8 && r.converged));
    assert_eq!(doc.metadata.tolerance, 1e-12);
    for r in &doc.rows {
        assert_eq!(r.exact_value().unwrap(), catalan_core::catalan_exact(r.n));
    }
}

#[test]
fn verify_formats_agree_and_repeat() {
    let json_a = catalan(&["verify", "--max-n", "6", "--format", "json"]);
    let json_b = catalan(&["verify", "--max-n", "6", "--format", "json"]);
    let csv = catalan(&["verify", "--max-n", "6", "--format", "csv"]);
    let a = ReportDocument::from_json(&stdout(&json_a)).unwrap();
    let b = ReportDocument::from_json(&stdout(&json_b)).unwrap();
    assert_eq!(a.rows, b.rows);
    assert_eq!(a.metadata.tool_version, b.metadata.tool_version);
    assert_eq!(read_rows_csv(stdout(&csv).as_bytes()).unwrap(), a.rows);
}

#[test]
fn verify_failures() {
    assert_eq!(
        code(&catalan(&[
            "verify",
            "--max-n",
            "2",
            "--out",
            "/nonexistent-dir/r.csv"
        ])),
        2
    );
    assert_eq!(code(&catalan(&["verify", "--max-n", "0"])), 2);
    // a tolerance too loose for the row bound is reported, not hidden
    let o = catalan(&[
        "verify", "--max-n", "3", "--reprs", "feaux", "--tol", "1e-2",
    ]);
    assert_eq!(code(&o), 5);
    assert_eq!(read_rows_csv(stdout(&o).as_bytes()).unwrap().len(), 3);
}

fn json_out(args: &[&str]) -> (i32, Value) {
    let o = catalan(args);
    (
        code(&o),
        serde_json::from_str(stdout(&o).trim()).unwrap_or(Value::Null),
    )
}

#[test]
fn loggamma_examples() {
    let (c, v) = json_out(&["loggamma", "feaux", "3"]);
    assert_eq!(c, 0);
    assert!((v["value"].as_f64().unwrap() - 6f64.ln()).abs() <= 1e-10);
    assert!(v["deviation"].as_f64().unwrap() <= 1e-10);

    let (c, v) = json_out(&["loggamma", "kummer", "0.5"]);
    assert_eq!(c, 0);
    assert!((v["value"].as_f64().unwrap() - 0.5 * std::f64::consts::PI.ln()).abs() <= 1e-10);

    let (c, v) = json_out(&["loggamma", "binet2", "2.5"]);
    assert_eq!(c, 0);
    assert!(v["deviation"].as_f64().unwrap() <= 1e-9);

    assert_eq!(code(&catalan(&["loggamma", "malmsten", "0"])), 2);
    assert_eq!(code(&catalan(&["loggamma", "binet1", "-2"])), 2);
    assert_eq!(code(&catalan(&["loggamma", "lanczos", "2"])), 2);
}

#[test]
fn identities_examples() {
    let (c, v) = json_out(&["identities", "raabe", "--a", "1"]);
    assert_eq!(c, 0);
    assert!(v["checks"][0]["residual"].as_f64().unwrap() <= 1e-9);

    let (c, v) = json_out(&["identities", "duplication", "--x", "10"]);
    assert_eq!(c, 0);
    assert!(v["checks"][0]["residual"].as_f64().unwrap() <= 1e-11);

    let (c, v) = json_out(&["identities", "typo", "--n", "2"]);
    assert_eq!(c, 0);
    let check = &v["checks"][0];
    assert!((check["log_value_n_plus_2"].as_f64().unwrap() - 2f64.ln()).abs() <= 1e-8);
    assert!((check["log_value_n_plus_1"].as_f64().unwrap() - 4f64.ln()).abs() <= 1e-8);
    assert_eq!(check["matching_exponent"], 4);

    let (c, v) = json_out(&["identities", "all"]);
    assert_eq!(c, 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 6 + 4 + 3);

    assert_eq!(code(&catalan(&["identities", "typo", "--n", "0"])), 2);
}
