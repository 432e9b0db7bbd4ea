use std::process::{Command, Output};

use fibgen::bounds::ReportRecord;

fn fibgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibgen"))
        .args(args)
        .env_remove("FIBGEN_SIEVE_LIMIT")
        .output()
        .expect("spawn fibgen")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_csv_rows() {
    let o = fibgen(&["table", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "fibgen_ge,prime,asymptotic_ratio,exact_threshold");
    assert_eq!(lines.len(), 8);
    assert!(lines[2].starts_with("2,5,5/6,"), "{}", lines[2]);
    assert!(lines[7].starts_with("9,19,19/20,"), "{}", lines[7]);
}

#[test]
fn bound_json_round_trips() {
    let o = fibgen(&["bound", "--n", "3", "--d", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let record: ReportRecord = serde_json::from_str(&text).unwrap();
    assert_eq!((record.n, record.d, record.best_lower), (3, 5, 2));
    assert!(record.consistent);
    let again = serde_json::to_string_pretty(&record).unwrap() + "\n";
    assert_eq!(again, text);
}

#[test]
fn single_cell_grid() {
    let o = fibgen(&["grid", "--n-min", "3", "--n-max", "3", "--d-min", "5", "--d-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,d,best_lower,best_kind,upper_genus,closed_form");
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("3,5,2,DegenerationMin,6,"), "{}", lines[1]);
}

#[test]
fn threshold_quintic_threefold() {
    let o = fibgen(&["threshold", "--n", "3", "--g", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["d_min"], 5);
    assert_eq!(v["prime"], 5);
}

#[test]
fn exit_codes() {
    assert_eq!(fibgen(&["bound", "--n", "2", "--d", "5"]).status.code(), Some(2));
    assert_eq!(fibgen(&["bound", "--n", "3"]).status.code(), Some(2));
    assert_eq!(fibgen(&["bound", "--n", "x", "--d", "5"]).status.code(), Some(2));
    assert_eq!(fibgen(&["threshold", "--n", "3", "--g", "0"]).status.code(), Some(2));
    assert_eq!(fibgen(&["table", "--format", "svg"]).status.code(), Some(2));
    assert_eq!(fibgen(&["nope"]).status.code(), Some(2));
    assert_eq!(fibgen(&["--help"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing").join("grid.csv");
    let o = fibgen(&[
        "grid", "--n-max", "4", "--d-max", "4", "--out", missing.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn sieve_override_is_validated() {
    let run = |value: &str| {
        Command::new(env!("CARGO_BIN_EXE_fibgen"))
            .args(["bound", "--n", "3", "--d", "5"])
            .env("FIBGEN_SIEVE_LIMIT", value)
            .output()
            .unwrap()
    };
    assert_eq!(run("0").status.code(), Some(2));
    assert_eq!(run("abc").status.code(), Some(2));
    let big = run("100000");
    assert_eq!(big.status.code(), Some(0));
    assert_eq!(stdout(&big), stdout(&fibgen(&["bound", "--n", "3", "--d", "5"])));
}

#[test]
fn small_check_passes() {
    let o = fibgen(&["check", "--n-max", "20", "--d-max", "40"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count() >= 7);
}
