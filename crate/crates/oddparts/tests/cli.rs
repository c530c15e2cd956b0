//! End-to-end tests of the installed binary: exit codes, exact output
//! lines, format stability, and dump/recompute round-trips.

use std::process::{Command, Output};

use num::BigInt;
use oddparts::fibonacci::fib;
use oddparts::partitions::QTable;

fn oddparts_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddparts"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(exit_code(&oddparts_cmd(&["--help"])), 0);
    assert_eq!(exit_code(&oddparts_cmd(&["--version"])), 0);
    assert_eq!(exit_code(&oddparts_cmd(&["verify", "--help"])), 0);
}

#[test]
fn unknown_subcommand_or_flag_exits_two() {
    assert_eq!(exit_code(&oddparts_cmd(&["frobnicate"])), 2);
    assert_eq!(exit_code(&oddparts_cmd(&["verify", "--no-such-flag"])), 2);
}

#[test]
fn verify_empty_range_is_a_usage_error() {
    let out = oddparts_cmd(&["verify", "--max-n", "0"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("empty range"));
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn verify_unknown_suite_is_a_usage_error() {
    let out = oddparts_cmd(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("no-such-suite"));
}

#[test]
fn verify_proposition_suite_passes() {
    let out = oddparts_cmd(&[
        "verify",
        "--suite",
        "proposition",
        "--max-k",
        "10",
        "--max-n",
        "500",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("proposition: PASS"));
    assert!(text.contains("k <= 10"));
}

#[test]
fn verify_all_suites_pass_at_n_100() {
    let out = oddparts_cmd(&["verify", "--suite", "all", "--max-n", "100"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    for line in &lines {
        assert!(line.contains(": PASS ["), "unexpected line: {line}");
    }
    // Deterministic ordering: qk-sums first, euler-reciprocal last.
    assert!(lines[0].starts_with("qk-sums:"));
    assert!(lines[10].starts_with("euler-reciprocal:"));
}

#[test]
fn verify_csv_has_fixed_header_and_round_trips() {
    let out = oddparts_cmd(&[
        "verify", "--suite", "fine", "--max-n", "12", "--format", "csv",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("suite,range,status,n,k,lhs,rhs"));
    let row = lines.next().expect("one data row");
    assert!(row.starts_with("fine,"));
    assert!(row.contains(",pass,"));
}

#[test]
fn qtable_text_row_matches_and_is_annotated() {
    let out = oddparts_cmd(&["qtable", "--max-n", "6", "--max-k", "4"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("(* = entry confirmed by a closed form)"));
    let row6 = text
        .lines()
        .find(|l| l.trim_start().starts_with('6'))
        .expect("row for n = 6");
    let cells: Vec<&str> = row6.split_whitespace().collect();
    assert_eq!(cells[0], "6");
    assert!(cells[1].starts_with('4'), "q(6) = 4: {row6}");
    assert!(cells[2].starts_with('8'), "F_6 = 8: {row6}");
}

#[test]
fn qtable_csv_rows_match_the_fixed_header() {
    let out = oddparts_cmd(&["qtable", "--max-n", "6", "--max-k", "4", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,q,F,Q1,Q2,Q3,Q4");
    assert_eq!(lines[1], "1,1,1,1,0,0,0");
    assert_eq!(lines[6], "6,4,8,2,1,0,1");
}

#[test]
fn qtable_json_row_is_sparse_and_ordered() {
    let out = oddparts_cmd(&["qtable", "--max-n", "6", "--max-k", "4", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let rows: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    let row6 = &rows.as_array().expect("array")[5];
    assert_eq!(
        serde_json::to_string(row6).unwrap(),
        r#"{"n":6,"q":4,"F":8,"Q":{"1":2,"2":1,"4":1}}"#
    );
}

#[test]
fn qtable_guard_rejects_large_n_without_override() {
    let out = oddparts_cmd(&["qtable", "--max-n", "101"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("--allow-large"));

    let out = oddparts_cmd(&["qtable", "--max-n", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn qtable_csv_round_trips_against_recomputation() {
    let out = oddparts_cmd(&["qtable", "--max-n", "12", "--max-k", "6", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let table = QTable::build(12);
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 9);
        let n: u64 = cells[0].parse().unwrap();
        let row = table.row(n);
        assert_eq!(cells[1].parse::<BigInt>().unwrap(), row.total());
        assert_eq!(cells[2].parse::<BigInt>().unwrap(), fib(n as usize));
        for (i, cell) in cells[3..].iter().enumerate() {
            let k = BigInt::from(i as u64 + 1);
            assert_eq!(cell.parse::<BigInt>().unwrap(), row.q_k(&k), "n={n} k={k}");
        }
    }
}

#[test]
fn bound_prints_exact_value_and_directional_decimal() {
    let out = oddparts_cmd(&["bound", "--family", "Bk", "--k", "1", "--x", "1/4"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "15/11 ~ 1.363636363637 (upper bound)\n");

    let out = oddparts_cmd(&["bound", "--family", "Rk", "--k", "4", "--x", "1/4"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "9364/6875 ~ 1.362036363637 (upper bound)\n"
    );

    let out = oddparts_cmd(&[
        "bound",
        "--family",
        "corollary1",
        "--x",
        "1/4",
        "--pset",
        "3",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "69983/69615 ~ 1.005286217050 (lower bound)\n"
    );
}

#[test]
fn bound_usage_and_domain_errors_exit_two() {
    let out = oddparts_cmd(&["bound", "--family", "Zk", "--k", "1", "--x", "1/4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("unknown family 'Zk'"));

    let out = oddparts_cmd(&["bound", "--family", "Rk", "--x", "1/4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("requires --k"));

    let out = oddparts_cmd(&["bound", "--family", "corollary1", "--k", "2", "--x", "1/4"]);
    assert_eq!(exit_code(&out), 2);

    // Outside the Fibonacci window: report the failed predicate itself.
    let out = oddparts_cmd(&["bound", "--family", "Rk", "--k", "4", "--x", "3/4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("x + x^2 >= 1"));

    let out = oddparts_cmd(&["bound", "--family", "Bk", "--k", "7", "--x", "1/4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("k = 7"));
}

#[test]
fn enclose_product_at_half_with_no_terms_is_inconclusive() {
    let out = oddparts_cmd(&[
        "enclose", "--target", "product", "--x", "1/2", "--terms", "0",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("lo = 1 ~"), "got: {text}");
    assert!(text.contains("inconclusive"), "got: {text}");
}

#[test]
fn enclose_sum_prints_interval_and_width() {
    let out = oddparts_cmd(&["enclose", "--target", "sum", "--x", "1/4", "--terms", "30"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let mut lines = text.lines();
    let interval = lines.next().expect("interval line");
    assert!(interval.starts_with('['), "got: {interval}");
    assert!(interval.contains("] ~ [0.350248974219, 0.350248974220]"));
    let width = lines.next().expect("width line");
    assert!(width.starts_with("width = "), "got: {width}");
    assert!(width.ends_with("~ 0.000000000001"));
}

#[test]
fn report_passes_and_is_byte_stable() {
    let first = oddparts_cmd(&["report", "--x", "1/4"]);
    assert_eq!(exit_code(&first), 0);
    let second = oddparts_cmd(&["report", "--x", "1/4"]);
    assert_eq!(first.stdout, second.stdout);

    let text = stdout_of(&first);
    let pass_lines = text.lines().filter(|l| l.starts_with("PASS")).count();
    assert_eq!(pass_lines, 24);
    assert!(text.trim_end().ends_with("24 checks, 24 passed, 0 failed"));
}

#[test]
fn report_rejects_other_points() {
    let out = oddparts_cmd(&["report", "--x", "1/3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("1/4"));
}

#[test]
fn report_json_round_trips() {
    let out = oddparts_cmd(&["report", "--x", "1/4", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(doc["x"], "1/4");
    assert_eq!(doc["failed"], 0);
    let checks = doc["checks"].as_array().expect("array");
    assert_eq!(checks.len(), 24);
    for check in checks {
        assert_eq!(check["pass"], true, "failing check: {check}");
    }
}
