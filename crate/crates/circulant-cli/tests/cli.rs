//! End-to-end tests of the `circulant` binary: every subcommand, the
//! documented exit codes, and the stdout/stderr split.

use std::path::Path;
use std::process::{Command, Output};

use circulant::bounds::triple_loop_max;

/// Run the binary inside `dir` and capture everything.
fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circulant"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary spawns")
}

/// Run in a throwaway directory (no records file present).
fn run(args: &[&str]) -> (Output, tempfile::TempDir) {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), args);
    (out, dir)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn assert_code(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout:\n{}\nstderr:\n{}",
        stdout(out),
        stderr(out)
    );
}

#[test]
fn bounds_single_cell() {
    let (out, _dir) = run(&["bounds", "--deg", "8", "--diam", "5"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out), "681\n");
}

#[test]
fn bounds_moore_cell() {
    let (out, _dir) = run(&["bounds", "--deg", "3", "--diam", "2", "--kind", "moore"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out), "10\n");
}

#[test]
fn bounds_grid_is_csv() {
    let (out, _dir) = run(&["bounds", "--deg-max", "5", "--dmax", "4"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "degree,1,2,3,4");
    assert_eq!(lines[1], "2,3,5,7,9");
    assert_eq!(lines[4], "5,6,18,38,66");
    assert_eq!(lines.len(), 5);
}

#[test]
fn bounds_triple_grid_is_one_row() {
    let (out, _dir) = run(&["bounds", "--kind", "triple", "--deg-max", "10", "--dmax", "5"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2, "header plus the single degree-6 row");
    let mut expected = String::from("6");
    for d in 1..=5 {
        expected.push(',');
        expected.push_str(&triple_loop_max(d).to_string());
    }
    assert_eq!(lines[1], expected);
}

#[test]
fn bounds_triple_rejects_other_degrees() {
    let (out, _dir) = run(&["bounds", "--deg", "8", "--diam", "3", "--kind", "triple"]);
    assert_code(&out, 2);
    assert!(stderr(&out).contains("degree 6 only"));
}

#[test]
fn bounds_without_cell_or_grid_is_a_usage_error() {
    let (out, _dir) = run(&["bounds"]);
    assert_code(&out, 2);
    assert!(stderr(&out).contains("usage error"));
}

#[test]
fn verify_measures_a_set() {
    let (out, _dir) = run(&[
        "verify",
        "--set",
        "104;1,16,20,27",
        "--expect-diam",
        "3",
        "--expect-deg",
        "8",
    ]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out), "diameter 3, degree 8\n");
}

#[test]
fn verify_set_as_json() {
    let (out, _dir) = run(&["verify", "--set", "104;1,16,20,27", "--format", "json"]);
    assert_code(&out, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["degree"], 8);
    assert_eq!(value["diameter"], 3);
    assert_eq!(value["order"], 104);
    assert_eq!(value["set"], "104;1,16,20,27");
}

#[test]
fn verify_reports_a_diameter_mismatch() {
    let (out, _dir) = run(&["verify", "--set", "104;1,16,20,27", "--expect-diam", "4"]);
    assert_code(&out, 1);
    assert!(stderr(&out).contains("diameter mismatch"));
    assert_eq!(stdout(&out), "");
}

#[test]
fn verify_checks_the_whole_seeded_table() {
    let (out, _dir) = run(&["verify", "--seed-builtin"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    assert!(
        last.ends_with("set-bearing records checked, 0 failed"),
        "unexpected summary line: {last}"
    );
    assert!(stderr(&out).contains("seeded"));
}

#[test]
fn verify_can_target_one_cell() {
    let (out, _dir) = run(&["verify", "--seed-builtin", "--cell", "8,3"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("(8, 3) order 104: ok"), "got: {text}");
}

#[test]
fn verify_without_records_names_the_fix() {
    let (out, _dir) = run(&["verify"]);
    assert_code(&out, 1);
    let err = stderr(&out);
    assert!(err.contains("not found"), "got: {err}");
    assert!(err.contains("--seed-builtin"), "got: {err}");
}

#[test]
fn search_recovers_a_published_record() {
    let (out, _dir) = run(&["search", "--n", "104", "--deg", "8", "--diam", "3"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out), "104;1,16,20,27\n");
    assert!(stderr(&out).contains("visited"), "stats go to stderr");
}

#[test]
fn search_reports_no_solutions_without_failing() {
    let (out, _dir) = run(&[
        "search", "--n", "14", "--deg", "4", "--diam", "2", "--all", "--free-s1",
    ]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out), "no solutions\n");
}

#[test]
fn search_empty_json_is_an_empty_array() {
    let (out, _dir) = run(&[
        "search", "--n", "14", "--deg", "4", "--diam", "2", "--all", "--free-s1", "--format",
        "json",
    ]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out), "[]\n");
}

#[test]
fn maxsearch_finds_the_largest_order() {
    let (out, _dir) = run(&[
        "maxsearch", "--deg", "4", "--diam", "2", "--from", "5", "--to", "20", "--free-s1",
    ]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out), "13;1,5\n");
}

#[test]
fn product_multiplies_two_sets() {
    let (out, _dir) = run(&["product", "3;1", "104;1,16,20,27"]);
    assert_code(&out, 0);
    assert_eq!(
        stdout(&out),
        "312;3,48,60,81,104\norder 312 = 3 * 104\ndegree 10, diameter 4 (measured)\n"
    );
}

#[test]
fn combine_reproduces_a_published_composition() {
    let (out, _dir) = run(&["combine", "--deg", "14", "--diam", "4", "--seed-builtin"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("order 825 = 3 * 275"), "got: {text}");
    assert!(text.contains("degree 14, diameter 4"), "got: {text}");
}

#[test]
fn table_csv_lists_records_with_bounds() {
    let (out, _dir) = run(&["table", "--format", "csv", "--seed-builtin"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "degree,diameter,order,source,bound,percentage");
    let row = lines
        .iter()
        .find(|l| l.starts_with("8,3,104,"))
        .expect("the (8, 3) record is present");
    assert!(row.ends_with(",129,80.6"), "got: {row}");
}

#[test]
fn table_text_explains_the_optimal_marker() {
    let (out, _dir) = run(&["table", "--seed-builtin"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert_eq!(
        text.lines().last().unwrap(),
        "* order proved optimal for the cell"
    );
    assert!(text.lines().any(|l| l.contains('*') && l.contains("order")));
}

#[test]
fn fit_writes_a_model_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "fit", "--what", "bounds", "--log", "--out", "fit.json", "--format", "json",
        ],
    );
    assert_code(&out, 0);
    let printed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(printed["transform"], "log");
    assert_eq!(printed["coefficients"].as_array().unwrap().len(), 10);
    assert!(printed["r_squared"].as_f64().unwrap() >= 0.998);
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("fit.json")).unwrap())
            .unwrap();
    assert_eq!(written, printed);
}

#[test]
fn fit_text_reports_r_squared_then_coefficients() {
    let (out, _dir) = run(&["fit", "--what", "bounds", "--log"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("R^2 0.99"), "got: {}", lines[0]);
    assert_eq!(lines.len(), 11, "one R^2 line plus ten coefficients");
    assert!(lines[1..].iter().all(|l| l.starts_with("coef ")));
}

#[test]
fn fit_rejects_an_out_of_range_polynomial_degree() {
    let (out, _dir) = run(&["fit", "--what", "bounds", "--degree", "5"]);
    assert_code(&out, 2);
}

#[test]
fn grid_percent_prints_csv() {
    let (out, _dir) = run(&["grid", "--what", "percent", "--seed-builtin"]);
    assert_code(&out, 0);
    assert!(stdout(&out).starts_with("degree,"));
}

#[test]
fn grid_diff_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["grid", "--what", "diff", "--out", "diff.csv"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out), "", "data went to the file, not stdout");
    assert!(stderr(&out).contains("wrote diff.csv"));
    let csv = std::fs::read_to_string(dir.path().join("diff.csv")).unwrap();
    assert!(csv.starts_with("degree,"));
}

#[test]
fn oracle_enumerates_small_cases() {
    let (out, _dir) = run(&["oracle", "--n", "13", "--deg", "4", "--diam", "2"]);
    assert_code(&out, 0);
    assert!(stdout(&out).lines().any(|l| l == "13;1,5"));
}

#[test]
fn unknown_flags_exit_2() {
    let (out, _dir) = run(&["bounds", "--definitely-not-a-flag"]);
    assert_code(&out, 2);
}

#[test]
fn bare_seed_builtin_creates_the_records_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["--seed-builtin"]);
    assert_code(&out, 0);
    assert!(dir.path().join("records.json").exists());
    // Without the flag, a bare invocation is a usage error.
    let bare = run_in(dir.path(), &[]);
    assert_code(&bare, 2);
    assert!(stderr(&bare).contains("subcommand is required"));
}

#[test]
fn records_flag_redirects_the_table_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &["--records", "mine.json", "--seed-builtin", "table", "--format", "csv"],
    );
    assert_code(&out, 0);
    assert!(dir.path().join("mine.json").exists());
    assert!(!dir.path().join("records.json").exists());
}
