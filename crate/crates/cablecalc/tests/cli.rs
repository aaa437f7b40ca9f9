//! End-to-end tests that spawn the compiled binary and check bytes, exit
//! codes, and stream routing exactly as a shell user would see them.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cablecalc"))
}

/// Run the binary with `args` and return its output, failing loudly if the
/// process could not be spawned at all.
fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary spawns")
}

fn stdout_str(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_str(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process exits normally")
}

#[test]
fn spectrum_reports_the_worked_example_exactly() {
    let out = run(&["spectrum", "(3,2),(21,4)"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_str(&out));
    assert_eq!(
        stdout_str(&out),
        concat!(
            "{\"spectrum\":[8,3,0],",
            "\"gaps\":[{\"index\":1,\"order\":5},{\"index\":2,\"order\":3}],",
            "\"tunnel_number\":2,\"h_genus\":2,\"admissible\":true}\n"
        )
    );
}

#[test]
fn spectrum_accepts_the_json_descriptor_form() {
    let inline = run(&["spectrum", "(3,2),(21,4)"]);
    let json = run(&["spectrum", r#"{"base":[3,2],"cables":[[21,4]]}"#]);
    assert_eq!(exit_code(&json), 0, "stderr: {}", stderr_str(&json));
    assert_eq!(stdout_str(&json), stdout_str(&inline));
}

#[test]
fn spectrum_of_a_base_torus_knot() {
    let out = run(&["spectrum", "(3,2)"]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report["spectrum"], serde_json::json!([2, 0]));
    assert_eq!(report["tunnel_number"], serde_json::json!(1));
    assert_eq!(report["admissible"], serde_json::json!(true));
}

#[test]
fn non_admissible_knot_exits_two_with_the_diagnostic() {
    let out = run(&["spectrum", "(3,2),(25,4)"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stdout_str(&out).is_empty(), "diagnostics go to stderr");
    let err = stderr_str(&out);
    assert!(
        err.contains("not admissible at level 1: |25 - 24| = 1"),
        "unexpected stderr: {err}"
    );
}

#[test]
fn malformed_descriptor_exits_one_naming_the_token() {
    let out = run(&["spectrum", "(3,2),(21;4)"]);
    assert_eq!(exit_code(&out), 1);
    let err = stderr_str(&out);
    assert!(
        err.contains("malformed knot descriptor"),
        "unexpected stderr: {err}"
    );
    assert!(err.contains("21;4"), "the offending token is named: {err}");
}

#[test]
fn classify_vertical_matches_the_worked_example() {
    let out = run(&["classify", "3,2", "--vertical"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_str(&out));
    let classes: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let classes = classes.as_array().unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0]["kind"], serde_json::json!("vertical"));
    assert_eq!(classes[0]["outer"]["slope"], serde_json::json!([3, 2]));
    assert_eq!(classes[0]["inner"]["slope"], serde_json::json!([6, 1]));
    assert!(stderr_str(&out).contains("classified 1 surface class(es) in C(3,2)"));
}

#[test]
fn classify_planar_b_range_includes_the_meridional_class() {
    let out = run(&["classify", "(3,2)", "--planar-b", "-1..1"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_str(&out));
    let classes: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let classes = classes.as_array().unwrap();
    assert_eq!(classes.len(), 3, "k = -1, 0, 1 in ascending order");

    // k = -1: slopes -5/-4 and -5/-1 normalize with positive denominators.
    assert_eq!(classes[0]["params"]["k"], serde_json::json!(-1));
    assert_eq!(classes[0]["outer"]["slope"], serde_json::json!([5, 4]));
    assert_eq!(classes[0]["inner"]["slope"], serde_json::json!([5, 1]));

    // k = 0 is the meridional class on both boundaries.
    assert_eq!(classes[1]["params"]["k"], serde_json::json!(0));
    assert_eq!(classes[1]["outer"]["slope"], serde_json::json!([1, 0]));
    assert_eq!(classes[1]["inner"]["slope"], serde_json::json!([1, 0]));

    assert_eq!(classes[2]["params"]["k"], serde_json::json!(1));
    assert_eq!(classes[2]["outer"]["slope"], serde_json::json!([7, 4]));
    assert_eq!(classes[2]["inner"]["slope"], serde_json::json!([7, 1]));
}

#[test]
fn classify_rejects_non_coprime_pairs() {
    let out = run(&["classify", "4,2", "--vertical"]);
    assert_eq!(exit_code(&out), 1);
    let err = stderr_str(&out);
    assert!(err.contains("error:"), "unexpected stderr: {err}");
}

#[test]
fn enumerate_includes_the_worked_example_row() {
    let out = run(&[
        "--format",
        "csv",
        "enumerate",
        "--p-max",
        "25",
        "--q-max",
        "4",
        "--depth",
        "1",
    ]);
    assert_eq!(exit_code(&out), 0);
    let body = stdout_str(&out);
    let mut lines = body.lines();
    assert_eq!(
        lines.next(),
        Some("knot,admissible,spectrum,gaps,tunnel_number")
    );
    assert!(
        body.lines()
            .any(|l| l == "\"(3,2),(21,4)\",true,8;3;0,1:5;2:3,2"),
        "worked-example row missing"
    );
    assert!(
        body.lines().any(|l| l == "\"(3,2),(25,4)\",false,,,"),
        "non-admissible rows keep blank invariant cells"
    );
}

#[test]
fn enumerate_depth_zero_gives_torus_spectra() {
    let out = run(&[
        "--format",
        "jsonl",
        "enumerate",
        "--p-max",
        "5",
        "--q-max",
        "5",
        "--depth",
        "0",
    ]);
    assert_eq!(exit_code(&out), 0);
    let body = stdout_str(&out);
    assert!(!body.is_empty());
    for line in body.lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(record["admissible"], serde_json::json!(true));
        let base = record["knot"]["base"].as_array().unwrap();
        let (p, q) = (base[0].as_i64().unwrap(), base[1].as_i64().unwrap());
        let expected = serde_json::json!([p.abs().min(q), 0]);
        assert_eq!(record["spectrum"], expected, "knot ({p},{q})");
        assert_eq!(record["tunnel_number"], serde_json::json!(1));
    }
}

#[test]
fn empty_grid_enumerates_zero_rows() {
    let out = run(&[
        "--format",
        "csv",
        "enumerate",
        "--p-max",
        "1",
        "--q-max",
        "5",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_str(&out),
        "knot,admissible,spectrum,gaps,tunnel_number\n"
    );
    assert!(stderr_str(&out).contains("enumerated 0 knot(s), 0 admissible"));
}

#[test]
fn enumerate_runs_are_byte_identical() {
    let args = [
        "--format",
        "csv",
        "enumerate",
        "--p-max",
        "15",
        "--q-max",
        "4",
        "--depth",
        "1",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn worker_count_does_not_change_the_bytes() {
    let args = [
        "--format",
        "jsonl",
        "enumerate",
        "--p-max",
        "12",
        "--q-max",
        "4",
        "--depth",
        "1",
    ];
    let single = bin()
        .args(args)
        .env("CABLECALC_THREADS", "1")
        .output()
        .unwrap();
    let multi = bin()
        .args(args)
        .env("CABLECALC_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(exit_code(&single), 0);
    assert_eq!(exit_code(&multi), 0);
    assert_eq!(single.stdout, multi.stdout);
}

#[test]
fn invalid_thread_count_exits_one() {
    let out = bin()
        .args(["enumerate", "--p-max", "3", "--q-max", "2", "--depth", "0"])
        .env("CABLECALC_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_str(&out).contains("CABLECALC_THREADS"));
}

#[test]
fn search_by_spectrum_finds_the_worked_example() {
    let out = run(&[
        "--format",
        "csv",
        "search",
        "--p-max",
        "25",
        "--q-max",
        "4",
        "--depth",
        "1",
        "--target",
        "spectrum=8,3,0",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_str(&out)
        .lines()
        .any(|l| l == "\"(3,2),(21,4)\",true,8;3;0,1:5;2:3,2"));
}

#[test]
fn search_by_gaps_finds_the_worked_example() {
    let out = run(&[
        "--format",
        "csv",
        "search",
        "--p-max",
        "25",
        "--q-max",
        "4",
        "--depth",
        "1",
        "--target",
        "gaps=1:5,2:3",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_str(&out)
        .lines()
        .any(|l| l == "\"(3,2),(21,4)\",true,8;3;0,1:5;2:3,2"));
}

#[test]
fn search_for_an_unattainable_spectrum_is_empty() {
    // Torus knots in the grid have leading entry at least 2, cables at
    // least 4, so (1,0) matches nothing.
    let out = run(&[
        "--format",
        "csv",
        "search",
        "--p-max",
        "25",
        "--q-max",
        "4",
        "--depth",
        "1",
        "--target",
        "spectrum=1,0",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_str(&out),
        "knot,admissible,spectrum,gaps,tunnel_number\n"
    );
    assert!(stderr_str(&out).contains("matched 0 knot(s)"));
}

#[test]
fn search_results_are_a_subset_of_enumerate_rows() {
    let grid = ["--p-max", "12", "--q-max", "4", "--depth", "1"];
    let mut enum_args = vec!["--format", "csv", "enumerate"];
    enum_args.extend_from_slice(&grid);
    let mut search_args = vec!["--format", "csv", "search"];
    search_args.extend_from_slice(&grid);
    search_args.extend_from_slice(&["--target", "gaps=1:2"]);

    let all = run(&enum_args);
    let found = run(&search_args);
    assert_eq!(exit_code(&all), 0);
    assert_eq!(exit_code(&found), 0);
    let enum_body = stdout_str(&all);
    let all_rows: std::collections::HashSet<&str> = enum_body.lines().skip(1).collect();
    let search_body = stdout_str(&found);
    let found_rows: Vec<&str> = search_body.lines().skip(1).collect();
    assert!(
        !found_rows.is_empty(),
        "the probe target should match something"
    );
    for row in found_rows {
        assert!(all_rows.contains(row), "search row not in enumerate: {row}");
    }
}

#[test]
fn malformed_search_target_exits_one() {
    let out = run(&[
        "search",
        "--p-max",
        "3",
        "--q-max",
        "2",
        "--target",
        "spectrum=a,b",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_str(&out).contains("malformed target"));
}

#[test]
fn verify_passes_on_the_default_grid() {
    let out = run(&["verify"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_str(&out));
    let body = stdout_str(&out);
    let passes = body
        .lines()
        .filter(|l| l.starts_with("suite ") && l.contains(": PASS"))
        .count();
    assert_eq!(passes, 15, "every suite reports PASS:\n{body}");
    assert!(!body.contains("FAIL"));
}

#[test]
fn verify_passes_on_a_degenerate_grid() {
    let out = run(&["verify", "--p-max", "9", "--q-max", "2", "--depth", "1"]);
    assert_eq!(exit_code(&out), 0, "stdout: {}", stdout_str(&out));
}

#[test]
fn verify_with_an_injected_fault_exits_three_and_names_a_witness() {
    // Depth 2 matters: the flipped sign only changes an entry when some
    // level's fiber product is small enough to land within q of the next p.
    let out = run(&[
        "verify",
        "--p-max",
        "9",
        "--q-max",
        "3",
        "--depth",
        "2",
        "--inject-fault",
    ]);
    assert_eq!(exit_code(&out), 3);
    let body = stdout_str(&out);
    assert!(
        body.contains("suite index-top-entry: FAIL"),
        "stdout: {body}"
    );
    assert!(
        body.contains("witness:"),
        "a concrete witness is printed: {body}"
    );
}

#[test]
fn output_flag_writes_the_same_bytes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let to_stdout = run(&["spectrum", "(3,2),(21,4)"]);
    let to_file = run(&[
        "--output",
        path.to_str().unwrap(),
        "spectrum",
        "(3,2),(21,4)",
    ]);
    assert_eq!(exit_code(&to_file), 0);
    assert!(stdout_str(&to_file).is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, to_stdout.stdout);
}

#[test]
fn help_and_version_exit_zero() {
    let help = run(&["--help"]);
    assert_eq!(exit_code(&help), 0);
    assert!(stdout_str(&help).contains("spectrum"));
    let version = run(&["--version"]);
    assert_eq!(exit_code(&version), 0);
}

#[test]
fn unknown_subcommand_exits_one() {
    let out = run(&["spectra"]);
    assert_eq!(exit_code(&out), 1);
}
