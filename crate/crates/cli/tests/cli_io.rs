//! Black-box checks of the command-line contract through the compiled
//! binary: exit codes (0 certified, 1 input error, 2 undecided), report
//! payloads on stdout, error messages on stderr, and the CSV side output.
//! Every fixture is written to a fresh temp directory by the test itself.

use std::process::{Command, Output};

use tempfile::TempDir;

const CONST_2: &str = r#"{"ambient":"unilateral","form":"constant","parameters":{"c":"2/1"}}"#;
/// Divergent, but with a deep initial dip: the smallest certified window
/// length is ≈ 13800, beyond the search cap, so classification is undecided.
const SLOW_START: &str = r#"{"ambient":"unilateral","form":"eventually_periodic","parameters":{"prefix":["1/1000000"],"period":["1001/1000"]}}"#;
const STEP: &str = r#"{"ambient":"bilateral","form":"two_sided_eventually_periodic","parameters":{"middle_start":1,"middle":[],"left_period":["1/1"],"right_period":["2/1"]}}"#;
const E1: &str = r#"{"ambient":"unilateral","entries":[[1,"1/1","0/1"]]}"#;
const ZERO: &str = r#"{"ambient":"unilateral","entries":[]}"#;
const ONES: &str =
    r#"{"ambient":"unilateral","entries":[],"tail":{"start":1,"value":["1/1","0/1"]}}"#;
const ONES_BI: &str = r#"{"ambient":"bilateral","entries":[],"tail":{"start":1,"value":["1/1","0/1"],"left":{"end":0,"value":["1/1","0/1"]}}}"#;

fn write(dir: &TempDir, name: &str, contents: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).expect("write fixture");
    path.to_str().expect("utf-8 temp path").to_owned()
}

fn jshift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jshift"))
        .args(args)
        .env_remove("JSHIFT_DEFAULT_HORIZON")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn classify_certified_spec_exits_zero_with_report() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "const2.json", CONST_2);
    let out = jshift(&["classify", "--spec", &spec]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let report = stdout(&out);
    assert!(report.contains("\"certified_j_class\""));
    assert!(report.contains("\"is_jmix\": true"));
    assert!(report.contains("\"salas\""));
    assert!(report.contains("\"j0\""));
}

#[test]
fn classify_undecided_spec_exits_two() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "slow.json", SLOW_START);
    let out = jshift(&["classify", "--spec", &spec]);
    assert_eq!(code(&out), 2, "stderr: {}", stderr(&out));
    let report = stdout(&out);
    assert!(report.contains("\"undecided\""));
    assert!(report.contains("search cap"));
}

#[test]
fn classify_bilateral_step_reports_discrepancy() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "step.json", STEP);
    let out = jshift(&["classify", "--spec", &spec]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let report = stdout(&out);
    assert!(report.contains("\"certified_not_j_class\""));
    assert!(report.contains("\"discrepancy\": true"));
}

#[test]
fn classify_missing_file_exits_one() {
    let out = jshift(&["classify", "--spec", "/no/such/file.json"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).starts_with("error:"));
}

#[test]
fn classify_malformed_spec_exits_one() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "broken.json", "{\"ambient\": \"unilateral\",");
    let out = jshift(&["classify", "--spec", &spec]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).starts_with("error:"));
}

#[test]
fn default_horizon_env_is_honored_and_validated() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "const2.json", CONST_2);
    let ok = Command::new(env!("CARGO_BIN_EXE_jshift"))
        .args(["classify", "--spec", &spec])
        .env("JSHIFT_DEFAULT_HORIZON", "128")
        .output()
        .expect("binary runs");
    assert_eq!(code(&ok), 0);
    let bad = Command::new(env!("CARGO_BIN_EXE_jshift"))
        .args(["classify", "--spec", &spec])
        .env("JSHIFT_DEFAULT_HORIZON", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(code(&bad), 1);
    assert!(stderr(&bad).starts_with("error:"));
}

#[test]
fn witness_single_power_prints_exact_distance() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "const2.json", CONST_2);
    let x = write(&dir, "zero.json", ZERO);
    let y = write(&dir, "e1.json", E1);
    let out = jshift(&["witness", "--spec", &spec, "--x", &x, "--y", &y, "--n", "3"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let report = stdout(&out);
    assert!(report.contains("exact distance to the base: 1/8"));
    assert!(report.contains("shift identity on 1..=16: ok"));
    assert!(report.contains("z_4 = 1/8"));
}

#[test]
fn witness_range_prints_halving_table() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "const2.json", CONST_2);
    let x = write(&dir, "zero.json", ZERO);
    let y = write(&dir, "ones.json", ONES);
    let out = jshift(&[
        "witness", "--spec", &spec, "--x", &x, "--y", &y, "--range", "1..10",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let report = stdout(&out);
    assert!(report.contains("1/2"));
    assert!(report.contains("1/1024"));
}

#[test]
fn witness_power_below_support_shift_exits_one() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "const2.json", CONST_2);
    let x = write(&dir, "e1.json", E1);
    let y = write(&dir, "e1b.json", E1);
    let out = jshift(&["witness", "--spec", &spec, "--x", &x, "--y", &y, "--n", "1"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("below the witness support shift"));
}

#[test]
fn witness_requires_exactly_one_of_n_and_range() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "const2.json", CONST_2);
    let x = write(&dir, "zero.json", ZERO);
    let y = write(&dir, "e1.json", E1);
    let neither = jshift(&["witness", "--spec", &spec, "--x", &x, "--y", &y]);
    assert_eq!(code(&neither), 1);
    let both = jshift(&[
        "witness", "--spec", &spec, "--x", &x, "--y", &y, "--n", "3", "--range", "1..4",
    ]);
    assert_eq!(code(&both), 1);
}

#[test]
fn probe_writes_csv_with_exact_values() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "const2.json", CONST_2);
    let y = write(&dir, "ones.json", ONES);
    let csv_path = dir.path().join("sweep.csv");
    let csv_str = csv_path.to_str().unwrap();
    let out = jshift(&[
        "probe", "--spec", &spec, "--y", &y, "--delta", "1/4", "--window", "1..4", "--range",
        "1..6", "--csv", csv_str,
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let csv = std::fs::read_to_string(&csv_path).expect("CSV side output written");
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,min_error,argmin_k,exact"));
    assert_eq!(lines.next(), Some("1,1/2,1,true"));
    assert_eq!(lines.next(), Some("2,0/1,1,true"));
}

#[test]
fn probe_preimage_json_reports_flat_left_tail_values() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "step.json", STEP);
    let y = write(&dir, "ones_bi.json", ONES_BI);
    let out = jshift(&[
        "probe",
        "--spec",
        &spec,
        "--y",
        &y,
        "--preimage",
        "--tol",
        "1/100",
        "--window",
        "-8..8",
        "--range",
        "8..11",
        "--json",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let report = stdout(&out);
    assert!(report.contains("\"99/100\""));
    assert!(report.contains("\"99/200\""));
    assert!(report.contains("\"99/400\""));
}

#[test]
fn probe_rejects_bad_window_syntax() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "const2.json", CONST_2);
    let y = write(&dir, "ones.json", ONES);
    let out = jshift(&[
        "probe", "--spec", &spec, "--y", &y, "--delta", "1/4", "--window", "1..", "--range", "1..6",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("expected the inclusive form A..B"));
}

#[test]
fn probe_requires_exactly_one_mode() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "const2.json", CONST_2);
    let y = write(&dir, "ones.json", ONES);
    let neither = jshift(&[
        "probe", "--spec", &spec, "--y", &y, "--window", "1..4", "--range", "1..6",
    ]);
    assert_eq!(code(&neither), 1);
    let both = jshift(&[
        "probe",
        "--spec",
        &spec,
        "--y",
        &y,
        "--delta",
        "1/4",
        "--preimage",
        "--tol",
        "1/100",
        "--window",
        "1..4",
        "--range",
        "1..6",
    ]);
    assert_eq!(code(&both), 1);
}

#[test]
fn gallery_unknown_item_exits_one_and_lists_items() {
    let out = jshift(&["gallery", "no-such-item"]);
    assert_eq!(code(&out), 1);
    let message = stderr(&out);
    assert!(message.contains("const-2"));
    assert!(message.contains("direct-sum-3I-2B"));
}

#[test]
fn help_and_version_exit_zero() {
    let help = jshift(&["--help"]);
    assert_eq!(code(&help), 0);
    assert!(stdout(&help).contains("classify"));
    let version = jshift(&["--version"]);
    assert_eq!(code(&version), 0);
}
