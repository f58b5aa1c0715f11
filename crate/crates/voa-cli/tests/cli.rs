//! Binary-level tests: argument validation, exit codes, output targets,
//! and the markdown renderer.

use std::process::{Command, Output};

fn voa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_voa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process not killed by signal")
}

#[test]
fn successful_run_exits_zero_with_valid_json() {
    let out = voa(&["classify", "--l", "2"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(doc["command"], "classify");
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["timing_ms"], 0);
    assert_eq!(doc["payload"]["count"], 4);
}

#[test]
fn odd_rank_is_rejected_with_usage_error() {
    let out = voa(&["verify-singular", "--l", "3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("even"));
}

#[test]
fn zero_rank_is_rejected_with_usage_error() {
    let out = voa(&["zhu", "--l", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn large_rank_needs_explicit_override() {
    let refused = voa(&["classify", "--l", "14"]);
    assert_eq!(exit_code(&refused), 2);
    assert!(String::from_utf8_lossy(&refused.stderr).contains("--unsafe-large"));

    // With the override the same arguments are accepted (use the cheapest
    // subcommand to keep the test fast).
    let allowed = voa(&["verify-singular", "--l", "14", "--unsafe-large"]);
    assert_eq!(exit_code(&allowed), 0, "stderr: {}", String::from_utf8_lossy(&allowed.stderr));
}

#[test]
fn large_cutoff_needs_explicit_override() {
    let refused = voa(&["admissible", "--l", "2", "--max-m", "60"]);
    assert_eq!(exit_code(&refused), 2);

    let allowed = voa(&["admissible", "--l", "2", "--max-m", "60", "--unsafe-large"]);
    assert_eq!(exit_code(&allowed), 0);
}

#[test]
fn unknown_subcommand_and_missing_subcommand_exit_two() {
    assert_eq!(exit_code(&voa(&["frobnicate"])), 2);
    assert_eq!(exit_code(&voa(&[])), 2);
}

#[test]
fn report_can_be_written_to_a_file() {
    let path = std::env::temp_dir().join(format!("voa-cli-test-{}.json", std::process::id()));
    let out = voa(&["zhu", "--l", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(out.stdout.is_empty(), "report should go to the file, not stdout");
    let body = std::fs::read(&path).expect("report file written");
    std::fs::remove_file(&path).ok();
    let doc: serde_json::Value = serde_json::from_slice(&body).expect("valid JSON");
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["payload"]["matches_closed_form"], true);
}

#[test]
fn markdown_format_renders_headed_report() {
    let out = voa(&["polynomials", "--l", "2", "--format", "md"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).expect("utf-8");
    assert!(text.starts_with("# voa polynomials"), "got: {}", &text[..text.len().min(60)]);
    assert!(text.contains("status"));
    assert!(text.contains("pass"));
}

#[test]
fn timing_goes_to_stderr_not_the_report() {
    let out = voa(&["verify-singular", "--l", "2"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("ms"), "stderr: {err}");
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["timing_ms"], 0, "report timing must be fixed for reproducibility");
}
