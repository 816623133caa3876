//! Black-box tests of the installed binary: argument handling, exit
//! codes, output formats, and the schedule-trimming flags.

use std::path::PathBuf;
use std::process::{Command, Output};

fn problem_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../problems")
        .join(name)
}

fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symlat"))
        .args(args)
        .output()
        .expect("spawn binary")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn no_arguments_is_a_usage_error() {
    let out = run_cli(&[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains("Usage"));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = run_cli(&["frobnicate", "whatever.toml"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_and_version_succeed() {
    let help = run_cli(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    let text = stdout_str(&help);
    for cmd in [
        "check-invariance",
        "symdim",
        "solve",
        "sublattice",
        "orbits",
        "all-symmetric",
        "full",
    ] {
        assert!(text.contains(cmd), "help lists {cmd}");
    }
    let version = run_cli(&["--version"]);
    assert_eq!(version.status.code(), Some(0));
}

#[test]
fn missing_file_exits_one() {
    let out = run_cli(&["symdim", "/no/such/problem.toml"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains("error"));
}

#[test]
fn malformed_toml_exits_one() {
    let dir = std::env::temp_dir().join("symlat-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.toml");
    std::fs::write(&path, "n = \"not a number\"\n[[[").unwrap();
    let out = run_cli(&["symdim", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains("error"));
}

#[test]
fn invalid_problem_data_exits_one() {
    let dir = std::env::temp_dir().join("symlat-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad-matrix.toml");
    // Non-unimodular substitution matrix: rejected while resolving.
    std::fs::write(
        &path,
        r#"
n = 1
k = 1
conductor = 1
module_generators = ["s1^1"]

[[group_generators]]
r = ["1"]
m = [[2]]

[schedule]
radii = [1, 2]
pads = [1, 2]
"#,
    )
    .unwrap();
    let out = run_cli(&["symdim", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains("error"));
}

#[test]
fn non_invariant_system_fails_symdim_with_a_math_error() {
    let path = problem_path("neg-noninvariant.toml");
    let out = run_cli(&["symdim", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("not invariant"));
}

#[test]
fn text_report_lists_the_pipeline_sections() {
    let path = problem_path("reflection-sum.toml");
    let out = run_cli(&["full", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    for needle in [
        "problem reflection-sum",
        "invariance",
        "symmetric dimension",
        "solutions",
        "sublattice",
        "orbits",
    ] {
        assert!(text.contains(needle), "text report mentions {needle}");
    }
}

#[test]
fn machine_report_is_valid_json_with_the_command_name() {
    let path = problem_path("reflection-sum.toml");
    let out = run_cli(&["solve", path.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], serde_json::json!("solve"));
    assert_eq!(v["problem"], serde_json::json!("reflection-sum"));
    assert_eq!(v["solutions"]["dim_symmetric"], serde_json::json!(1));
    assert!(v.get("symmetric_dimension").is_none());
}

#[test]
fn window_max_trims_the_schedule() {
    let path = problem_path("reflection-sum.toml");
    let full = run_cli(&["symdim", path.to_str().unwrap(), "--format", "machine"]);
    let trimmed = run_cli(&[
        "symdim",
        path.to_str().unwrap(),
        "--window-max",
        "2",
        "--format",
        "machine",
    ]);
    let v_full: serde_json::Value = serde_json::from_slice(&full.stdout).unwrap();
    let v_trim: serde_json::Value = serde_json::from_slice(&trimmed.stdout).unwrap();
    let count_full = v_full["symmetric_dimension"]["windows"].as_array().unwrap().len();
    let count_trim = v_trim["symmetric_dimension"]["windows"].as_array().unwrap().len();
    assert_eq!(count_full, 3);
    assert_eq!(count_trim, 1);
    for entry in v_trim["symmetric_dimension"]["windows"].as_array().unwrap() {
        assert!(entry["radius"].as_i64().unwrap() <= 2);
    }
}

#[test]
fn window_max_below_every_radius_is_an_input_error() {
    let path = problem_path("reflection-sum.toml");
    let out = run_cli(&["symdim", path.to_str().unwrap(), "--window-max", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn pad_max_trims_the_pad_schedule() {
    let path = problem_path("reflection-sum.toml");
    let out = run_cli(&[
        "symdim",
        path.to_str().unwrap(),
        "--pad-max",
        "2",
        "--format",
        "machine",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for entry in v["symmetric_dimension"]["windows"].as_array().unwrap() {
        assert!(entry["pad_used"].as_i64().unwrap() <= 2);
    }
}

#[test]
fn stability_runs_flag_must_be_at_least_two() {
    let path = problem_path("reflection-sum.toml");
    let out = run_cli(&["symdim", path.to_str().unwrap(), "--stability-runs", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn every_subcommand_succeeds_on_a_clean_problem() {
    let path = problem_path("reflection-difference.toml");
    for cmd in [
        "check-invariance",
        "symdim",
        "solve",
        "sublattice",
        "orbits",
        "all-symmetric",
        "full",
    ] {
        let out = run_cli(&[cmd, path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{cmd} succeeds");
        assert!(!out.stdout.is_empty(), "{cmd} prints a report");
    }
}
