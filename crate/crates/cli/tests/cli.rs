//! End-to-end checks of the binary: command surface, exit codes, file
//! formats, and config round-trips.

use std::path::Path;
use std::process::{Command, Output};

fn selfsim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfsim"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn eval_kummer_exponential_case() {
    let out = selfsim(&["eval", "--fn", "1f1", "--a", "0.5", "--c", "0.5", "--x", "1.0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("2.718281828459045"), "{text}");
    assert!(text.contains("converged = true"), "{text}");
}

#[test]
fn eval_rejects_gauss_argument_outside_disk() {
    let out = selfsim(&[
        "eval", "--fn", "2f1", "--a", "1.0", "--b", "1.0", "--c", "2.0", "--x", "1.5",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_rejects_negative_integer_denominator() {
    let out = selfsim(&["eval", "--fn", "1f1", "--a", "0.5", "--c", "-2", "--x", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_reports_convergence_failure_with_exit_three() {
    let out = selfsim(&[
        "eval",
        "--fn",
        "1f1",
        "--a",
        "0.5",
        "--c",
        "1.5",
        "--x",
        "8.0",
        "--max-terms",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert!(text.contains("converged = false"), "{text}");
}

#[test]
fn unknown_flag_is_a_config_error() {
    let out = selfsim(&["eval", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn list_t5_prints_nine_tagged_rows() {
    let out = selfsim(&["list", "--family", "t5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 9);
    assert!(rows[0].contains("Eq. 5.16"));
    assert!(rows[8].contains("Eq. 5.24"));
}

#[test]
fn list_all_covers_every_branch() {
    let out = selfsim(&["list"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 2 + 4 + 3 + 9 + 4);
}

#[test]
fn branch_eval_heat_kernel_value() {
    let out = selfsim(&[
        "branch-eval",
        "--family",
        "p2",
        "--branch",
        "1",
        "--alpha",
        "0",
        "--x",
        "1",
        "--t",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("7.788007830714"), "{}", stdout(&out));
}

#[test]
fn sample_emits_coordinates_then_field_header() {
    let out = selfsim(&[
        "sample", "--family", "p3", "--branch", "1", "--grid-x", "1:2:2", "--grid-y", "1:2:2",
        "--grid-t", "1:2:2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("x,y,t,u\n"), "{text}");
    assert_eq!(text.lines().count(), 1 + 8);
}

#[test]
fn dumped_config_reruns_to_identical_csv() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    let first = dir.path().join("a.csv");
    let second = dir.path().join("b.csv");

    let out = selfsim(&[
        "sample",
        "--family",
        "f6",
        "--branch",
        "2",
        "--grid-x",
        "0.5:2:4",
        "--grid-t",
        "0.5:2:3",
        "--constant",
        "1.5",
        "--dump-config",
        cfg.to_str().unwrap(),
        "--out",
        first.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    // re-run purely from the dumped config, overriding only the output path
    let out = selfsim(&[
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        second.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "re-run from dumped config must be byte-identical");
}

#[test]
fn verify_writes_report_pair_with_stable_schema() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("report");
    let out = selfsim(&[
        "verify",
        "--family",
        "t4",
        "--branch",
        "1",
        "--out",
        base.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let csv = std::fs::read_to_string(format!("{}.csv", base.display())).unwrap();
    assert!(csv.starts_with("x,y,residual,rel_residual\n"), "{csv}");

    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(format!("{}.json", base.display())).unwrap())
            .unwrap();
    for key in [
        "family",
        "branch",
        "params",
        "max_abs_residual",
        "max_rel_residual",
        "observed_order",
        "verdict",
    ] {
        assert!(json.get(key).is_some(), "summary missing {key}");
    }
    assert_eq!(json["verdict"], "CONSISTENT");
    assert_eq!(json["family"], "t4");
}

#[test]
fn verify_time_families_use_xt_schema() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("report");
    let out = selfsim(&[
        "verify",
        "--family",
        "p2",
        "--branch",
        "2",
        "--out",
        base.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(format!("{}.csv", base.display())).unwrap();
    assert!(csv.starts_with("x,t,residual,rel_residual\n"), "{csv}");
    assert!(Path::new(&format!("{}.json", base.display())).exists());
}

#[test]
fn adjudicate_resolves_each_disputed_form() {
    let out = selfsim(&["adjudicate", "--family", "p3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Eq. 3.13"), "{text}");
    assert!(text.contains("P*omega CONSISTENT"), "{text}");
    assert!(text.contains("printed INCONSISTENT"), "{text}");
}

#[test]
fn eval_supports_parameter_shift_derivatives() {
    let out = selfsim(&[
        "eval", "--fn", "1f1", "--a", "0.5", "--c", "1.5", "--x", "0", "--deriv", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // a/c = 1/3
    assert!(stdout(&out).contains("3.333333333333333"), "{}", stdout(&out));
}
