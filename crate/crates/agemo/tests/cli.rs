//! End-to-end tests of the binary: golden outputs (byte-identical by
//! contract), exit codes, and determinism across runs.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agemo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).expect("utf-8 output")
}

#[test]
fn g_status_example_is_golden() {
    let out = run(&["compute", "lambda:q=2", "M:alpha=2", "g-status"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "M(2): G1 ✓(20), G2 ✓(20), G3 ✗\n");
}

#[test]
fn explore_self_loop_dot_is_golden() {
    let out = run(&["explore", "lambda:q=2", "M:alpha=0", "--dot"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "digraph component {\n  rankdir=LR;\n  n0 [label=\"M(0)\"];\n  n0 -> n0;\n}\n"
    );
}

#[test]
fn explore_json_is_byte_identical_across_runs() {
    let args = ["explore", "lambda:q=2", "M:alpha=0", "--walk-horizon", "4"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let parsed: serde_json::Value = serde_json::from_str(stdout(&a)).expect("valid json");
    assert_eq!(parsed["shape"], "A~0");
    assert_eq!(parsed["closed"], true);
    assert_eq!(parsed["vertices"].as_array().unwrap().len(), 1);
}

#[test]
fn validate_accepts_the_bundled_sources() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for file in ["lambda.quiver", "lambda_prime.quiver", "lambda_tilde.quiver", "dual_numbers.table"] {
        let path = data.join(file);
        let out = run(&["validate", path.to_str().unwrap()]);
        assert!(out.status.success(), "{file}: {}", stdout(&out));
        assert!(stdout(&out).contains("ok"), "{file}: {}", stdout(&out));
    }
}

#[test]
fn validate_reports_parse_position() {
    let dir = std::env::temp_dir().join("agemo-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.table");
    std::fs::write(&path, "algebra broken\nfield Q\nbasis a b\nunit 1 0\nmul 5 1 = 0 0\n").unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 5"), "stderr: {err}");
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0: success.
    assert_eq!(run(&["compute", "lambda:q=2", "M:alpha=1", "dims"]).status.code(), Some(0));
    // 2: unknown builtin, unknown op, malformed spec, bad flag value.
    assert_eq!(run(&["compute", "nope", "M:alpha=1", "dims"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "lambda:q=2", "M:alpha=1", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "lambda:q=2", "M:alpha", "dims"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "lambda:q=0", "M:alpha=1", "dims"]).status.code(), Some(2));
    assert_eq!(run(&["explore", "lambda:q=2", "M:alpha=0", "--walk-horizon", "0"]).status.code(), Some(2));
    assert_eq!(run(&["--bogus-flag"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_report_file() {
    let dir = std::env::temp_dir().join("agemo-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let _ = std::fs::remove_file(&path);
    let out = run(&[
        "compute", "lambda:q=2", "M:alpha=2", "k", "--format", "json",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(parsed["k_dim"], 1);
    assert_eq!(parsed["torsionless"], false);
}

#[test]
fn q_flag_binds_the_builtin_parameter() {
    // Over L(-1) the module M(3) has syzygy period 2, so its Ext profile
    // vanishes and its component closes into a 2-cycle.
    let out = run(&["compute", "lambda", "M:alpha=3", "gp-certify", "--q", "-1", "--horizon", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("GpExact"), "{}", stdout(&out));
}

#[test]
fn table_algebra_supports_simple_and_regular() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join("dual_numbers.table");
    let out = run(&["compute", data.to_str().unwrap(), "simple", "dims", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out)).unwrap();
    assert_eq!(parsed["dim"], 1);
    // The dual numbers are self-injective: the simple is its own syzygy.
    assert_eq!(parsed["syzygy_dim"], 1);
    // Parametrized families need a quiver presentation.
    let out = run(&["compute", data.to_str().unwrap(), "M:alpha=1", "dims"]);
    assert_eq!(out.status.code(), Some(2));
}
