//! End-to-end tests of the binary: exit-code contract, report determinism,
//! and spec-file diagnostics.

use std::path::Path;
use std::process::{Command, Output};

fn logbm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logbm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.display().to_string()
}

#[test]
fn verify_exit_zero_and_equality_report() {
    let dir = tempfile::tempdir().unwrap();
    let k = write(dir.path(), "cube2.json", r#"{"kind":"cube","dim":2}"#);
    let norm = write(
        dir.path(),
        "norm.json",
        r#"{"form":"max","vectors":[["1","0"]]}"#,
    );
    let out = logbm(&["verify", &k, &norm, "--checks", "theorem_1_4"]);
    assert!(out.status.success(), "{out:?}");
    let payload: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(payload["header"]["schemaVersion"], 1);
    let result = &payload["results"][0];
    assert_eq!(result["check"], "theorem_1_4");
    assert_eq!(result["holds"], true);
    assert_eq!(result["equality"], true);
    assert_eq!(result["lhs"], "4");
}

#[test]
fn malformed_rational_exits_2_with_field_name() {
    let dir = tempfile::tempdir().unwrap();
    let k = write(dir.path(), "bad.json", r#"{"kind":"segment","v":["1/0","1"]}"#);
    let norm = write(
        dir.path(),
        "norm.json",
        r#"{"form":"max","vectors":[["1","0"]]}"#,
    );
    let out = logbm(&["verify", &k, &norm, "--checks", "theorem_1_4"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("1/0"), "diagnostic names the value: {stderr}");
    assert!(stderr.contains("v"), "diagnostic names the field: {stderr}");
}

#[test]
fn unknown_check_and_unknown_flag_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let k = write(dir.path(), "cube2.json", r#"{"kind":"cube","dim":2}"#);
    let out = logbm(&["verify", &k, "--checks", "no_such_check"]);
    assert_eq!(out.status.code(), Some(2));

    let out = logbm(&["verify", &k, "--checks", "theorem_1_7", "--bogus-flag"]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn probe_verdicts_never_flip_the_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let k = write(dir.path(), "b1_3.json", r#"{"kind":"crossPolytope","dim":3}"#);
    let m = write(dir.path(), "cube3.json", r#"{"kind":"cube","dim":3}"#);
    let out = logbm(&["verify", &k, &m, "--checks", "logbm_conjecture"]);
    assert!(out.status.success());

    // the false-inequality demo reports a violation by design and still
    // exits 0 (the violation is the expected outcome)
    let out = logbm(&["demo", "false-inequality", "--dim", "3"]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("violated: lhs 2 vs rhs 3/2"), "{stdout}");
}

#[test]
fn mixed_volumes_prints_exact_vector() {
    let dir = tempfile::tempdir().unwrap();
    let k = write(dir.path(), "cube3.json", r#"{"kind":"cube","dim":3}"#);
    let m = write(
        dir.path(),
        "sq.json",
        r#"{"kind":"square2d","dim":3,"i":1,"j":2}"#,
    );
    let out = logbm(&["mixed-volumes", &k, &m]);
    assert!(out.status.success());
    let payload: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        payload["mixedVolumes"],
        serde_json::json!(["8", "16/3", "8/3", "0"])
    );

    // K = M = cube²: "4, 4, 4"
    let k2 = write(dir.path(), "cube2.json", r#"{"kind":"cube","dim":2}"#);
    let out = logbm(&["mixed-volumes", &k2, &k2]);
    let payload: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(payload["mixedVolumes"], serde_json::json!(["4", "4", "4"]));

    // segment M: V2 = 0
    let seg = write(dir.path(), "seg.json", r#"{"kind":"segment","v":["1","0"]}"#);
    let out = logbm(&["mixed-volumes", &k2, &seg]);
    let payload: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(payload["mixedVolumes"][2], "0");
}

#[test]
fn report_files_are_byte_identical_outside_the_header() {
    let dir = tempfile::tempdir().unwrap();
    let k = write(dir.path(), "cube3.json", r#"{"kind":"cube","dim":3}"#);
    let out_a = dir.path().join("a.json");
    let out_b = dir.path().join("b.json");
    for out in [&out_a, &out_b] {
        let run = logbm(&[
            "verify",
            &k,
            "--checks",
            "theorem_1_7,lemma_3_1",
            "--v",
            "1,1,0",
            "--u",
            "1,0,0",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(run.status.success());
    }
    let a: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_a).unwrap()).unwrap();
    let b: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_b).unwrap()).unwrap();
    // identical results; only the header's wall time may differ
    assert_eq!(a["results"], b["results"]);
    assert_eq!(
        serde_json::to_string(&a["results"]).unwrap(),
        serde_json::to_string(&b["results"]).unwrap()
    );
}

#[test]
fn campaign_runs_from_config_with_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let config = write(
        dir.path(),
        "config.json",
        r#"{
            "dims": [2],
            "trialsPerDim": 5,
            "pointBudget": 5,
            "coordBound": 4,
            "seed": 11,
            "checks": ["theorem_1_4", "logbm_conjecture"],
            "mSource": "crossPolytope"
        }"#,
    );
    let out = logbm(&["campaign", &config, "--trials", "3", "--margins"]);
    assert!(out.status.success(), "{out:?}");
    let payload: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(payload["summary"]["perCheck"]["theorem_1_4"]["trials"], 3);
    assert_eq!(payload["summary"]["perCheck"]["theorem_1_4"]["violations"], 0);
    assert!(payload["margins"].is_array());
    // margin rows cover only the probe checks
    for row in payload["margins"].as_array().unwrap() {
        assert_eq!(row["check"], "logbm_conjecture");
    }

    // campaigns replay identically: same config, same summary
    let out2 = logbm(&["campaign", &config, "--trials", "3"]);
    let payload2: serde_json::Value = serde_json::from_slice(&out2.stdout).unwrap();
    assert_eq!(payload["summary"], payload2["summary"]);
}

#[test]
fn demo_cube_remark_reports_the_identity() {
    let out = logbm(&["demo", "cube-remark", "--dim", "2"]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("8 = 8"), "{stdout}");

    let out = logbm(&["demo", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn float_mode_flag_is_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let k = write(dir.path(), "cube2.json", r#"{"kind":"cube","dim":2}"#);
    let out = logbm(&[
        "verify",
        &k,
        "--checks",
        "theorem_1_7",
        "--v",
        "1,0",
        "--mode",
        "float",
        "--tol-inequality",
        "1e-6",
    ]);
    assert!(out.status.success());
    let payload: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(payload["results"][0]["mode"], "float");
    assert_eq!(payload["header"]["tolerances"]["inequality"], 1e-6);
}
