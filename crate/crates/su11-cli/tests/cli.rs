//! Exit-code and output-shape contracts of the binary.

use std::process::Command;

fn su11(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_su11"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn decompose_identity_emits_zero_coordinates() {
    let out = su11(&["decompose", "1,0,0,1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["form"], "iwasawa");
    assert_eq!(v["theta"], 0.0);
    assert_eq!(v["t"], 0.0);
    assert_eq!(v["xi"], 0.0);
    assert_eq!(v["residual"], 0.0);
}

#[test]
fn decompose_accepts_rounded_input_within_tolerance() {
    // (cosh 1, sinh 1) rounded to 5 significant digits: t recovered to 1e-4.
    let out = su11(&["decompose", "1.5431,1.1752"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["t"].as_f64().unwrap() - 2.0).abs() < 1e-4);
}

#[test]
fn decompose_rejects_non_unimodular_with_exit_2() {
    let out = su11(&["decompose", "2,0,0,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not unimodular"));
}

#[test]
fn decompose_cartan_form() {
    let out = su11(&["decompose", "--form", "cartan", "1,0,0,1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["form"], "cartan");
    assert_eq!(v["t"], 0.0);
}

#[test]
fn hopf_suite_exits_zero_on_pristine_build() {
    let out = su11(&["suite", "hopf", "--seed", "7", "--no-timestamp"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn haar_check_misconfiguration_surfaces_truncation_warning() {
    // t_max = 1 cannot hold the test function: the report must carry the
    // warning and the exit code must signal a failed check.
    let dir = std::env::temp_dir().join("su11-cli-test-haar");
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("config.json");
    std::fs::write(
        &config,
        r#"{"t_max": 1.0, "order_theta": 16, "order_t": 16, "order_xi": 16}"#,
    )
    .unwrap();
    let out = su11(&[
        "haar-check",
        "--config",
        config.to_str().unwrap(),
        "--g0",
        "0.0,0.2,0.0",
        "--no-timestamp",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["audits"][0]["warning"].is_string());
}

#[test]
fn ladder_table_csv_matches_closed_form() {
    let out = su11(&[
        "rep",
        "ladder-table",
        "--j",
        "half",
        "--s",
        "0.5",
        "--p-min",
        "0",
        "--p-max",
        "1",
        "--csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,raise_re,raise_im,lower_re,lower_im"));
    // p = 0, j = 1/2, s = 1/2: raise 1, lower 0.
    assert_eq!(lines.next(), Some("0,1,0,0,0"));
}

#[test]
fn transform_round_trip_through_profile_file() {
    let dir = std::env::temp_dir().join("su11-cli-test-profile");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("profile.json");
    let make = su11(&[
        "transform",
        "make-profile",
        "--t-support",
        "2.0",
        "--samples",
        "65",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(make.status.success());

    let abel = su11(&[
        "transform",
        "abel",
        "--n",
        "1",
        "--profile",
        path.to_str().unwrap(),
        "--t",
        "0.5",
    ]);
    assert!(abel.status.success());
    let v: serde_json::Value = serde_json::from_slice(&abel.stdout).unwrap();
    assert!(v["value"][0].as_f64().unwrap().is_finite());
    assert!(v["warning"].is_null());

    // hbar scales the kangni value linearly.
    let kangni = |hbar: &str| -> serde_json::Value {
        let out = su11(&[
            "transform",
            "kangni",
            "--n",
            "1",
            "--mu",
            "0.2,0.1",
            "--hbar",
            hbar,
            "--profile",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        serde_json::from_slice(&out.stdout).unwrap()
    };
    let one = kangni("1.0");
    let two = kangni("2.0");
    let (a, b) = (
        one["value"][0].as_f64().unwrap(),
        two["value"][0].as_f64().unwrap(),
    );
    assert!((b - 2.0 * a).abs() < 1e-12 * a.abs().max(1.0));
}

#[test]
fn translate_check_reports_rotation_exactly() {
    let dir = std::env::temp_dir().join("su11-cli-test-translate");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("profile.json");
    assert!(
        su11(&["transform", "make-profile", "--out", path.to_str().unwrap(),])
            .status
            .success()
    );
    let out = su11(&[
        "transform",
        "translate-check",
        "--n",
        "1",
        "--mu",
        "0.2",
        "--alpha",
        "1.0471975511965976",
        "--profile",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["relative_discrepancy"].as_f64().unwrap() < 1e-5);
}

#[test]
fn config_with_unknown_field_is_rejected() {
    let dir = std::env::temp_dir().join("su11-cli-test-config");
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("bad.json");
    std::fs::write(&config, r#"{"not_a_field": 1}"#).unwrap();
    let out = su11(&["suite", "haar", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn configured_scale_rides_along_as_metadata() {
    let dir = std::env::temp_dir().join("su11-cli-test-scale");
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("config.json");
    std::fs::write(&config, r#"{"zh": 2.5}"#).unwrap();
    let out = su11(&["decompose", "1,0,0,1", "--config", config.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // The scale is metadata only: coordinates and residual are unaffected.
    assert_eq!(v["scale"], 2.5);
    assert_eq!(v["t"], 0.0);
    assert_eq!(v["residual"], 0.0);
}
