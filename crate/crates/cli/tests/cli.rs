//! End-to-end CLI tests: exit codes, report files, CSV output.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_drinfeld"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("drinfeld-cli-tests");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn catalog_list_mentions_builtins() {
    let out = bin().args(["catalog", "list"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for name in ["sl2", "m2", "witt", "sl2r"] {
        assert!(text.contains(name), "missing {name} in catalog list");
    }
}

#[test]
fn verify_manin_on_catalog_passes() {
    let report_path = tmp("manin.json");
    let out = bin()
        .args([
            "verify",
            "manin",
            "--catalog",
            "m2",
            "--weights",
            "1,0",
            "--out",
            report_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["suite"], "verify-manin");
    assert_eq!(report["pass"], true);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks[0]["check"], "manin");
    assert!(checks[0]["residuals"]["closure"].as_f64().unwrap() < 1e-12);
}

#[test]
fn verify_jacobi_detects_corruption() {
    // sl2 plus one spurious structure entry breaking the Jacobi identity.
    let fixture = tmp("corrupt.json");
    fs::write(
        &fixture,
        r#"{"dim":3,"field":"real",
            "structure":[[0,1,1,2.0,0.0],[0,2,2,-2.0,0.0],[1,2,0,1.0,0.0],[0,1,0,0.3,0.0]]}"#,
    )
    .unwrap();
    let out = bin()
        .args(["verify", "jacobi", "--input", fixture.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "{out:?}");

    // The intact catalog algebra passes.
    let out = bin()
        .args(["verify", "jacobi", "--catalog", "sl2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = bin()
        .args(["verify", "manin", "--input", "/nonexistent/algebra.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = bin().args(["verify", "manin", "--bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_bialgebra_catalog_passes() {
    let out = bin()
        .args(["verify", "bialgebra", "--catalog", "sl2-bialgebra"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn fourier_analytic_fit_and_csv() {
    let csv_path = tmp("decay.csv");
    let out = bin()
        .args([
            "fourier",
            "--catalog",
            "analytic05",
            "--modes",
            "20",
            "--csv",
            csv_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let csv = fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("m,norm,fitted_model_value"));
    assert!(!csv.contains('\r'), "CSV must use LF endings");
    assert_eq!(csv.lines().count(), 41); // header + modes -20..=20 without 0
}

#[test]
fn fourier_constant_sample_has_silent_modes() {
    let out = bin()
        .args(["fourier", "--catalog", "constant"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = String::from_utf8_lossy(&out.stdout);
    let report: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    let norm = report["checks"][0]["residuals"]["max_nonzero_norm"]
        .as_f64()
        .unwrap();
    assert!(norm < 1e-14);
}

#[test]
fn fourier_nyquist_violation_is_usage_error() {
    let out = bin()
        .args(["fourier", "--catalog", "analytic05", "--modes", "200", "--grid", "64"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn integrate_pathindep_passes_on_catalog() {
    let out = bin()
        .args([
            "integrate",
            "--catalog",
            "sl2",
            "--check",
            "pathindep",
            "--steps",
            "200",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn integrate_detects_path_dependence_of_forced_non_cocycle() {
    // sl2 with an ad-hoc delta that is not a 1-cocycle.
    let fixture = tmp("noncocycle.json");
    fs::write(
        &fixture,
        r#"{"dim":3,"field":"real",
            "structure":[[0,1,1,2.0,0.0],[0,2,2,-2.0,0.0],[1,2,0,1.0,0.0]],
            "delta":[[0,0,1,0.5,0.0]]}"#,
    )
    .unwrap();

    // Without --force the precondition refuses to integrate.
    let out = bin()
        .args([
            "integrate",
            "--bialgebra",
            fixture.to_str().unwrap(),
            "--group",
            "sl2r",
            "--check",
            "pathindep",
            "--steps",
            "100",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("cocycle-precondition"));

    // With --force the path dependence itself is detected.
    let out = bin()
        .args([
            "integrate",
            "--bialgebra",
            fixture.to_str().unwrap(),
            "--group",
            "sl2r",
            "--check",
            "pathindep",
            "--steps",
            "100",
            "--force",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "{out:?}");
}

#[test]
fn cotangent_catalog_reports_zero_bivector() {
    let out = bin()
        .args([
            "integrate",
            "--catalog",
            "sl2-cotangent",
            "--check",
            "cocycle",
            "--steps",
            "100",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = String::from_utf8_lossy(&out.stdout);
    let report: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    let theta = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|ch| ch["check"] == "bivector")
        .unwrap()["residuals"]["theta_norm"]
        .as_f64()
        .unwrap();
    assert_eq!(theta, 0.0);
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let out = bin()
            .args(["verify", "manin", "--catalog", "m3", "--weights", "2,1,0"])
            .output()
            .unwrap();
        let text = String::from_utf8_lossy(&out.stdout).to_string();
        let mut v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        // wall-clock differs run to run; everything else must not
        v.as_object_mut().unwrap().remove("elapsed_s");
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn path_file_drives_integration() {
    let path_file = tmp("path.json");
    fs::write(
        &path_file,
        r#"{"grid":5,"interp":"cubic","samples":[
            [0.0, 0.1, 0.4, -0.2],
            [0.25, 0.2, 0.3, -0.1],
            [0.5, 0.3, 0.2, 0.0],
            [0.75, 0.2, 0.1, 0.1],
            [1.0, 0.1, 0.0, 0.2]]}"#,
    )
    .unwrap();
    let out = bin()
        .args([
            "integrate",
            "--catalog",
            "sl2",
            "--path",
            path_file.to_str().unwrap(),
            "--check",
            "cocycle",
            "--steps",
            "200",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}
