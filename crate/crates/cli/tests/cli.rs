//! End-to-end tests of the `spinsurf` binary: exit codes, report shapes,
//! and byte-level determinism of repeated runs.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spinsurf"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn tmp_dir(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::create_dir_all(&dir).expect("tmp dir");
    dir
}

fn repo_config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../configs")
        .join(name)
}

// ---------------------------------------------------------------------------
// algebra / ideal / rep
// ---------------------------------------------------------------------------

#[test]
fn lorentz_algebra_classifies_correctly() {
    let out = run(&["algebra", "--sig", "1,3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["volume_square"], -1);
    assert_eq!(v["commuting_factors"], 1);
    assert_eq!(v["matrix_class"]["label"], "M2(H)");
    assert_eq!(v["wirtinger"], "standard");
    assert_eq!(v["seed"], 0);
}

#[test]
fn odd_euclidean_algebra_splits() {
    let out = run(&["algebra", "--sig", "0,3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["odd_structure"], "splits");
    assert_eq!(v["matrix_class"]["label"], "M1(H) + M1(H)");
}

#[test]
fn out_of_range_signatures_exit_with_usage_errors() {
    for sig in ["9,0", "0,0", "4,5", "banana"] {
        let out = run(&["algebra", "--sig", sig]);
        assert_eq!(out.status.code(), Some(2), "sig {}", sig);
    }
}

#[test]
fn rep_prints_the_expected_matrices_for_the_lorentz_ideal() {
    let out = run(&["rep", "--sig", "3,1", "--idem", "e1,e24"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["divring"], "R");
    let e1: Vec<Vec<&str>> = vec![
        vec!["1", "0", "0", "0"],
        vec!["0", "-1", "0", "0"],
        vec!["0", "0", "-1", "0"],
        vec!["0", "0", "0", "1"],
    ];
    assert_eq!(v["gammas"][0]["generator"], "e1");
    assert_eq!(v["gammas"][0]["matrix"], serde_json::json!(e1));
}

#[test]
fn default_ideal_for_the_neutral_signature_has_a_real_commutant() {
    let out = run(&["ideal", "--sig", "2,2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["divring"]["class"], "R");
    assert_eq!(v["divring"]["dim"], 1);
    assert_eq!(v["ideal"]["dim"], 4);
}

#[test]
fn bad_idempotent_factor_lists_are_usage_errors() {
    let out = run(&["ideal", "--sig", "2,2", "--idem", "e1,e1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["ideal", "--sig", "2,2", "--idem", "e9"]);
    assert_eq!(out.status.code(), Some(2));
}

// ---------------------------------------------------------------------------
// project
// ---------------------------------------------------------------------------

#[test]
fn project_splits_every_immersion_case() {
    for tag in [
        "s11-in-m13",
        "s02-in-m13",
        "s11-in-m31",
        "s20-in-m31",
        "s20-in-m22",
        "s02-in-m22",
        "s11-in-m22",
        "s20-in-m40",
        "s02-in-m04",
    ] {
        let out = run(&["project", "--case", tag, "--seed", "9"]);
        assert!(out.status.success(), "case {}", tag);
        let v = stdout_json(&out);
        assert_eq!(v["passed"], true, "case {}", tag);
    }
    let out = run(&["project", "--case", "s99-in-m00"]);
    assert_eq!(out.status.code(), Some(2));
}

// ---------------------------------------------------------------------------
// surface
// ---------------------------------------------------------------------------

#[test]
fn malformed_configs_are_usage_errors() {
    let dir = tmp_dir("malformed");
    let path = dir.join("broken.json");
    std::fs::write(&path, "{this is not json").unwrap();
    let out = run(&["surface", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mismatched_case_tags_are_usage_errors() {
    let dir = tmp_dir("mismatch");
    let base: Value =
        serde_json::from_str(&std::fs::read_to_string(repo_config("plane.json")).unwrap())
            .unwrap();
    let mut cfg = base;
    cfg["case"] = Value::String("r22".to_string());
    let path = dir.join("mismatch.json");
    std::fs::write(&path, serde_json::to_string(&cfg).unwrap()).unwrap();
    let out = run(&["surface", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn surface_runs_write_deterministic_artifacts() {
    let cfg = repo_config("plane.json");
    let d1 = tmp_dir("plane-a");
    let d2 = tmp_dir("plane-b");
    for d in [&d1, &d2] {
        let out = run(&[
            "surface",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            d.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    for name in ["report.json", "surface.obj", "surface.csv"] {
        let a = std::fs::read(d1.join(name)).unwrap();
        let b = std::fs::read(d2.join(name)).unwrap();
        assert!(!a.is_empty());
        assert_eq!(a, b, "{} differs between identical runs", name);
    }
    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(d1.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["case"], "r40");
}

#[test]
fn data_that_break_their_governing_system_exit_one() {
    let dir = tmp_dir("dispersion");
    let cfg = serde_json::json!({
        "case": "r40",
        "grid": {"nx": 21, "ny": 21, "x0": -0.5, "y0": -0.5, "hx": 0.05, "hy": 0.05},
        "potential": {"kind": "closed-form", "family": "plane-wave", "p": 0.5, "k": 0.6, "l": 0.9},
        "tol": {"residual": 1e-3}
    });
    let path = dir.join("broken-dispersion.json");
    std::fs::write(&path, serde_json::to_string(&cfg).unwrap()).unwrap();
    let out = run(&[
        "surface",
        "--config",
        path.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["passed"], false);
    assert_eq!(report["checks"][0]["passed"], false);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[test]
fn verify_runs_are_reproducible_and_cover_all_suites() {
    let a = run(&["verify", "all", "--seed", "123"]);
    let b = run(&["verify", "all", "--seed", "123"]);
    assert!(a.status.success());
    assert!(b.status.success());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout, "verify output must be byte-identical");
    let v = stdout_json(&a);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suite"], "all");
    for suite in ["algebra", "ideals", "reps", "fierz", "dirac", "weierstrass"] {
        let found = v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .any(|c| c["name"].as_str().unwrap().starts_with(&format!("{}/", suite)));
        assert!(found, "suite {} missing from the aggregate", suite);
    }
}

#[test]
fn unknown_suites_are_usage_errors() {
    let out = run(&["verify", "spectra"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn the_convention_flag_is_echoed_in_reports() {
    let out = run(&["verify", "fierz", "--wirtinger", "paper", "--seed", "4"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["wirtinger"], "paper");
    assert_eq!(v["seed"], 4);
}
