use std::process::{Command, Output};

use serde_json::Value;

fn bethe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bethe"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_report(args: &[&str]) -> (i32, Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let mut full: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap();
    full.extend(["--json", p]);
    let out = bethe(&full);
    let text = std::fs::read_to_string(&path).expect("report written");
    (
        out.status.code().unwrap(),
        serde_json::from_str(&text).unwrap(),
    )
}

fn real_matrix(v: &Value) -> Vec<Vec<f64>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|z| z[0].as_f64().unwrap())
                .collect()
        })
        .collect()
}

#[test]
fn spectrum_of_the_qubit_sector() {
    let (code, r) = json_report(&["spectrum", "--n", "7", "--r", "3", "--k", "0"]);
    assert_eq!(code, 0);
    let h = real_matrix(&r["results"]["hamiltonian"]);
    for (x, y) in h[1].iter().zip([0.0, -4.0, 2.0, 1.0, 1.0]) {
        assert!((x - y).abs() < 1e-12);
    }
    assert_eq!(
        r["results"]["hamiltonian_integer"][3],
        serde_json::json!([1, 1, 1, -4, 1])
    );
    assert_eq!(
        r["results"]["characteristic_polynomial"],
        serde_json::json!([0, 300, 320, 117, 18, 1])
    );
    let levels = r["results"]["levels"].as_array().unwrap();
    let five = levels
        .iter()
        .find(|l| (l["energy"].as_f64().unwrap() + 5.0).abs() < 1e-9)
        .unwrap();
    assert_eq!(five["multiplicity"], 2);
}

#[test]
fn vacuum_and_small_sectors() {
    let (code, r) = json_report(&["spectrum", "--n", "7", "--r", "0", "--k", "0"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["eigenvalues"], serde_json::json!([0.0]));
    let (code, r) = json_report(&["spectrum", "--n", "5", "--r", "2", "--k", "0"]);
    assert_eq!(code, 0);
    let ev: Vec<f64> = serde_json::from_value(r["results"]["eigenvalues"].clone()).unwrap();
    assert_eq!(ev.len(), 2);
    assert!((ev[0] + 4.0).abs() < 1e-12 && ev[1].abs() < 1e-12);
}

#[test]
fn invalid_sector_is_a_usage_error() {
    assert_eq!(
        bethe(&["spectrum", "--n", "7", "--r", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        bethe(&["spectrum", "--n", "40", "--r", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(bethe(&["spectrum", "--tol", "-1"]).status.code(), Some(2));
}

#[test]
fn qubit_report_fields() {
    let (code, r) = json_report(&["qubit-report"]);
    assert_eq!(code, 0);
    let rig: Vec<Vec<i64>> = serde_json::from_value(r["results"]["riggings"].clone()).unwrap();
    let mut rig_sorted = rig.clone();
    rig_sorted.sort();
    assert_eq!(rig_sorted, vec![vec![-3, 3], vec![3, -3]]);
    let m = r["results"]["string_parameters"]["m"].as_f64().unwrap();
    assert!((m - 0.5031).abs() < 1e-3);
    assert_eq!(r["results"]["roots"].as_array().unwrap().len(), 6);
    let sum_rule = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "rho_1 + rho_2 - P")
        .unwrap();
    assert_eq!(sum_rule["passed"], true);
}

#[test]
fn state_from_the_qubit_triple() {
    let (code, r) = json_report(&[
        "state",
        "--param",
        "-0.21990357430657",
        "--param",
        "0.4327003993372,0.5030656947652",
        "--param",
        "0.4327003993372,-0.5030656947652",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        r["results"]["sector"],
        serde_json::json!({"n": 7, "r": 3, "k": 0})
    );
    let h = r["checks"][0]["value"].as_f64().unwrap();
    assert!(h < 1e-8);
}

#[test]
fn state_from_one_magnon_plane_wave() {
    let lambda = 0.5 / (std::f64::consts::PI / 7.0).tan();
    let arg = lambda.to_string();
    let (code, r) = json_report(&["state", "--param", &arg]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["sector"]["k"], 1);
    let v: Vec<[f64; 2]> = serde_json::from_value(r["results"]["state"].clone()).unwrap();
    let norms: Vec<f64> = v.iter().map(|z| z[0].hypot(z[1])).collect();
    assert!(norms.iter().all(|x| (x - norms[0]).abs() < 1e-12));
}

#[test]
fn repeated_parameters_are_rejected() {
    let out = bethe(&["state", "--param", "0.3", "--param", "0.3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("repeated"));
}

#[test]
fn verify_paper_writes_every_criterion() {
    let (code, r) = json_report(&["verify-paper", "--format", "json"]);
    let checks = r["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 14);
    let passed = r["passed"].as_bool().unwrap();
    assert_eq!(code, if passed { 0 } else { 1 });
    for c in &checks[..5] {
        assert_eq!(c["passed"], true, "{}", c["name"]);
    }
}

#[test]
fn unattainable_tolerance_fails() {
    let out = bethe(&["verify-paper", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("FAIL"));
}

#[test]
fn reports_are_reproducible() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timestamp");
        v
    };
    let (_, a) = json_report(&["qubit-report"]);
    let (_, b) = json_report(&["qubit-report"]);
    assert_eq!(strip(a), strip(b));
}

#[test]
fn csv_output() {
    let out = bethe(&["spectrum", "--n", "5", "--r", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("path,value\n"));
    assert!(text.contains("results.eigenvalues.0,"));
}
