use std::process::{Command, Output};

use serde_json::Value;

fn swcohom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swcohom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = swcohom(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn dims(v: &Value) -> Vec<u64> {
    let m = v.as_object().expect("dims map");
    m.values().map(|x| x.as_u64().unwrap()).collect()
}

#[test]
fn series_rows() {
    let r = json(&["series", "--degree-max", "12"]);
    assert_eq!(r["row"], "1,1,0,1,1,1,1,1,2,2,2,2,3");
    let r = json(&["series", "--degree-max", "0"]);
    assert_eq!(r["row"], "1");
}

#[test]
fn series_agrees_with_reduced_complex() {
    let r = json(&["series", "--degree-max", "8", "--weight-max", "6"]);
    assert_eq!(r["agreement"], true);
    assert_eq!(dims(&r["reduced"]["H"]), vec![1, 0, 1, 1, 1, 1]);
}

#[test]
fn symmetric_cohomology() {
    let r = json(&["cohomology", "--sequence", "symmetric", "--weight-max", "6"]);
    assert_eq!(r["schema"], "swcohom/1");
    assert_eq!(dims(&r["H"]), vec![1, 0, 1, 1, 1, 1]);
    assert_eq!(r["final_through"], 6);
}

#[test]
fn symmetric_both_routes_agree() {
    let r = json(&[
        "cohomology",
        "--weight-max",
        "4",
        "--mode",
        "both",
        "--representatives",
    ]);
    assert_eq!(r["agreement"], true);
    assert_eq!(dims(&r["full"]["H"]), vec![1, 1, 0, 1, 1]);
    assert_eq!(r["representatives"]["2"].as_array().unwrap().len(), 0);
    assert_eq!(r["representatives"]["3"].as_array().unwrap().len(), 1);
}

#[test]
fn hecke_cohomology() {
    let r = json(&[
        "cohomology",
        "--sequence",
        "hecke",
        "--trunc-degree",
        "2",
        "--weight-max",
        "2",
    ]);
    assert_eq!(dims(&r["H"]), vec![3, 3]);
}

#[test]
fn skew_polynomial_slice_is_exterior() {
    let r = json(&[
        "cohomology",
        "--sequence",
        "skew",
        "--algebra",
        "poly:1",
        "--weight-max",
        "3",
        "--mode",
        "both",
    ]);
    assert_eq!(dims(&r["H"]), vec![2, 1, 0]);
    assert_eq!(r["agreement"], true);
}

#[test]
fn skew_over_quadratic_field_reports_measured_dims() {
    // Q[x]/(x^2-2): A⊗A has zero divisors, and weight 3 picks up two extra classes.
    let r = json(&[
        "cohomology",
        "--sequence",
        "skew",
        "--weight-max",
        "3",
        "--mode",
        "both",
    ]);
    assert_eq!(dims(&r["H"]), vec![2, 1, 2]);
    assert_eq!(r["agreement"], true);
}

#[test]
fn gl_two_verdicts() {
    let r = json(&["gl", "--dim", "2"]);
    let ext: Vec<u64> = r["exterior_invariants"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(ext, vec![1, 1, 0, 1, 1]);
    let verdicts: Vec<&str> = r["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert!(
        verdicts.iter().any(|v| v.contains("kox: pass (ratio 1/2)")),
        "{verdicts:?}"
    );
    assert!(verdicts.contains(&"e_5 acts as zero: true"), "{verdicts:?}");
}

#[test]
fn gl_from_structure_constants() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sl2.json");
    std::fs::write(
        &path,
        r#"{"dim": 3, "names": ["e", "h", "f"], "brackets": [[0, 1, 0, -2], [0, 2, 1, 1], [1, 2, 2, -2]]}"#,
    )
    .unwrap();
    let r = json(&["gl", "--lie", path.to_str().unwrap()]);
    let ext: Vec<u64> = r["exterior_invariants"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(ext, vec![1, 0, 0, 1]);
}

#[test]
fn other_subcommands_pass() {
    for args in [
        &["horizontal", "--weight-max", "4"][..],
        &["cubic", "--weight-max", "4", "--random", "6"],
        &["hecke-check", "--trunc-degree", "2", "--weight-max", "3"],
        &["selftest"],
    ] {
        let out = swcohom(args);
        assert!(
            out.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "cubic",
        "--weight-max",
        "3",
        "--random",
        "8",
        "--seed",
        "77",
    ];
    let a = swcohom(&args);
    let b = swcohom(&args);
    assert_eq!(a.stdout, b.stdout);
    let r: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(r["seed"], 77);
    assert_eq!(r["backend"], "modular");
    assert!(r["version"].is_string());
}

#[test]
fn views_render_the_same_report() {
    let csv =
        String::from_utf8(swcohom(&["cohomology", "--weight-max", "3", "--format", "csv"]).stdout)
            .unwrap();
    assert!(csv.starts_with("path,value\n"));
    assert!(csv.contains("\nH.1,1\n") && csv.contains("\nH.3,1\n"));
    let pretty = String::from_utf8(
        swcohom(&["cohomology", "--weight-max", "3", "--format", "pretty"]).stdout,
    )
    .unwrap();
    assert!(pretty.contains("H: {1: 1, 2: 0, 3: 1}"), "{pretty}");
}

#[test]
fn exit_codes() {
    let out = swcohom(&["cohomology", "--weight-max", "30"]);
    assert_eq!(out.status.code(), Some(3));
    let out = swcohom(&[
        "cohomology",
        "--sequence",
        "skew",
        "--algebra",
        "/nonexistent/a.json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = swcohom(&["gl", "--dim", "0"]);
    assert_eq!(out.status.code(), Some(1));
}
