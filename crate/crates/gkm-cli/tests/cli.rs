use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn gkm(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gkm"))
        .args(args)
        .env_remove("GKM_SEARCH_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn klm212() -> String {
    let out = gkm(&["gen", "klm", "--k", "2", "--l", "1", "--m", "2"], None);
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn validate_fixture_passes() {
    let out = gkm(&["validate", "--fixture", "fig7_pentagon"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["vertices"], 5);
    assert_eq!(v["edges"], 5);
    assert_eq!(v["legs"], 10);
}

#[test]
fn validate_reports_broken_graph() {
    let text = klm212().replacen("\"axial\": [\n        0,\n        1,", "\"axial\": [\n        0,\n        2,", 1);
    let out = gkm(&["validate"], Some(&text));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["valid"], false);
}

#[test]
fn unknown_fixture_is_usage_error() {
    let out = gkm(&["validate", "--fixture", "fig99"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_required_flag_is_usage_error() {
    let out = gkm(&["cohomology", "--fixture", "fig8_line5"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn assumptions_name_the_failing_assumption() {
    let out = gkm(&["assumptions", "--fixture", "fig2_right"], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["failed"], serde_json::json!(["assumption (1)"]));

    let out = gkm(&["assumptions", "--fixture", "fig11_sphere"], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["failed"], serde_json::json!(["assumption (2)"]));

    let out = gkm(&["assumptions", "--fixture", "fig7_pentagon"], None);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn local_model_degree_zero_has_rank_one() {
    let out = gkm(&["cohomology", "--fixture", "local_model(2)", "--max-degree", "0"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["degrees"]["0"]["rank"], 1);
}

#[test]
fn structure_constants_from_piped_generator() {
    let out = gkm(&["structure-constants"], Some(&klm212()));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let p = &v["products"];
    assert_eq!(p["(X2)*(X2)"], serde_json::json!({ "X2": "t1", "X2*Z1": "1", "X2*Z2": "1" }));
    assert_eq!(p["(Z1)*(Z1)"], serde_json::json!({ "Z1": "-t2", "Y1*Z1": "1" }));
    assert_eq!(p["(Z1)*(Z2)"], serde_json::json!({}));
    assert_eq!(p["(Z2)*(Z2)"], serde_json::json!({ "Z2": "-t2", "Y1*Z2": "1" }));
}

#[test]
fn express_expands_square() {
    let out = gkm(&["express", "-", "--poly", "Z1^2"], Some(&klm212()));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["expansion"], serde_json::json!({ "Z1": "-t2", "Y1*Z1": "1" }));
}

#[test]
fn express_rejects_bad_polynomial() {
    let out = gkm(&["express", "--fixture", "fig8_line5", "--poly", "Q7^2"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klm.json");
    let out = gkm(&["gen", "klm", "--k", "1", "--l", "1", "--m", "1", "-o", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    let out = gkm(&["basis", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["basis"].as_array().unwrap().len(), 3);
}

#[test]
fn gen_rejects_zero_counts() {
    let out = gkm(&["gen", "klm", "--k", "0", "--l", "1", "--m", "1"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_iso_refuses_then_exhibits_deficit() {
    let out = gkm(&["verify-iso", "--fixture", "fig11_sphere", "--max-degree", "2", "--forgetful"], None);
    assert_eq!(out.status.code(), Some(1));
    let out = gkm(&["verify-iso", "--fixture", "fig11_sphere", "--max-degree", "2", "--forgetful", "--ignore-assumptions"], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["deficit_degrees"], serde_json::json!([2]));
}

#[test]
fn verify_iso_passes_on_pentagon() {
    let out = gkm(&["verify-iso", "--fixture", "fig7_pentagon", "--max-degree", "3"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn output_is_byte_stable() {
    for args in [&["hyperplanes", "--fixture", "fig7_pentagon"][..], &["structure-constants", "--fixture", "fig7_pentagon"][..]] {
        let a = gkm(args, None);
        let b = gkm(args, None);
        let c = gkm(&[&["--sequential"][..], args].concat(), None);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stdout, c.stdout);
    }
}

#[test]
fn search_budget_is_read_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_gkm"))
        .args(["basis", "--fixture", "fig7_pentagon"])
        .env("GKM_SEARCH_BUDGET", "0")
        .output()
        .unwrap();
    // The pentagon ships with a shelling hint, which is verified without searching.
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_gkm")).args(["basis", "--fixture", "fig2_left"]).env("GKM_SEARCH_BUDGET", "0").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
