use std::process::{Command, Output};

use serde_json::Value;

fn famspring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_famspring")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    famspring(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let out = famspring(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn statuses(v: &Value) -> Vec<String> {
    v["verifications"].as_array().unwrap().iter().map(|v| v["status"].as_str().unwrap().to_string()).collect()
}

#[test]
fn worked_class_passes() {
    let v = json(&["class", "--group", "sp", "--partition", "2,2"]);
    assert_eq!(v["schema_version"], "1.0");
    assert_eq!(v["results"]["family"]["xf_size"], 4);
    assert_eq!(v["results"]["component_group"]["abar"], "Z/2");
    assert!(statuses(&v).iter().all(|s| s == "pass"));
}

#[test]
fn non_special_class_is_a_verdict() {
    let v = json(&["class", "--group", "sp", "--partition", "2,1,1"]);
    assert_eq!(v["results"]["class"]["outcome"], "not-special");
}

#[test]
fn raw_sequence_runs_the_same_pipeline() {
    let v = json(&["class", "--sequence", "0,1,2", "--flavor", "C"]);
    let w = json(&["class", "--group", "sp", "--partition", "2,2"]);
    assert_eq!(v["results"]["identification"], w["results"]["identification"]);
}

#[test]
fn regular_class_reports_unassigned_interval() {
    let v = json(&["class", "--group", "sp", "--partition", "6"]);
    assert!(statuses(&v).contains(&"reported".to_string()));
}

#[test]
fn type_a_is_trivial() {
    let v = json(&["class", "--group", "gl", "--partition", "3,1"]);
    assert_eq!(v["results"]["class"]["outcome"], "type-a");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "all", "--max-rank", "3", "--samples", "50", "--seed", "7"];
    assert_eq!(famspring(&args).stdout, famspring(&args).stdout);
}

#[test]
fn verify_all_passes() {
    let v = json(&["verify", "all", "--max-rank", "4"]);
    assert!(statuses(&v).iter().all(|s| s != "fail"));
}

#[test]
fn fourier_reports() {
    let v = json(&["fourier", "--group", "S3"]);
    assert_eq!(v["results"]["matrix"].as_array().unwrap().len(), 8);
    let t = json(&["fourier", "--group", "trivial"]);
    assert_eq!(t["results"]["m_size"], 1);
}

#[test]
fn exceptional_reports() {
    let v = json(&["exceptional", "--type", "E8", "--class", "2A_4"]);
    assert_eq!(v["results"]["records"][0]["abar"], "S5");
    let f = json(&["exceptional", "--type", "F4"]);
    assert_eq!(f["results"]["records_scanned"], 11);
    let g = json(&["exceptional", "--type", "G2", "--class", "G_2(a_1)"]);
    assert_eq!(g["results"]["records"][0]["a"], "S3");
}

#[test]
fn text_format() {
    let out = famspring(&["--format", "text", "class", "--group", "sp", "--partition", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("[PASS] pairing-coincidence"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "lemma13", "--max-rank", "2"][..],
        &["fourier", "--group", "S7"],
        &["exceptional", "--type", "E8", "--class", "nope"],
        &["exceptional", "--type", "E9"],
        &["class", "--group", "sp", "--partition", "3"],
        &["class", "--group", "sp", "--partition", "x"],
        &["class", "--sequence", "2,1,0", "--flavor", "C"],
        &["class", "--sequence", "0,1,2", "--flavor", "A"],
        &["class"],
        &["nonsense"],
    ] {
        assert_eq!(code(args), 2, "{args:?}");
    }
}
