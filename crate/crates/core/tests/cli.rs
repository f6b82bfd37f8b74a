use serde_json::Value;
use std::process::{Command, Output};

fn bianchi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bianchi"))
        .args(args)
        .env("BIANCHI_WORKERS", "1")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_error_kind(out: &Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    v["error"]["kind"].as_str().expect("error kind").to_string()
}

#[test]
fn cf_of_half_plus_half_w() {
    let out = bianchi(&["cf", "--d", "1", "--kappa", "1/2+1/2*w"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["betas"], serde_json::json!(["0", "1-1*w"]));
    let last = v["convergents"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["mu"], "1");
    assert_eq!(last["nu"], "1-1*w");
    assert_eq!(v["matrices"].as_array().unwrap().len(), 2);
}

#[test]
fn cf_accepts_quotients_and_negative_input() {
    let out = bianchi(&["cf", "--d", "7", "--kappa", "(-3+2*w)/(5)"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["kappa"], "-3/5+2/5*w");
}

#[test]
fn hecke_at_unit_is_identity() {
    let out = bianchi(&["hecke", "--d", "2", "--k", "0", "--n", "1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["matrix"]["entries"], serde_json::json!([["1"]]));
}

#[test]
fn wkk_reports_the_coboundary() {
    let out = bianchi(&["wkk", "--d", "2", "--k", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["dim_w"], 1);
    assert_eq!(v["coboundary_in_w"], true);
    assert_eq!(v["basis"], serde_json::json!([["1", "0", "0", "-1"]]));
}

#[test]
fn eigen_with_trivial_pair_is_all_of_w() {
    let w = stdout_json(&bianchi(&["wkk", "--d", "11", "--k", "2"]));
    let e = stdout_json(&bianchi(&["eigen", "--d", "11", "--k", "2", "--pairs", "1:1"]));
    assert_eq!(e["dim"], w["dim_w"]);
    let zero = stdout_json(&bianchi(&["eigen", "--d", "11", "--k", "2", "--pairs", "1:0"]));
    assert_eq!(zero["dim"], 0);
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = bianchi(&["verify", "--d", "3", "--k", "2", "--norm-bound", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    for check in v["checks"].as_array().unwrap() {
        assert_eq!(check["cases_run"], check["cases_passed"], "{check}");
    }
}

#[test]
fn unsupported_field_is_a_json_error() {
    let out = bianchi(&["cf", "--d", "5", "--kappa", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert_eq!(stderr_error_kind(&out), "unsupported_field");
}

#[test]
fn malformed_element_is_a_parse_error() {
    let out = bianchi(&["cf", "--d", "1", "--kappa", "3+2w"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_error_kind(&out), "parse_error");
}

#[test]
fn missing_argument_is_a_usage_error() {
    let out = bianchi(&["hecke", "--d", "1", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_error_kind(&out), "usage");
}

#[test]
fn output_flag_writes_the_file() {
    let dir = std::env::temp_dir().join(format!("bianchi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    let out = bianchi(&["--output", path.to_str().unwrap(), "transport", "--d", "1", "--k", "1", "--kappa", "0"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["matrix"]["rows"], 4);
    std::fs::remove_dir_all(&dir).unwrap();
}
