use std::process::{Command, Output};

use serde_json::Value;

fn alcove(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alcove"))
        .args(args)
        .env_remove("WEYL_ALCOVE_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = alcove(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn fuse_text_output() {
    let e8 = "1,0,0,0,0,0,0,0";
    let o = alcove(&["fuse", "--algebra", "E8", "--level", "2", e8, e8]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0,0,0,0,0,0,0,0 ×1\n");

    let o = alcove(&["fuse", "--algebra", "A1", "--level", "1", "0", "0"]);
    assert_eq!(stdout(&o), "0 ×1\n");
}

#[test]
fn json_envelope_and_payloads() {
    let doc = json(&["alcove", "--algebra", "E7", "--level", "2"]);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["algebra"], "E7");
    assert_eq!(doc["level"], 2);
    assert_eq!(doc["command"], "alcove");
    assert_eq!(doc["payload"].as_array().unwrap().len(), 6);

    let doc = json(&["fuse", "--algebra", "A2", "--level", "3", "0,0", "1,1"]);
    assert_eq!(doc["payload"], serde_json::json!([[[1, 1], 1]]));

    let doc = json(&["modular", "--algebra", "E7", "--level", "2", "0,0,0,0,0,0,0", "0,0,0,0,0,1,0"]);
    assert_eq!(doc["payload"]["twists"][1], serde_json::json!({"num": 4, "den": 5}));
    assert_eq!(doc["payload"]["verdict"], "ModularAsIs");

    let doc = json(&["enumerate-closed", "--algebra", "E8", "--level", "2"]);
    let kinds: Vec<&str> = doc["payload"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["classification"]["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["DeltaZ", "ExcE8", "GammaZ"]);
}

#[test]
fn identical_runs_give_identical_json() {
    let args = ["--json", "modular", "--exact-s", "--algebra", "B3", "--level", "2", "0,0,0", "2,0,0"];
    assert_eq!(alcove(&args).stdout, alcove(&args).stdout);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| alcove(args).status.code();
    assert_eq!(code(&["fuse", "--algebra", "E7", "--level", "2", "1,0", "0"]), Some(2));
    assert_eq!(code(&["alcove"]), Some(2));
    assert_eq!(code(&["alcove", "--algebra", "X9", "--level", "2"]), Some(2));
    assert_eq!(code(&["classify", "--algebra", "E7", "--level", "2", "0,0,0,0,0,1,0"]), Some(2));
    assert_eq!(code(&["alcove", "--algebra", "A1", "--level", "9", "--max-alcove", "4"]), Some(2));
    assert_eq!(code(&["verify", "--criterion", "9"]), Some(2));
    assert_eq!(code(&["verify", "--criterion", "3"]), Some(0));
    assert_eq!(code(&["verify-paper", "--criterion", "2"]), Some(0));
}

#[test]
fn cache_dir_flag_populates_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let o = alcove(&["enumerate-closed", "--algebra", "D4", "--level", "2", "--cache-dir", path]);
    assert!(o.status.success());
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let again = alcove(&["enumerate-closed", "--algebra", "D4", "--level", "2", "--cache-dir", path]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn chart_reports_each_dull_weight() {
    let doc = json(&["chart", "--algebra", "G2"]);
    let rows = doc["payload"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["matches"], true);
    let doc = json(&["chart", "--algebra", "C3"]);
    assert!(doc["payload"]["rows"].as_array().unwrap().is_empty());
    assert_eq!(doc["payload"]["excluded"].as_array().unwrap().len(), 1);
}
