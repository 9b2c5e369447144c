//! End-to-end tests of the `ewl-dilemma` binary: flags, exit codes and
//! output schemas.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ewl-dilemma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    serde_json::from_slice(&output.stdout).expect("valid JSON on stdout")
}

#[test]
fn normalize_matches_the_worked_example() {
    let out = run(&["normalize", "--T", "5", "--R", "3", "--P", "1", "--S", "0"]);
    let value = stdout_json(&out);
    assert_eq!(value, serde_json::json!({"r": "3/5", "p": "1/5"}));
}

#[test]
fn ne_subcommand_emits_equilibria_and_payoffs() {
    let out = run(&["ne", "--class", "D1", "--p", "1/5", "--r", "3/5", "--t", "1/2"]);
    let value = stdout_json(&out);
    assert_eq!(value["equilibria"], serde_json::json!([[2, 2]]));
    assert_eq!(value["payoffs"], serde_json::json!([["1/5", "1/5"]]));
}

#[test]
fn sweep_reports_zero_mismatches() {
    let out = run(&[
        "sweep", "--class", "A1", "--grid-step", "1/8", "--param-step", "1/8",
    ]);
    let value = stdout_json(&out);
    assert_eq!(value["class"], "A1");
    assert_eq!(value["mismatches"], 0);
    assert!(value["points"].as_u64().unwrap() > 0);
    assert_eq!(value["details"], serde_json::json!([]));
}

#[test]
fn validation_errors_exit_2_and_name_the_flag() {
    let out = run(&["ne", "--class", "D1", "--p", "1/5", "--r", "3/5", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("--t"), "stderr: {stderr}");

    let out = run(&["ne", "--class", "X7", "--p", "1/5", "--r", "3/5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--class"));

    let out = run(&["normalize", "--T", "3", "--R", "5", "--P", "1", "--S", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("T > R"));
}

#[test]
fn unknown_flags_exit_2() {
    let out = run(&["ne", "--bogus-flag", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn region_subcommand_reports_the_verdict() {
    let out = run(&[
        "region", "--class", "E1", "--profile", "4,4", "--p", "1/5", "--r", "3/5", "--t", "3/4",
    ]);
    let value = stdout_json(&out);
    assert_eq!(value["is_ne"], true);
    assert_eq!(value["active_branch"], "branch 1");

    let out = run(&[
        "region", "--class", "E1", "--profile", "4,4", "--t", "1/4",
    ]);
    let value = stdout_json(&out);
    assert_eq!(value["is_ne"], false);
    assert_eq!(value["active_branch"], "none");
}

#[test]
fn extremal_subcommand_scales_to_classic_units() {
    let out = run(&[
        "extremal", "--class", "A1", "--profile", "2,3", "--scale", "classic",
    ]);
    let value = stdout_json(&out);
    assert_eq!(value["param_star"]["kind"], "exact");
    assert_eq!(value["param_star"]["value"], "1/2");
    assert_eq!(value["payoff_star"]["value"], "5/2");
    assert_eq!(value["is_supremum_only"], false);

    let out = run(&["extremal", "--class", "A1", "--profile", "3,4"]);
    let value = stdout_json(&out);
    assert_eq!(value["result"], "no NE on grid");
}

#[test]
fn figure_data_pr_reproduces_the_reference_value() {
    let out = run(&[
        "figure-data", "--class", "A1", "--axis", "PR", "--T", "5", "--R", "3", "--P", "1",
        "--S", "0", "--scale", "classic",
    ]);
    let value = stdout_json(&out);
    let series = value["series"].as_array().unwrap();
    let target = series
        .iter()
        .find(|s| s["label"] == "(2,3) R=3")
        .expect("series for (2,3) at R=3");
    let point = target["points"]
        .as_array()
        .unwrap()
        .iter()
        .find(|p| p["x"] == "1")
        .expect("point at P=1");
    assert_eq!(point["payoff1"], "5/2");
    assert_eq!(point["payoff2"], "5/2");
}

#[test]
fn out_flag_writes_the_output_file() {
    let dir = std::env::temp_dir().join("ewl-dilemma-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("normalize.json");
    let out = run(&[
        "normalize", "--T", "5", "--R", "3", "--P", "1", "--S", "0", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["r"], "3/5");
    std::fs::remove_file(&path).ok();
}

#[test]
fn csv_format_round_trips_the_ne_table() {
    let out = run(&[
        "ne", "--class", "B", "--p", "1/5", "--r", "3/5", "--format", "csv", "--scale",
        "classic",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 8);
    for row in rows {
        assert_eq!(&row[2], "9/4");
        assert_eq!(&row[3], "9/4");
    }
}
