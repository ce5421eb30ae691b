use std::process::{Command, Output};

use serde_json::Value;

fn icc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_icc")).args(args).env_remove("ICC_FIELD_CAP").output().expect("icc runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn weights(v: &Value) -> Vec<(u64, u64)> {
    v.as_array().unwrap().iter().map(|x| (x["w"].as_u64().unwrap(), x["count"].as_u64().unwrap())).collect()
}

#[test]
fn verify_two_weight_example() {
    let out = icc(&["verify", "-p", "7", "-s", "1", "-m", "2", "-N", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "MATCH");
    assert_eq!(weights(&v["weights"]), vec![(0, 1), (6, 24), (8, 24)]);
    assert_eq!(v["diffs"].as_array().unwrap().len(), 0);
    for key in ["params", "theorem", "weights", "poly", "verdict"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["params"]["n"], 8);
}

#[test]
fn verify_three_weight_example_reports_readings() {
    let out = icc(&["verify", "-p", "2", "-s", "1", "-m", "6", "-N", "7", "--show-discrepancies"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verdict"], "MISMATCH");
    assert_eq!(weights(&v["weights"]), vec![(0, 1), (2, 9), (4, 27), (6, 27)]);
    assert_eq!(v["theorem"]["theorem_id"], "T3.19");
    let alts = v["alternatives"].as_array().unwrap();
    assert!(alts.iter().any(|a| a["label"] == "T3.19 base-length-amended" && a["status"] == "MATCH"));

    let out = icc(&["verify", "-p", "2", "-m", "6", "-N", "7", "--reading", "base-length-amended"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "MATCH");
}

#[test]
fn weights_both_methods() {
    let out = icc(&["weights", "-p", "11", "-s", "1", "-m", "2", "-N", "5", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(weights(&v["weights"]), vec![(0, 1), (22, 120)]);
    assert_eq!(weights(&v["predicted"]), vec![(0, 1), (22, 120)]);
    assert_eq!(v["verdict"], "MATCH");
}

#[test]
fn weights_analytic_beyond_the_cap() {
    let out = icc(&["weights", "-p", "19", "-s", "2", "-m", "5", "-N", "5", "--method", "analytic"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["theorem"], "T3.5ii");
    assert_eq!(v["weights"].as_array().unwrap().len(), 3);
}

#[test]
fn codewords_listing() {
    let out = icc(&["codewords", "-p", "7", "-m", "2", "-N", "6", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["codewords"].as_array().unwrap();
    assert_eq!(rows.len(), 49);
    let nonzero: Vec<u64> = rows.iter().map(|r| r["weight"].as_u64().unwrap()).filter(|&w| w > 0).collect();
    assert_eq!(nonzero.len(), 48);
    assert_eq!(nonzero.iter().filter(|&&w| w == 6).count(), 24);
    assert_eq!(nonzero.iter().filter(|&&w| w == 8).count(), 24);
    assert!(rows[1]["symbols"][0].is_u64());

    let out = icc(&["codewords", "-p", "3", "-s", "2", "-m", "2", "-N", "8", "--limit", "5", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.contains("g^"));
}

#[test]
fn periods_and_poly() {
    let out = icc(&["periods", "-p", "2", "-m", "4", "-N", "5"]);
    let v = json(&out);
    let vals: Vec<i64> = v["periods"].as_array().unwrap().iter().map(|x| x["value"].as_i64().unwrap()).collect();
    assert_eq!(vals.iter().sum::<i64>(), -1);
    assert!(v["periods"][0]["exact"].as_bool().unwrap());

    let out = icc(&["poly", "-p", "17", "-m", "2", "-N", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let poly: Vec<i64> = v["poly"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
    assert_eq!(poly, vec![1, 1, -126, -465, 1273, 4260, -3852, -7280, 2704]);
    assert_eq!(v["agrees"], true);

    let out = icc(&["poly", "-p", "17", "-m", "2", "-N", "8", "--as-printed"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["agrees"], false);
}

#[test]
fn exit_statuses() {
    let out = icc(&["info", "-p", "9", "-m", "2", "-N", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "not_prime");

    let out = icc(&["weights", "-p", "2", "-m", "5", "-N", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = icc(&["weights", "-p", "2", "-m", "12", "-N", "5", "--cap", "1000"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["error"]["kind"], "cap_exceeded");

    let out = Command::new(env!("CARGO_BIN_EXE_icc"))
        .args(["weights", "-p", "2", "-m", "12", "-N", "5"])
        .env("ICC_FIELD_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = icc(&["verify", "-p", "17", "-m", "8", "-N", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "NOT_DESK_SCALE");
}

#[test]
fn output_is_deterministic_and_sorted() {
    let a = icc(&["verify", "-p", "3", "-s", "2", "-m", "2", "-N", "8", "--threads", "1"]);
    let b = icc(&["verify", "-p", "3", "-s", "2", "-m", "2", "-N", "8", "--threads", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let top: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = top.clone();
    sorted.sort();
    assert_eq!(top, sorted);
}

#[test]
fn sweep_csv() {
    let out = icc(&["sweep", "--p-max", "7", "--s-max", "1", "--m-max", "2", "-N", "6,8", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "params,theorem,verdict,weights");
    assert!(lines.contains(&"\"(7,1,2,6)\",T3.12ii,MATCH,0:1;6:24;8:24"));
    assert!(lines.contains(&"\"(7,1,1,6)\",T3.8,MATCH,0:1;1:6"));
    assert!(lines.contains(&"\"(7,1,2,8)\",NONE,NOT_APPLICABLE,0:7;6:42"));
}
