use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fieldnet")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn write_channel(dir: &Path, name: &str, hop1: [u32; 4], hop2: [u32; 4], p: u32, m: usize) -> String {
    let text = format!(
        r#"{{"p":{p},"m":{m},"hop1":{{"q11":{},"q12":{},"q21":{},"q22":{}}},"hop2":{{"q33":{},"q34":{},"q43":{},"q44":{}}}}}"#,
        hop1[0], hop1[1], hop1[2], hop1[3], hop2[0], hop2[1], hop2[2], hop2[3]
    );
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn field_info() {
    let out = run(&["field-info", "--p", "2", "--m", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["pi"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["companion"], serde_json::json!([[0, 1], [1, 1]]));
    assert_eq!(v["alpha_order"], 3);

    // x is not primitive over F_2, so the ground field is generated by x + 1
    let v = json(&run(&["field-info", "--p", "2", "--m", "1"]));
    assert_eq!(v["pi"], serde_json::json!([1, 1]));
    assert_eq!(v["companion"], serde_json::json!([[1]]));

    assert_eq!(code(&run(&["field-info", "--p", "4", "--m", "2"])), 2);
}

#[test]
fn bounds_csv() {
    let out = run(&["bounds", "--p", "2", "--m", "2,4", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "p,m,exact_fraction,lower_bound,mc_estimate,trials,rejected,d_finite"
    );
    let row2 = lines.next().unwrap();
    assert!(row2.starts_with("2,2,2/3 (0.666667),1/2 (0.500000),"), "{row2}");
    let row4 = lines.next().unwrap();
    assert!(row4.starts_with("2,4,4/5 (0.800000),5/8 (0.625000),"), "{row4}");
}

#[test]
fn mc_is_reproducible() {
    let args = ["mc", "--p", "2,3", "--m", "2", "--trials", "3000", "--seed", "9", "--format", "csv"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.lines().nth(1).unwrap().contains(",1.0,3000,"));

    assert_eq!(code(&run(&["mc", "--p", "2", "--m", "2", "--trials", "10"])), 2);
    assert_eq!(code(&run(&["mc", "--p", "2", "--m", "2", "--trials", "0", "--seed", "1"])), 2);
}

#[test]
fn simulate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_channel(dir.path(), "good.json", [1, 2, 1, 1], [1, 1, 1, 2], 2, 2);
    let out = run(&["simulate", "--channel", &good, "--w1", "1,0", "--w2", "1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["success"], true);
    assert_eq!(v["sum_rate_bits"], 3.0);
    assert_eq!(v["decoded"], v["message"]);

    let unit = write_channel(dir.path(), "unit.json", [1, 1, 1, 1], [1, 1, 1, 2], 2, 2);
    let out = run(&["simulate", "--channel", &unit]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["verdict"]["feasible"], false);
    assert_eq!(v["gamma"]["minimal_degree"], 1);

    let subfield = write_channel(dir.path(), "f9.json", [1, 2, 1, 1], [1, 1, 1, 2], 3, 2);
    assert_eq!(code(&run(&["simulate", "--channel", &subfield])), 1);

    let zero = write_channel(dir.path(), "zero.json", [0, 2, 1, 1], [1, 1, 1, 2], 2, 2);
    assert_eq!(code(&run(&["simulate", "--channel", &zero])), 2);
    assert_eq!(code(&run(&["simulate", "--channel", &good, "--w1", "2,0", "--w2", "1"])), 2);
    assert_eq!(code(&run(&["simulate", "--channel", "/nonexistent/channel.json"])), 2);
    assert_eq!(code(&run(&["simulate", "--channel", &good, "--format", "csv"])), 2);
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bounds.json");
    let out = run(&["bounds", "--p", "3", "--m", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v[0]["exact_fraction"], "3/4 (0.750000)");

    let missing = dir.path().join("missing").join("x.json");
    assert_eq!(code(&run(&["bounds", "--p", "3", "--m", "2", "--out", missing.to_str().unwrap()])), 2);
}

#[test]
fn compare_ext_separation() {
    let out = run(&["compare-ext", "--p", "2", "--m", "2", "--trials", "2000", "--seed", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["symbol_extension"]["estimate"], 0.0);
    assert_eq!(v["field_extension"]["estimate"], 1.0);
    assert_eq!(v["field_extension_wins"], true);
}

#[test]
fn scan_small_field() {
    let v = json(&run(&["scan", "--p", "2", "--m", "2"]));
    assert_eq!(v["valid"], 2916);
    assert_eq!(v["success_rate"], 1.0);
    let v = json(&run(&["scan", "--p", "5", "--m", "1"]));
    assert_eq!(v["feasible"], v["valid"]);
    assert_eq!(v["success_rate"], 1.0);
    let v = json(&run(&["scan", "--p", "2", "--m", "1"]));
    assert_eq!(v["valid"], 0);
    assert_eq!(v["feasible_fraction"], Value::Null);
    assert_eq!(code(&run(&["scan", "--p", "3", "--m", "2"])), 2);
}

#[test]
fn symbol_ext_random_channel() {
    let args = ["symbol-ext", "--p", "3", "--m", "2", "--seed", "5"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["channel"]["model"], "mimo");
    if v["verdict"]["feasible"] == true {
        assert_eq!(code(&a), 0);
        assert_eq!(v["success"], true);
        let l = v["extension"]["L"].as_u64().unwrap();
        assert_eq!(v["extension"]["slots"], l);
    } else {
        assert_eq!(code(&a), 1);
    }
    assert_eq!(code(&run(&["symbol-ext", "--p", "2", "--m", "2"])), 2);
    assert_eq!(code(&run(&["symbol-ext"])), 2);
}
