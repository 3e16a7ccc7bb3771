use std::process::{Command, Output};

use serde_json::Value;

fn gchp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gchp"))
        .args(args)
        .env_remove("GCHP_MODE")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn pair(v: &Value) -> (f64, f64) {
    (v[0].as_f64().unwrap(), v[1].as_f64().unwrap())
}

#[test]
fn eval_matches_hand_expansion() {
    // nu=1, xi=2: w = z* + 1, G^{2,1} = z^2 w - 2z
    let z = (0.5f64, -0.25f64);
    let w = (z.0 + 1.0, -z.1);
    let zw = (z.0 * w.0 - z.1 * w.1, z.0 * w.1 + z.1 * w.0);
    let t = (zw.0 - 2.0, zw.1);
    let want = (z.0 * t.0 - z.1 * t.1, z.0 * t.1 + z.1 * t.0);

    let doc = json(&gchp(&["eval", "2", "1", "0.5", "-0.25", "--xi", "2", "0", "--output", "json"]));
    assert_eq!(pair(&doc["value"]), want);
    assert_eq!(doc["value_exact"], "-21/32+11/64i");

    let pretty = gchp(&["eval", "2", "1", "0.5", "-0.25", "--xi", "2", "0"]);
    assert_eq!(String::from_utf8_lossy(&pretty.stdout).trim(), "G^{2,1}(1/2-1/4i) = -21/32+11/64i");
}

#[test]
fn matrix_csv_and_json_agree() {
    let csv = gchp(&["matrix", "1", "1", "--xi", "2", "0", "--output", "csv"]);
    assert!(csv.status.success());
    let text = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(text.lines().collect::<Vec<_>>(), ["j,k,re,im", "0,0,-1,0", "0,1,0,0", "1,0,1,0", "1,1,1,0"]);

    let doc = json(&gchp(&["matrix", "1", "1", "--xi", "2", "0", "--output", "json"]));
    let coeffs: Vec<(f64, f64)> = doc["coeffs"].as_array().unwrap().iter().map(pair).collect();
    assert_eq!(coeffs, [(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0), (1.0, 0.0)]);
    assert_eq!(doc["mode"], "exact");
}

#[test]
fn mode_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_gchp"))
        .args(["matrix", "2", "2", "--output", "json"])
        .env("GCHP_MODE", "float")
        .output()
        .unwrap();
    let doc = json(&out);
    assert_eq!(doc["mode"], "float");
    assert!(doc.get("coeffs_exact").is_none_or(Value::is_null));

    // the flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_gchp"))
        .args(["--mode", "exact", "matrix", "2", "2", "--output", "json"])
        .env("GCHP_MODE", "float")
        .output()
        .unwrap();
    assert_eq!(json(&out)["mode"], "exact");
}

#[test]
fn inner_reports_three_methods() {
    let doc = json(&gchp(&["inner", "1", "0", "0", "0", "--xi", "2", "0", "--output", "json"]));
    let target = -std::f64::consts::PI * std::f64::consts::E;
    for key in ["exact", "moment", "quadrature"] {
        let (re, im) = pair(&doc[key]);
        assert!((re - target).abs() < 1e-12 && im.abs() < 1e-12, "{key}: {re} {im}");
    }
    assert_eq!(doc["exact_reduced"], "-1");
    assert_eq!(doc["within_tolerance"], true);
}

#[test]
fn quadrature_order_too_small_is_rejected() {
    let out = gchp(&["inner", "3", "3", "3", "3", "--quad-order", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn writes_to_file() {
    let dir = std::env::temp_dir().join(format!("gchp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g22.json");
    let out = gchp(&["matrix", "2", "2", "--xi", "2", "0", "--output", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["deg_z"], 2);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["matrix", "99", "1"][..],
        &["--nu", "0", "matrix", "1", "1"],
        &["--nu", "-1/2", "matrix", "1", "1"],
        &["--tolerance", "-1", "verify"],
        &["verify", "--max-degree", "11"],
        &["frobnicate"],
    ] {
        assert_eq!(gchp(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_exit_codes() {
    let ok = gchp(&["verify", "--max-degree", "2", "--output", "json"]);
    let report = json(&ok);
    assert_eq!(report["passed"], true);
    let errata: Vec<&str> = report["errata"].as_array().unwrap().iter().map(|e| e["id"].as_str().unwrap()).collect();
    assert_eq!(errata.len(), 2);

    let bad = gchp(&["verify", "--max-degree", "2", "--corrupt", "1", "1"]);
    assert_eq!(bad.status.code(), Some(1));
}
