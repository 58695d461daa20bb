use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const HESSE_3: &str = r#"{"schema":1,"p":5,"n":2,"d":3,"m":2,"coefficients":[["3"],["1"],["0"],["0"],["1"],["0"],["0"],["0"],["0"],["1"]]}"#;
const NODAL: &str = r#"{"p":5,"n":2,"d":3,"coefficients":[[2],[1],[0],[0],[1],[0],[0],[0],[0],[1]]}"#;
const SUPERSINGULAR: &str = r#"{"p":5,"n":2,"d":3,"coefficients":[[1],[1],[0],[0],[1],[0],[0],[0],[0],[1]]}"#;

fn unitroot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unitroot")).args(args).output().expect("binary runs")
}

fn with_config(doc: &str, f: impl FnOnce(&str)) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("instance.json");
    std::fs::write(&path, doc).unwrap();
    f(path.to_str().unwrap());
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn basis_lists_the_unit_block_first() {
    with_config(HESSE_3, |cfg| {
        let out = unitroot(&["basis", "--config", cfg]);
        assert_eq!(out.status.code(), Some(0));
        let r = json(&out);
        assert_eq!(r["schema"], 1);
        assert_eq!(r["basis"]["n_monomials"], 10);
        assert_eq!(r["basis"]["unit_count"], 1);
        assert_eq!(r["basis"]["monomials"][0]["exponent"], serde_json::json!([1, 1, 1]));
    });
}

#[test]
fn verify_smooth_hesse() {
    with_config(HESSE_3, |cfg| {
        let out = unitroot(&["verify", "--config", cfg]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        let r = json(&out);
        assert_eq!(r["verified"], true);
        assert_eq!(r["zeta"]["counts"][0], "3");
        assert_eq!(r["zeta"]["numerator"], serde_json::json!(["1", "-3", "5"]));
        assert_eq!(r["zeta"]["rho"], r["theorem"]["rho"]);
        assert_eq!(r["agreement"].as_array().unwrap().len(), 2);
    });
}

#[test]
fn exit_codes() {
    with_config(NODAL, |cfg| {
        let out = unitroot(&["verify", "--config", cfg]);
        assert_eq!(out.status.code(), Some(4));
        assert!(String::from_utf8_lossy(&out.stderr).contains("singular point"));
    });
    with_config(SUPERSINGULAR, |cfg| {
        assert_eq!(unitroot(&["unit-roots", "--config", cfg]).status.code(), Some(3));
        let out = unitroot(&["verify", "--config", cfg]);
        assert_eq!(out.status.code(), Some(3));
        // the oracle still reports the (empty) unit factor
        assert_eq!(json(&out)["zeta"]["unit_degree"], 0);
    });
    with_config(r#"{"p":4,"n":2,"d":3,"coefficients":[]}"#, |cfg| {
        assert_eq!(unitroot(&["zeta", "--config", cfg]).status.code(), Some(2));
    });
    with_config(r#"{"p":5,"n":2,"d":3,"coefficients":[[0],[1],[0],[0],[1],[0],[0],[0],[0],[1]]}"#, |cfg| {
        assert_eq!(unitroot(&["unit-roots", "--config", cfg]).status.code(), Some(2));
    });
    assert_eq!(unitroot(&["zeta", "--config", "/nonexistent/instance.json"]).status.code(), Some(2));
    with_config(HESSE_3, |cfg| {
        // order 0 keeps only the identity, which the oracle contradicts
        let out = unitroot(&["verify", "--config", cfg, "--truncation", "0"]);
        assert_eq!(out.status.code(), Some(5));
        assert_eq!(json(&out)["verified"], false);
    });
}

#[test]
fn reports_are_deterministic_and_json_out_matches() {
    with_config(HESSE_3, |cfg| {
        let dir = tempfile::tempdir().unwrap();
        let saved = dir.path().join("report.json");
        let a = unitroot(&["verify", "--config", cfg, "--json-out", saved.to_str().unwrap()]);
        let b = unitroot(&["verify", "--config", cfg, "--jobs", "1"]);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(std::fs::read(&saved).unwrap(), a.stdout);
        let timed = json(&unitroot(&["verify", "--config", cfg, "--timing"]));
        assert!(timed["timing_seconds"]["zeta"].is_number());
        assert!(json(&a).get("timing_seconds").is_none());
    });
}

#[test]
fn precision_and_truncation_overrides() {
    with_config(HESSE_3, |cfg| {
        let r = json(&unitroot(&["unit-roots", "--config", cfg, "--precision", "3"]));
        assert_eq!(r["theorem"]["precision"], 3);
        assert_eq!(r["theorem"]["truncation"], serde_json::json!({"numerator": 124, "denominator": 24}));
        // unit root of T^2 - 3T + 5 mod 125 is 93 (93^2 - 3*93 + 5 = 67 * 125), rho = 1 + 32t
        assert_eq!(r["theorem"]["rho"], serde_json::json!([["1"], ["32"]]));
        let r = json(&unitroot(&["unit-roots", "--config", cfg, "--truncation", "29"]));
        assert_eq!(r["theorem"]["truncation"], serde_json::json!({"numerator": 29, "denominator": 5}));
    });
}

#[test]
fn literal_normalization_is_documented() {
    with_config(HESSE_3, |cfg| {
        let m = json(&unitroot(&["hasse-witt", "--config", cfg]));
        let l = json(&unitroot(&["hasse-witt", "--config", cfg, "--normalization", "literal"]));
        assert_eq!(m["hasse_witt"]["matrix"], serde_json::json!([[["3"]]]));
        // 1/prod nu! = (p-1)!/prod nu! * (-1) mod p
        assert_eq!(l["hasse_witt"]["matrix"], serde_json::json!([[["2"]]]));
        assert!(l["normalization_note"].is_string());
        assert!(m.get("normalization_note").is_none());
    });
}

#[test]
fn random_config_feeds_back_in() {
    let out = unitroot(&["random-config", "--seed", "11", "--p", "3", "--n", "2", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let again = unitroot(&["random-config", "--seed", "11", "--p", "3", "--n", "2", "--d", "3"]);
    assert_eq!(out.stdout, again.stdout);
    let doc = String::from_utf8(out.stdout).unwrap();
    with_config(&doc, |cfg| {
        let r = json(&unitroot(&["basis", "--config", cfg]));
        assert_eq!(r["instance"]["p"], 3);
        assert!(Path::new(cfg).exists());
    });
}
