use std::io::Write;
use std::process::{Command, Stdio};

use proptest::prelude::*;
use serde_json::Value;
use spherical::json::SystemJson;
use spherical_core::enumerate::enumerate_systems;
use spherical_core::DynkinDiagram;

const AA11: &str = r#"{"diagram":{"components":[{"family":"A","rank":1},{"family":"A","rank":1}]},
"sp":[],"sigma":[[[1,1,1],[2,1,1]]]}"#;

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("spherical").chain(args.iter().copied());
    let code = spherical::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str], stdin: &str) -> Value {
    let (code, out, err) = run(args, stdin);
    assert_eq!(code, 0, "{}{}", out, err);
    serde_json::from_str(&out).unwrap()
}

#[test]
fn validate_aa11() {
    let v = json(&["validate"], AA11);
    assert_eq!(v["valid"], true);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn invalid_system_is_reported_not_failed() {
    // 2α1 with α1 ∉ S^p on A1 alone violates nothing; α1 + α2 on A2 with
    // S^p = {α1} breaks the S axiom.
    let bad = r#"{"diagram":{"components":[{"family":"A","rank":2}]},"sp":[[1,1]],"sigma":[[[1,1,1],[1,2,1]]]}"#;
    let v = json(&["validate"], bad);
    assert_eq!(v["valid"], false);
    assert!(!v["violations"].as_array().unwrap().is_empty());
    let (code, out, _) = run(&["colours"], bad);
    assert_eq!(code, 1);
    assert!(out.contains("\"error\""));
}

#[test]
fn malformed_json_has_position() {
    let (code, out, _) = run(&["validate"], "{\n  \"diagram\": }\n");
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["kind"], "json");
    assert_eq!(v["error"]["line"], 2);
    assert!(v["error"]["column"].is_u64());
}

#[test]
fn usage_errors() {
    let (code, out, err) = run(&["frobnicate"], "");
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(!err.is_empty());
    assert_eq!(run(&["orbit", "--diagram", "G2"], "").0, 2);
    let (code, out, _) = run(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("enumerate"));
}

#[test]
fn domain_errors() {
    let (code, out, _) = run(&["enumerate", "--diagram", "Q7"], "");
    assert_eq!(code, 1);
    assert!(out.contains("\"kind\""));
    assert_eq!(run(&["symmetric", "--label", "Z IX", "--n", "3"], "").0, 1);
    assert_eq!(run(&["quotient", "--colours", "D9"], AA11).0, 1);
}

#[test]
fn enumerate_g2() {
    let v = json(&["enumerate", "--diagram", "G2", "--primitive", "--classify"], "");
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 4);
    let mut labels: Vec<&str> = list.iter().map(|e| e["classification"]["label"].as_str().unwrap()).collect();
    labels.sort();
    assert_eq!(labels, ["g'(2)", "g(2)", "g*(2)", "go(2)"]);
}

#[test]
fn orbit_g2() {
    let v = json(&["orbit", "--diagram", "G2", "--char", "1,0"], "");
    assert_eq!(v["height"], 3);
    assert_eq!(v["spherical"], true);
    assert_eq!(v["dim_orbit"], 8);
    let v = json(&["orbit", "--diagram", "G2", "--char", "0,2"], "");
    assert_eq!(v["height"], 4);
    assert_eq!(v["spherical"], false);
}

#[test]
fn symmetric_a_iii() {
    let v = json(&["symmetric", "--label", "A III", "--p", "2", "--q", "3"], "");
    assert_eq!(v["expected"], v["classification"]["label"]);
    // A_{2p+q}
    assert_eq!(v["system"]["diagram"]["components"][0]["rank"], 7);
    let s: SystemJson = serde_json::from_value(v["system"].clone()).unwrap();
    assert!(s.to_system().unwrap().is_valid());
}

#[test]
fn catalog_and_classify_agree() {
    let v = json(&["catalog", "families", "--label", "ds*(4)"], "");
    let sys = v[0]["system"].to_string();
    let c = json(&["classify"], &sys);
    assert_eq!(c["classification"]["label"], "ds*(4)");
    assert_eq!(c["primitive"], true);
    let a = json(&["affine-check"], &sys);
    assert_eq!(a["affine"], true);
}

#[test]
fn quotient_and_identities() {
    let q = json(&["quotient", "--colours", "D1"], AA11);
    assert!(q["delta_prime"].as_array().unwrap().iter().any(|d| d == "D1"));
    let i = json(&["identities"], AA11);
    assert_eq!(i["dim"], 3);
    assert_eq!(i["character_rank"], 0);
}

#[test]
fn diagrams_render() {
    let (code, text, _) = run(&["diagram"], AA11);
    assert_eq!(code, 0);
    assert!(text.starts_with("A1,A1\n"));
    let (code, svg, _) = run(&["diagram", "--format", "svg"], AA11);
    assert_eq!(code, 0);
    assert!(svg.starts_with("<?xml") && svg.contains("<svg") && svg.trim_end().ends_with("</svg>"));
}

#[test]
fn output_is_repeatable() {
    for args in
        [&["enumerate", "--diagram", "B3", "--classify"][..], &["catalog", "rank1"], &["diagram", "--format", "svg"]]
    {
        assert_eq!(run(args, AA11), run(args, AA11));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_spherical");
    let status = |args: &[&str], input: &str| {
        let mut child = Command::new(bin)
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
        child.wait_with_output().unwrap().status.code().unwrap()
    };
    assert_eq!(status(&["validate"], AA11), 0);
    assert_eq!(status(&["validate"], "not json"), 1);
    assert_eq!(status(&["nope"], ""), 2);
}

#[test]
fn search_budget_from_environment() {
    let bin = env!("CARGO_BIN_EXE_spherical");
    let out =
        Command::new(bin).args(["enumerate", "--diagram", "F4"]).env(spherical::cli::BUDGET_VAR, "3").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("budget"));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn json_round_trip(pick in 0usize..10_000, which in 0usize..6) {
        let name = ["A3", "B3", "C3", "G2", "A1,B2", "D4"][which];
        let systems = enumerate_systems(&DynkinDiagram::parse(name).unwrap()).unwrap();
        let s = &systems[pick % systems.len()];
        let text = serde_json::to_string(&SystemJson::from(s)).unwrap();
        let back: SystemJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back.to_system().unwrap(), s);
        let v = json(&["validate"], &text);
        prop_assert_eq!(v["valid"].as_bool().unwrap(), s.is_valid());
    }
}
