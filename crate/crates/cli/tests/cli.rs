use std::process::{Command, Output};

use serde_json::Value;

const REFERENCE: &str = "0,0,0,-1,1,1";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperflex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn report_only_e6_has_exactly_e6_checks() {
    let out = run(&["report", "--only", "e6"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    let checks = j["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["name"].as_str().unwrap().starts_with("e6.")));
    for key in ["name", "expected", "computed", "pass", "paper_location", "runtime_ms"] {
        assert!(checks.iter().all(|c| c.get(key).is_some()), "{key}");
    }
}

#[test]
fn report_exit_code_tracks_check_outcomes() {
    let out = run(&["report", "--only", "density,combine"]);
    let j = json(&out);
    let all_pass = j["all_pass"].as_bool().unwrap();
    let failed = j["checks"].as_array().unwrap().iter().filter(|c| !c["pass"].as_bool().unwrap()).count();
    assert_eq!(all_pass, failed == 0);
    assert_eq!(out.status.code(), Some(if all_pass { 0 } else { 1 }));
}

#[test]
fn invalid_inputs_exit_2() {
    for args in [
        vec!["family", "disc", "--b", "1,2,3"],
        vec!["family", "count", "--b", REFERENCE, "--prime", "9"],
        vec!["report", "--only", "e7"],
        vec!["stats", "box", "--height", "0"],
        vec!["padic", "log", "--b", "a,b,c,d,e,f"],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn rholog_image() {
    let out = run(&["padic", "rholog", "--b", REFERENCE, "--prime", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["image"], serde_json::json!([[1, 1, 0], [1, 0, 0]]));
    assert_eq!(j["certificate"]["stable_from"], 2);
}

#[test]
fn rholog_out_of_scope_exits_1() {
    let out = run(&["padic", "rholog", "--b", "0,0,0,0,0,0", "--prime", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn log_coefficients_are_exact_strings() {
    let j = json(&run(&["padic", "log", "--b", REFERENCE, "--prime", "2", "--order", "13"]));
    let c = &j["components"];
    assert_eq!(c[0][9], "-1/3");
    assert_eq!(c[0][10], "3/10");
    assert_eq!(c[1][2], "1/2");
    assert_eq!(c[2][5], "1/5");
}

#[test]
fn torsion_and_counts() {
    let j = json(&run(&["padic", "torsion", "--b", REFERENCE]));
    assert_eq!(j["only_root_is_zero"], true);
    let j = json(&run(&["family", "count", "--b", REFERENCE, "--prime", "2"]));
    assert_eq!(j["points"], 1);
    assert_eq!(j["smooth"], true);
}

#[test]
fn resultant_text() {
    let j = json(&run(&["bitangents", "resultant", "--b", REFERENCE]));
    assert_eq!(j["degree"], 27);
    let text = j["text"].as_str().unwrap();
    assert!(text.starts_with("4096 + 12288*a - 126976*a^3 + 110592*a^6"));
    assert!(text.ends_with("1344*a^18 + 480*a^19 + a^27"));
}

#[test]
fn galois_report_flags_ramification_at_2() {
    let j = json(&run(&["bitangents", "galois", "--b", REFERENCE, "--primes", "2,3"]));
    assert_eq!(j["primes"][0]["status"], "ramified");
    assert_eq!(j["primes"][0]["newton"]["irreducible_certified"], true);
}

#[test]
fn enumerate_matches_box_count() {
    let out = run(&["family", "enumerate", "--height", "10000", "--format", "csv"]);
    let lines = String::from_utf8(out.stdout).unwrap();
    let n = lines.lines().count();
    let j = json(&run(&["stats", "box", "--height", "10000"]));
    assert_eq!(j["count"], n.to_string());
    assert_eq!(lines.lines().next(), Some("-1,-1,-2,-2,-3,-4"));
}

#[test]
fn combine_with_given_inputs() {
    let j = json(&run(&["stats", "combine", "--selmer", "3", "--d7", "6/7", "--max-f7", "22"]));
    assert_eq!(j["delta_low"]["exact"], "5/7");
    assert_eq!(j["point_cap"], 26);
    assert_eq!(j["majority_low"]["exact"], "4/7");
    assert_eq!(j["independent_product"]["exact"], "30/49");
}

#[test]
fn csv_format_for_scalar_outputs() {
    let out = run(&["family", "smooth", "--b", REFERENCE, "--prime", "7", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "b,field,smooth\n\"0,0,0,-1,1,1\",7,true\n");
}
