use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_milnor-spectra")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(&[args, &["--json"]].concat());
    (serde_json::from_slice(&out.stdout).expect("JSON on stdout"), out.status.code().unwrap())
}

#[test]
fn braid2_charpoly() {
    let (v, code) = json(&["--builtin", "braid:2", "charpoly"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["charpoly"], "(t-1)^2 (t^2+t+1)^1");
    assert_eq!(v["result"]["mult"], serde_json::json!([2, 1, 1]));
    assert_eq!(v["input"]["hyperplanes"], serde_json::json!(["1 -1 0", "1 0 -1", "0 1 -1"]));
}

#[test]
fn braid3_degree_one_bounds() {
    let (v, code) = json(&["--builtin", "braid:3", "bounds", "--degree", "1"]);
    assert_eq!(code, 0);
    let degrees = v["result"]["degrees"].as_array().unwrap();
    assert_eq!(degrees.len(), 1);
    assert_eq!(degrees[0]["admissible_orders"], serde_json::json!([1, 3]));
}

#[test]
fn refined_and_all_strata_flags() {
    let (v, _) = json(&["--builtin", "braid:3", "bounds", "--all-strata", "--refined"]);
    assert_eq!(v["result"]["dense_only"], false);
    assert_eq!(v["result"]["degrees"][1]["refined"], serde_json::json!([1, 3]));
    assert!(v["result"]["degrees"][3].get("refined").is_none());
}

#[test]
fn generic_zeta() {
    let (v, code) = json(&["--builtin", "generic:2,5", "zeta"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["zeta"]["text"], "(1-t^5)^3");
    assert_eq!(v["result"]["eigenvalue_one"], serde_json::json!([1, 4, 6]));
}

#[test]
fn json_is_byte_deterministic() {
    for args in [
        &["--builtin", "braid:3", "report", "--seed", "5"][..],
        &["--builtin", "braid:4", "section", "2"][..],
        &["--builtin", "ceva:3", "charpoly"][..],
    ] {
        let a = run(&[args, &["--json"]].concat());
        let b = run(&[args, &["--json"]].concat());
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn seed_changes_the_section() {
    let (a, _) = json(&["--builtin", "braid:3", "section", "2", "--seed", "0"]);
    let (b, _) = json(&["--builtin", "braid:3", "section", "2", "--seed", "1"]);
    assert_ne!(a["result"]["plane"], b["result"]["plane"]);
}

#[test]
fn report_cross_checks_pass() {
    for b in ["braid:2", "braid:3", "ceva:3", "triangle-medians", "generic:3,5"] {
        let (v, code) = json(&["--builtin", b, "report"]);
        assert_eq!(code, 0, "{b}");
        let checks = v["result"]["checks"].as_array().unwrap();
        assert!(checks.len() >= 4, "{b}");
        assert!(checks.iter().all(|c| c["pass"] == true), "{b}: {checks:?}");
    }
}

#[test]
fn file_input_and_validate() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# scaled rows are canonicalized\ndim 2\n2 -2 0\n1 0 -1\n0 3 -3").unwrap();
    let path = f.path().to_str().unwrap();
    let (v, code) = json(&["-i", path, "validate"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["canonical"], "dim 2\n1 -1 0\n1 0 -1\n0 1 -1\n");
    let (c, _) = json(&["-i", path, "charpoly"]);
    assert_eq!(c["result"]["charpoly"], "(t-1)^2 (t^2+t+1)^1");
}

#[test]
fn input_errors_exit_one_with_codes() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "dim 2\n1 0 0\n2 0 0").unwrap();
    let (v, code) = json(&["-i", f.path().to_str().unwrap(), "lattice"]);
    assert_eq!((code, v["error"]["code"].as_str()), (1, Some("DuplicateHyperplane")));

    let (v, code) = json(&["--builtin", "nope", "zeta"]);
    assert_eq!((code, v["error"]["code"].as_str()), (1, Some("UnsupportedBuiltin")));

    let (v, code) = json(&["--builtin", "braid:3", "charpoly"]);
    assert_eq!((code, v["error"]["code"].as_str()), (1, Some("InvalidDimension")));

    let (v, code) = json(&["--builtin", "braid:2", "bounds", "--degree", "3"]);
    assert_eq!((code, v["error"]["code"].as_str()), (1, Some("InvalidArgument")));

    let (v, code) = json(&["zeta"]);
    assert_eq!((code, v["error"]["code"].as_str()), (1, Some("MissingInput")));

    assert_eq!(run(&["--builtin", "braid:2", "frobnicate"]).status.code(), Some(1));
}

#[test]
fn section_with_charpoly() {
    let (v, code) = json(&["--builtin", "braid:3", "charpoly", "--section", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["charpoly"], "(t-1)^5 (t^2+t+1)^1");
    assert_eq!(v["result"]["section"]["seed"], 3);
}

#[test]
fn exponent_conventions_are_selectable() {
    for c in ["reconciled", "strict", "paper-theorem"] {
        let (v, code) = json(&["--builtin", "braid:2", "charpoly", "--exponent-convention", c]);
        assert_eq!(code, 0, "{c}");
        assert_eq!(v["result"]["convention"], c);
    }
    assert_eq!(run(&["--builtin", "braid:2", "charpoly", "--exponent-convention", "other"]).status.code(), Some(1));
}

#[test]
fn text_mode_projects_the_report() {
    let out = run(&["--builtin", "braid:2", "zeta"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("text: (1-t^3)^-1"), "{s}");
    assert!(!s.contains("timing"));
    let timed = String::from_utf8(run(&["--builtin", "braid:2", "zeta", "--timing"]).stdout).unwrap();
    assert!(timed.contains("elapsed_ms"));
}

#[test]
fn thread_cap_is_respected() {
    let out = Command::new(env!("CARGO_BIN_EXE_milnor-spectra"))
        .args(["--builtin", "ceva:3", "charpoly", "--json"])
        .env("MILNOR_SPECTRA_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let bad = Command::new(env!("CARGO_BIN_EXE_milnor-spectra"))
        .args(["--builtin", "braid:2", "zeta"])
        .env("MILNOR_SPECTRA_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
