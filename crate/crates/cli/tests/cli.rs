use std::process::{Command, Output};

use serde_json::Value;

fn hodge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge"))
        .args(args)
        .env_remove("HODGE_BUDGET_SCALE")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn qalg_checks_pass() {
    for check in ["nonfree", "wedderburn", "embed"] {
        let out = hodge(&["qalg", "--check", check]);
        assert_eq!(out.status.code(), Some(0), "{check}");
        json(&out);
    }
}

#[test]
fn homs_enumeration_counts() {
    let out = hodge(&["homs", "--genus", "2", "--enumerate"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("2176") && text.contains("1440"), "{text}");
}

#[test]
fn homs_needs_exactly_one_action() {
    assert_eq!(hodge(&["homs", "--genus", "2"]).status.code(), Some(2));
    let both = hodge(&["homs", "--genus", "2", "--enumerate", "--verify-psi"]);
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn normalize_accepts_signed_tuples() {
    let out = hodge(&["homs", "--genus", "2", "--normalize", "-1,i,j,1"]);
    assert_eq!(out.status.code(), Some(0));
    let ok = hodge(&["homs", "--genus", "2", "--normalize", "j,i,i,j"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["reached"], Value::Bool(true));
    let bad = hodge(&["homs", "--genus", "2", "--normalize", "i,1,j,1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn weil_dimensions() {
    let out = hodge(&["weil", "--n", "1", "--params", "-1,-3", "--report"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        (v["dim_WK"].as_u64(), v["dim_WF"].as_u64()),
        (Some(2), Some(3))
    );
}

#[test]
fn curve_checks() {
    for check in ["autos", "quadrics", "action", "quartics"] {
        assert_eq!(
            hodge(&["curve", "--check", check]).status.code(),
            Some(0),
            "{check}"
        );
    }
    assert_eq!(
        hodge(&["curve", "--check", "locus", "--p", "13"])
            .status
            .code(),
        Some(0)
    );
    let num = hodge(&["curve", "--check", "numerology", "--n", "4"]);
    assert_eq!(num.status.code(), Some(0));
    assert_eq!(json(&num)["genus"].as_u64(), Some(9));
    let bad = hodge(&["curve", "--check", "locus", "--p", "5"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("error"));
}

#[test]
fn lie_scenarios_and_decomposition() {
    let out = hodge(&["lie", "--scenario", "so7_hodge"]);
    assert_eq!(out.status.code(), Some(0));
    let dec = hodge(&["lie", "--decompose", "B3", "wedge(2, Γ)"]);
    assert_eq!(dec.status.code(), Some(0));
    assert_eq!(hodge(&["lie", "--scenario", "nope"]).status.code(), Some(2));
}

#[test]
fn spin_flags_the_printed_formula() {
    let out = hodge(&["spin", "--invariant"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("e1∧e3∧e12∧e23"), "{text}");
    assert_eq!(hodge(&["spin", "--check-bracket"]).status.code(), Some(0));
}

#[test]
fn report_markdown_has_one_row_per_record() {
    let js = hodge(&["report", "--module", "qalg"]);
    assert_eq!(js.status.code(), Some(0));
    let n = json(&js).as_array().unwrap().len();
    let md = hodge(&["report", "--module", "qalg", "--format", "markdown"]);
    assert_eq!(md.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&md.stdout).lines().count(), n + 2);
}

#[test]
fn report_errors() {
    assert_eq!(
        hodge(&["report", "--module", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(hodge(&["report", "--format", "xml"]).status.code(), Some(2));
    let missing = hodge(&["report", "--config", "/nonexistent/hodge.conf"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn report_with_config_file() {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let good = dir.join("hodge-good.conf");
    std::fs::write(&good, "# one prime\nprimes = 13\n").unwrap();
    let out = hodge(&[
        "report",
        "--module",
        "curve_model",
        "--config",
        good.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let recs = json(&out);
    assert!(recs
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["status"] != "FAIL"));

    // a prime the locus check rejects fails the report
    let bad = dir.join("hodge-bad.conf");
    std::fs::write(&bad, "primes = 5\n").unwrap();
    let out = hodge(&[
        "report",
        "--module",
        "curve_model",
        "--config",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));

    let unknown = dir.join("hodge-unknown.conf");
    std::fs::write(&unknown, "colour = blue\n").unwrap();
    let out = hodge(&["report", "--config", unknown.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_scale_must_be_positive() {
    let out = Command::new(env!("CARGO_BIN_EXE_hodge"))
        .args(["report", "--module", "qalg"])
        .env("HODGE_BUDGET_SCALE", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn full_report_is_byte_identical_across_runs() {
    let a = hodge(&["report"]);
    let b = hodge(&["report"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let recs = json(&a);
    let flagged: Vec<&str> = recs
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "FLAGGED")
        .map(|r| r["claim_id"].as_str().unwrap())
        .collect();
    assert_eq!(flagged, vec!["spin_explicit.claim09"]);
}
