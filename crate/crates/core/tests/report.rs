use std::collections::HashSet;

use hodge_core::report::{
    emit, exit_code, parse_json, run_suite, ClaimRecord, Config, Format, Status, MODULES,
};
use hodge_core::Error;

fn full() -> Vec<ClaimRecord> {
    run_suite(None, &Config::default()).unwrap()
}

#[test]
fn full_report_shape() {
    let recs = full();
    assert_eq!(exit_code(&recs), 0);
    let fails: Vec<&ClaimRecord> = recs.iter().filter(|r| r.status == Status::Fail).collect();
    assert!(fails.is_empty(), "{fails:#?}");
    let flagged: Vec<&str> = recs
        .iter()
        .filter(|r| r.status == Status::Flagged)
        .map(|r| r.claim_id.as_str())
        .collect();
    assert_eq!(flagged, vec!["spin_explicit.claim09"]);

    let ids: HashSet<&str> = recs.iter().map(|r| r.claim_id.as_str()).collect();
    assert_eq!(ids.len(), recs.len());
    for r in &recs {
        let (module, rest) = r.claim_id.split_once('.').unwrap();
        assert!(MODULES.contains(&module), "{}", r.claim_id);
        assert!(rest.starts_with("claim"));
        assert!(!r.reference.is_empty());
    }
    for m in MODULES {
        assert!(recs.iter().any(|r| r.claim_id.starts_with(m)), "{m}");
    }
    let b2 = recs
        .iter()
        .find(|r| r.reference == "dim B^2(A) = 6")
        .expect("B^2 record");
    assert_eq!((b2.computed.as_str(), b2.status), ("6", Status::Pass));
}

#[test]
fn per_module_runs_reassemble_the_full_report() {
    let whole = full();
    let mut parts: Vec<ClaimRecord> = MODULES
        .iter()
        .flat_map(|m| run_suite(Some(m), &Config::default()).unwrap())
        .collect();
    parts.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    assert_eq!(parts, whole);
}

#[test]
fn formats_round_trip() {
    let recs = run_suite(Some("qalg"), &Config::default()).unwrap();
    let json = emit(&recs, Format::Json);
    assert_eq!(parse_json(&json).unwrap(), recs);
    let md = emit(&recs, Format::Markdown);
    assert_eq!(md.lines().count(), recs.len() + 2);
    assert!(md.starts_with("| claim_id | reference | expected | computed | status |"));
    assert!(parse_json("[{]").is_err());
    assert_eq!("md".parse::<Format>().unwrap(), Format::Markdown);
    assert!("xml".parse::<Format>().is_err());
}

#[test]
fn status_serializes_uppercase() {
    let s = serde_json::to_string(&[Status::Pass, Status::Evidence, Status::Flagged]).unwrap();
    assert_eq!(s, r#"["PASS","EVIDENCE","FLAGGED"]"#);
}

#[test]
fn config_driven_runs() {
    let cfg = Config::parse("primes = 13\nembed_pairs = 3\n").unwrap();
    let curve = run_suite(Some("curve_model"), &cfg).unwrap();
    let default_curve = run_suite(Some("curve_model"), &Config::default()).unwrap();
    assert_eq!(curve.len() + 1, default_curve.len());

    // a prime the locus check rejects becomes a FAIL record, not a panic
    let bad = Config::parse("primes = 5").unwrap();
    let recs = run_suite(Some("curve_model"), &bad).unwrap();
    assert!(recs
        .iter()
        .any(|r| r.status == Status::Fail && r.computed.contains("5")));
    assert_eq!(exit_code(&recs), 1);

    assert!(matches!(
        Config::parse("enumerate_genus = 4"),
        Err(Error::Config(_))
    ));
    assert!(matches!(Config::parse("just words"), Err(Error::Config(_))));
    let mut scaled = Config::default();
    scaled.budget_scale = 3;
    assert_eq!(scaled.effective_budget(), 600_000);
}

#[test]
fn unknown_module_is_an_error() {
    assert!(matches!(
        run_suite(Some("nope"), &Config::default()),
        Err(Error::UnknownModule(_))
    ));
}
