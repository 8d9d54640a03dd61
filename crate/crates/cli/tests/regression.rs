use std::path::PathBuf;

use sgpcalc::parse::{format_ideal, format_semigroup, parse_ideal, parse_semigroup};
use sgpcalc::regression::{load_dir, run_case, RegressionCase};
use sgpcalc::ring_from_literal;
use sgpcalc_core::{FractionalIdeal, IdealArithmetic, WindowOracle};

fn cases() -> Vec<RegressionCase> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/regression");
    let cases = load_dir(&dir).unwrap();
    assert_eq!(cases.len(), 5);
    cases
}

fn assert_all_pass(name: &str, route: &str, results: &[sgpcalc::regression::CheckResult]) {
    let failures: Vec<String> = results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{}: expected {} got {}", r.label, r.expected, r.actual))
        .collect();
    assert!(
        failures.is_empty(),
        "{name} ({route}):\n{}",
        failures.join("\n")
    );
}

#[test]
fn cases_pass_on_fast_path() {
    for case in cases() {
        let ring = ring_from_literal(&case.semigroup).unwrap();
        let results = run_case(&ring, &case).unwrap();
        assert_all_pass(&case.name, "fast path", &results);
    }
}

#[test]
fn cases_pass_on_window_oracle() {
    for case in cases() {
        let oracle = WindowOracle::new(&case.semigroup_generators().unwrap()).unwrap();
        let results = run_case(&oracle, &case).unwrap();
        assert_all_pass(&case.name, "window oracle", &results);
    }
}

#[test]
fn disputed_instances_are_flagged() {
    let flagged: Vec<String> = cases()
        .into_iter()
        .filter(|c| c.discrepancy.is_some())
        .map(|c| c.name)
        .collect();
    assert_eq!(
        flagged,
        [
            "burch_claim_4_6_7",
            "elias_by_colon_witness_4_5_11",
            "ulrich_claim_4_6_7"
        ]
    );
}

#[test]
fn literals_round_trip() {
    for case in cases() {
        let gens = parse_semigroup(&case.semigroup).unwrap();
        assert_eq!(parse_semigroup(&format_semigroup(&gens)).unwrap(), gens);
        let ring = ring_from_literal(&case.semigroup).unwrap();
        for literal in case.ideals.values() {
            let ideal: FractionalIdeal = ring.ideal(&parse_ideal(literal).unwrap()).unwrap();
            let printed = format_ideal(&ideal.minimal_generators());
            let again = ring.ideal(&parse_ideal(&printed).unwrap()).unwrap();
            assert_eq!(
                again.normal_form(),
                ideal.normal_form(),
                "{literal} -> {printed}"
            );
            assert_eq!(format_ideal(&again.minimal_generators()), printed);
        }
    }
}
