use std::time::{Duration, Instant};

use hopf_core::analysis::{example_hypothesis_check, Family, HypothesisStatus};
use hopf_core::Conductor;

fn run(family: Family, n: usize, m: usize) -> hopf_core::analysis::HypothesisReport {
    let start = Instant::now();
    let report = example_hypothesis_check(family, n, m, &Conductor::new(4).unwrap()).unwrap();
    assert!(start.elapsed() < Duration::from_secs(10));
    report
}

#[test]
fn alternating_family_at_13_9_passes() {
    let r = run(Family::AlternatingTwist, 13, 9);
    assert!(r.all_established(), "{:?}", r.failures().collect::<Vec<_>>());
    assert!(r.lines.iter().any(|l| l.name.starts_with("n − m ≥ 4") && l.status == HypothesisStatus::Pass));
}

#[test]
fn symmetric_family_at_14_9_passes_including_the_second_branch() {
    let r = run(Family::SymmetricTwist, 14, 9);
    assert!(r.all_established());
    assert!(r.lines.iter().any(|l| l.name.starts_with("n − m ≥ 5") && l.status == HypothesisStatus::Pass));
}

#[test]
fn symmetric_family_at_12_9_skips_the_second_branch() {
    let r = run(Family::SymmetricTwist, 12, 9);
    assert!(r.all_established());
    assert!(r.lines.iter().any(|l| matches!(l.status, HypothesisStatus::NotApplicable(_))));
}

#[test]
fn equal_parameters_leave_no_room_for_m() {
    for family in [Family::AlternatingTwist, Family::SymmetricTwist] {
        let r = run(family, 9, 9);
        assert!(!r.all_established());
        assert!(r.failures().any(|l| l.name.contains("M non-abelian")));
    }
}

#[test]
fn parameters_below_the_range_are_rejected() {
    let k = Conductor::new(4).unwrap();
    assert!(example_hypothesis_check(Family::AlternatingTwist, 13, 8, &k).is_err());
    assert!(example_hypothesis_check(Family::SymmetricTwist, 8, 9, &k).is_err());
}
