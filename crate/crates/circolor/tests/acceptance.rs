//! Acceptance suite: one test per verification criterion. Each prints its
//! pass/fail line (run with `--nocapture` to see them all) and asserts the
//! criterion held within its time budget.

use circolor::verification::{
    criterion_complete, criterion_cycles, criterion_forced_relaxations, criterion_g5,
    criterion_h_family, criterion_outerplanar_corpus, criterion_paths, criterion_reductions,
    criterion_semantics_ordering, criterion_witnesses, CriterionReport,
};

fn assert_criterion(report: CriterionReport) {
    println!("{}", report.summary_line());
    for detail in &report.details {
        println!("    {detail}");
    }
    assert!(
        report.passed,
        "{} failed:\n{}",
        report.name,
        report.details.join("\n")
    );
}

#[test]
fn criterion_01_path_closed_forms() {
    assert_criterion(criterion_paths());
}

#[test]
fn criterion_02_cycle_closed_forms() {
    assert_criterion(criterion_cycles());
}

#[test]
fn criterion_03_complete_closed_forms() {
    assert_criterion(criterion_complete());
}

#[test]
fn criterion_04_witness_validity() {
    assert_criterion(criterion_witnesses());
}

#[test]
fn criterion_05_g5_trichotomy() {
    assert_criterion(criterion_g5());
}

#[test]
fn criterion_06_h_family_thresholds() {
    assert_criterion(criterion_h_family());
}

#[test]
fn criterion_07_forced_relaxations() {
    assert_criterion(criterion_forced_relaxations());
}

#[test]
fn criterion_08_reduction_equivalences() {
    assert_criterion(criterion_reductions());
}

#[test]
fn criterion_09_outerplanar_corpus() {
    assert_criterion(criterion_outerplanar_corpus());
}

#[test]
fn criterion_10_semantics_ordering() {
    assert_criterion(criterion_semantics_ordering());
}
