//! Acceptance suite: every cross-module criterion at its stated scale and
//! tolerance, one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use symq::checks::{self, SuiteConfig};

fn run(criterion: u32, report: checks::CheckReport) {
    println!(
        "criterion {criterion} ({}): {} — {}",
        report.name,
        if report.passed { "PASS" } else { "FAIL" },
        report.detail
    );
    assert!(report.passed, "criterion {criterion} failed: {}", report.detail);
}

#[test]
fn criterion_1_multipartite_counts() {
    run(1, checks::check_multipartite_counts(&SuiteConfig::default()));
}

#[test]
fn criterion_2_bell_equivalence() {
    run(2, checks::check_bell_equivalence(&SuiteConfig::default()));
}

#[test]
fn criterion_3_euler_recursion() {
    let started = std::time::Instant::now();
    run(3, checks::check_euler_recursion(&SuiteConfig::default()));
    assert!(
        started.elapsed() < std::time::Duration::from_secs(5),
        "criterion 3 exceeded its 5 s budget: {:?}",
        started.elapsed()
    );
}

#[test]
fn criterion_4_spectral_identities() {
    run(4, checks::check_spectral_identities(&SuiteConfig::default()));
}

#[test]
fn criterion_5_classical_lambda() {
    run(5, checks::check_classical_lambda(&SuiteConfig::default()));
}

#[test]
fn criterion_6_deformed_ladder() {
    let started = std::time::Instant::now();
    run(6, checks::check_deformed_ladder(&SuiteConfig::default()));
    assert!(
        started.elapsed() < std::time::Duration::from_secs(300),
        "criterion 6 exceeded its 5 min budget: {:?}",
        started.elapsed()
    );
}

#[test]
fn criterion_7_vertex() {
    run(7, checks::check_vertex(&SuiteConfig::default()));
}

#[test]
fn criterion_8_string_spectrum() {
    let started = std::time::Instant::now();
    run(8, checks::check_string_spectrum(&SuiteConfig::default()));
    assert!(
        started.elapsed() < std::time::Duration::from_secs(10),
        "criterion 8 exceeded its 10 s budget: {:?}",
        started.elapsed()
    );
}

#[test]
fn criterion_9_negative_control() {
    run(9, checks::check_sentinel(&SuiteConfig::default()));
}

#[test]
fn criterion_1_runtime_budget() {
    let started = std::time::Instant::now();
    let rep = checks::check_multipartite_counts(&SuiteConfig::default());
    assert!(rep.passed);
    assert!(
        started.elapsed() < std::time::Duration::from_secs(30),
        "criterion 1 exceeded its 30 s budget: {:?}",
        started.elapsed()
    );
}
