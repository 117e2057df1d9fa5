//! The full cross-module identity suite, with the negative control.
//!
//! Run with: cargo run --release --example identity_suite

use symq::checks::{self, SuiteConfig};

fn main() {
    let cfg = SuiteConfig::default();
    let started = std::time::Instant::now();
    let mut all = true;
    for rep in checks::run_suite(&cfg) {
        println!(
            "[{:>8.2?}] {:<22} {}  {}",
            started.elapsed(),
            rep.name,
            if rep.passed { "ok " } else { "FAIL" },
            rep.detail
        );
        all &= rep.passed;
    }
    let sentinel = checks::check_sentinel(&cfg);
    println!(
        "[{:>8.2?}] {:<22} {}  {}",
        started.elapsed(),
        sentinel.name,
        if sentinel.passed { "ok " } else { "FAIL" },
        sentinel.detail
    );
    all &= sentinel.passed;
    std::process::exit(if all { 0 } else { 2 });
}
