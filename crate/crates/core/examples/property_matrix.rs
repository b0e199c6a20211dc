//! The property matrix against the shipped expectation table, with fewer
//! trials than the full check.
//!
//! `cargo run --release --example property_matrix -- 100`

use rpqlab::lab::{run_matrix, GenParams};

fn main() {
    let trials = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    let report = run_matrix(&GenParams { trials, ..GenParams::default() });
    print!("{}", report.table());
    for m in &report.mismatches {
        println!("{m}");
    }
    println!("{} cells in {:?}, passed: {}", report.reports.len(), report.elapsed, report.passed());
}
