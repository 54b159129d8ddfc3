//! Run the whole verification suite, print a summary and every record that
//! did not pass, and optionally write the JSON report.
//!
//! cargo run --release --example verification_report -- [report.json]

use resokit::verify::{run_suite, Status, Subject, SuiteOptions};

fn main() {
    let started = std::time::Instant::now();
    let suite = run_suite(&Subject::all(), &SuiteOptions::default());
    for r in &suite.reports {
        let passed = r.statuses().filter(|s| *s == Status::Pass).count();
        println!("{:<14} {:>3}/{:<3} records pass", r.subject, passed, r.record_count());
        for c in r.checks.iter().filter(|c| c.status != Status::Pass) {
            println!("  {:?} {} residual={:e} tol={:e} {}", c.status, c.name, c.max_residual, c.tolerance, c.error.as_deref().unwrap_or(""));
        }
        for o in r.oracles.iter().filter(|o| o.status != Status::Pass) {
            println!("  {:?} {} rel_diff={:e} tol={:e} {}", o.status, o.name, o.max_rel_diff, o.tolerance, o.error.as_deref().unwrap_or(""));
        }
        for b in r.bounds.iter().filter(|b| b.status != Status::Pass) {
            println!("  {:?} {} value={:e} threshold={:e} {}", b.status, b.name, b.value, b.threshold, b.error.as_deref().unwrap_or(""));
        }
    }
    let s = suite.summary;
    println!(
        "{} records: {} passed, {} failed, {} errored ({:.1} s)",
        s.records,
        s.passed,
        s.failed,
        s.errored,
        started.elapsed().as_secs_f64()
    );
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, suite.to_json()).expect("write report");
        println!("report written to {path}");
    }
}
