//! One PASS/FAIL line per acceptance criterion. WARN checks count as passing.

use std::process::ExitCode;

use vmrt_core::exec::Execution;
use vmrt_core::verify::{run_all, Status, CRITERIA};

fn main() -> ExitCode {
    let report = run_all(12, Execution::available());
    let mut ok = true;
    for &(k, name) in CRITERIA.iter() {
        let status = report.criterion_status(k);
        let pass = status != Status::Fail;
        ok &= pass;
        println!(
            "{} criterion {k} ({name}): {} checks, {} warn",
            if pass { "PASS" } else { "FAIL" },
            report.checks.iter().filter(|c| c.criterion == k).count(),
            report.count(k, Status::Warn)
        );
    }
    for c in report.checks.iter().filter(|c| c.status == Status::Fail) {
        println!("  failed [{}] {}: {}", c.criterion, c.subject, c.detail);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
