//! One pass/fail line per acceptance criterion; exits nonzero on any failure.

use groupring::verify::{run, VerifyOptions, CRITERIA};
use std::process::ExitCode;

fn main() -> ExitCode {
    let opts = VerifyOptions::default();
    let mut failed = 0;
    for (id, _, _) in CRITERIA {
        let r = run(id, &opts);
        println!("{}", r.summary_line());
        for row in r.rows.iter().filter(|row| !row.ok) {
            println!("    failed: {} => {}", row.claim, row.computed);
        }
        if !r.passed() {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
