//! Prints one line per acceptance criterion and exits nonzero if any fails.
//! Runs without the libtest harness so every criterion reports even when an
//! earlier one fails.

use std::process::ExitCode;
use std::time::Instant;

use orbital_criteria::{corrected_shift_table, criteria};

fn main() -> ExitCode {
    let all = criteria();
    let mut failed = 0;
    for c in &all {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => {
                Err(format!("{detail}; took {elapsed:.2?} > {:?}", c.budget))
            }
            other => other,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += usize::from(outcome.is_err());
        println!(
            "criterion {} {status} {} [{elapsed:.2?}]: {detail}",
            c.id, c.name
        );
    }
    println!("{} of {} criteria pass", all.len() - failed, all.len());
    let supplement = corrected_shift_table();
    match &supplement {
        Ok(d) => println!("supplement PASS shift determinant with sign (-1)^(rs): {d}"),
        Err(d) => println!("supplement FAIL shift determinant with sign (-1)^(rs): {d}"),
    }
    if failed == 0 && supplement.is_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
