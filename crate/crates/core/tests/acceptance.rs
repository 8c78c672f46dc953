//! Runs every acceptance criterion on the standard grid and prints one
//! pass/fail line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use qbch::oracle::acceptance::{run_criterion, Grid, Report, CRITERIA};

fn main() -> ExitCode {
    let grid = Grid::standard();
    let mut failed = false;
    for k in 1..=CRITERIA.len() as u32 {
        let start = Instant::now();
        let report = Report { checks: run_criterion(&grid, k) };
        for c in report.failures() {
            println!("    {c}");
        }
        let summaries = report.summaries();
        match summaries.as_slice() {
            [s] => {
                failed |= !s.passed();
                println!("{s} in {:.1}s", start.elapsed().as_secs_f64());
            }
            _ => {
                failed = true;
                println!("criterion {k} ({}): FAIL [no checks ran]", CRITERIA[k as usize - 1]);
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
