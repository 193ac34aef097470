//! Runs the whole verification suite, as `frobweight verify-paper` does.

use frobweight::corpus::Corpus;
use frobweight::suite::{run_suite, SuiteOptions};
use frobweight::Caps;

fn main() -> frobweight::Result<()> {
    let rep = run_suite(
        &Corpus::default(),
        &SuiteOptions::default(),
        &Caps::default(),
    )?;
    for c in &rep.checks {
        println!(
            "{} [{}] {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.id,
            c.title
        );
    }
    println!("{} scenario reports", rep.scenarios.len());
    Ok(())
}
