//! Runs the full verification suite at a small degree and prints the report.

use gchp::verify::{cmd_verify, VerifyOptions};

fn main() -> gchp::Result<()> {
    let report = cmd_verify(&VerifyOptions::new(4))?;
    for c in &report.checks {
        println!("{:<40} {}", c.name, c.status);
    }
    for e in &report.errata {
        println!("erratum {}: {}", e.id, e.description);
    }
    println!("passed: {} in {} ms", report.passed, report.elapsed_ms);
    Ok(())
}
