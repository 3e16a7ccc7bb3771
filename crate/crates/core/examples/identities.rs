//! Sum identities connecting G^{m,n} to shifted complex Hermite and
//! Laguerre polynomials. Each case reports the identity as printed and in
//! corrected form.

use gchp::identities::{verify_laguerre_identities, verify_shifted_hermite_sum, CaseCheck};
use gchp::{Exact, Params};

fn show(label: &str, c: &CaseCheck) {
    println!(
        "  {label:<24} {:<9} printed residual {:.2e}, corrected {:.2e}",
        c.status().to_string(),
        c.printed_residual,
        c.corrected_residual
    );
}

fn main() -> gchp::Result<()> {
    let p = Params::<Exact>::rational(1, 4, (0, 1), (-1, 1))?;
    println!("shifted Hermite sum, {}", p.label());
    for (m, n) in [(0, 2), (1, 1), (2, 2), (3, 2)] {
        show(&format!("({m},{n})"), &verify_shifted_hermite_sum(m, n, &p));
    }

    println!("Laguerre identities at (3,2)");
    for (which, c) in verify_laguerre_identities(3, 2, &p) {
        show(which.name(), &c);
    }
    Ok(())
}
