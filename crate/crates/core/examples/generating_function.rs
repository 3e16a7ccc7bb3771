//! Taylor coefficients of exp(s z + t w - s t) reproduce G^{m,n}.

use gchp::identities::matrix_of;
use gchp::{genfun_coefficients, gchp_series, Exact, Params};

fn main() -> gchp::Result<()> {
    let p = Params::<Exact>::rational(3, 2, (1, 2), (2, 1))?;
    let table = genfun_coefficients(&p, 6, 6)?;
    let mut mismatches = 0;
    for (m, row) in table.iter().enumerate() {
        for (n, g) in row.iter().enumerate() {
            if *g != gchp_series(m, n, &p) {
                mismatches += 1;
            }
        }
    }
    println!("{}: 7x7 coefficient table, {mismatches} mismatches", p.label());
    println!("m! n! [s^2 t^1] as a matrix in z, z*:\n{}", matrix_of(&table[2][1]));
    Ok(())
}
