//! Coefficient matrices of G^{m,m} at nu = 1, xi = 2 and their split into
//! shifted complex Hermite diagonals.

use gchp::identities::{diagonal_decomposition, matrix_of};
use gchp::{complex_hermite, gchp_series, Exact, Params};

fn main() -> gchp::Result<()> {
    let p = Params::<Exact>::rational(1, 1, (2, 1), (0, 1))?;
    for m in 1..=3 {
        println!("G^{{{m},{m}}} (rows: z^j, columns: z*^k)");
        println!("{}", matrix_of(&gchp_series(m, m, &p)));
        println!("H^{{{m},{m}}}");
        println!("{}", matrix_of(&complex_hermite::<Exact>(m, m)));
    }

    println!("diagonals of G^{{3,3}}:");
    for term in diagonal_decomposition(3, &p)? {
        println!("  offset {}: {} * H^{{3,{}}}", term.offset, term.scale, term.k);
    }
    Ok(())
}
