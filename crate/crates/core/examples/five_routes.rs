//! Builds G^{m,n} by every route and checks they agree coefficient for
//! coefficient.
//!
//! ```bash
//! cargo run --example five_routes
//! ```

use gchp::{gchp, gchp_series, Error, Exact, Params, Route};

fn main() -> gchp::Result<()> {
    let sets = [
        Params::<Exact>::rational(1, 1, (2, 1), (0, 1))?,
        Params::<Exact>::rational(1, 4, (0, 1), (-1, 1))?,
        Params::<Exact>::rational(2, 1, (1, 1), (1, 1))?,
    ];
    for p in &sets {
        println!("{}", p.label());
        for (m, n) in [(1, 1), (3, 2), (5, 5)] {
            let reference = gchp_series(m, n, p);
            let mut line = format!("  G^{{{m},{n}}}:");
            for route in Route::ALL {
                let verdict = match gchp(m, n, p, route) {
                    Ok(g) if g == reference => "agrees",
                    Ok(_) => "DIFFERS",
                    // nu = 2 has no rational square root
                    Err(Error::IrrationalSqrt(_)) => "skipped",
                    Err(e) => return Err(e),
                };
                line.push_str(&format!(" {route}={verdict}"));
            }
            println!("{line}");
        }
    }

    // float mode runs every route, including hermite-sum at nu = 2
    let pf = sets[2].to_float();
    let a = gchp(4, 3, &pf, Route::Series)?;
    let b = gchp(4, 3, &pf, Route::HermiteSum)?;
    println!("float hermite-sum vs series at nu=2: max diff {:.2e}", a.max_abs_diff(&b));
    Ok(())
}
