//! Point values of G^{m,n} from the series, from a Laguerre polynomial and
//! from Kummer's 1F1, plus the effect of the misprinted 1F1 prefactor.

use gchp::special::{gchp_via_1f1, gchp_via_1f1_with, gchp_via_laguerre, Prefactor};
use gchp::{gchp_series, Exact, Params};
use num::complex::Complex64;

fn main() -> gchp::Result<()> {
    let exact = Params::<Exact>::rational(2, 1, (1, 1), (1, 1))?;
    let p = exact.to_float();
    let z = Complex64::new(0.7, -0.4);
    println!("{} at z = {z}", p.label());
    for (m, n) in [(0, 3), (2, 1), (4, 4), (6, 2)] {
        let series = gchp_series(m, n, &exact).to_float().eval(&z);
        println!(
            "  G^{{{m},{n}}}: series {series:.10}  laguerre {:.10}  1F1 {:.10}",
            gchp_via_laguerre(m, n, &p, &z),
            gchp_via_1f1(m, n, &p, &z)
        );
    }

    let good = gchp_via_1f1(2, 1, &p, &z);
    let printed = gchp_via_1f1_with(2, 1, &p, &z, Prefactor::AsPrinted);
    println!("min!-prefactor variant at (2,1) is off by a factor {:.6}", (good / printed).re);
    Ok(())
}
