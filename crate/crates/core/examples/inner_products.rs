//! Weighted inner products three ways: exact moment expansion, closed-form
//! moments through 1F1, and tensor Gauss-Hermite quadrature.

use gchp::inner::{cross_inner, gchp_norm_sq, inner_product_report, weak_orthogonality_check};
use gchp::{gchp_series, Exact, Params};

fn main() -> gchp::Result<()> {
    let p = Params::<Exact>::rational(1, 1, (2, 1), (0, 1))?;

    let report = inner_product_report(&gchp_series(1, 0, &p), &gchp_series(0, 0, &p), &p, None)?;
    println!("<G^(1,0), G^(0,0)> = {} * pi e", report.exact_reduced);
    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());

    println!("norms ||G^(m,n)||^2 at nu=1, xi=2:");
    for m in 0..=3 {
        let row: Vec<String> = (0..=3).map(|n| format!("{:10.3}", gchp_norm_sq(m, n, &p).unwrap())).collect();
        println!("  m={m}: {}", row.join(" "));
    }

    // different second index: orthogonal for any xi
    println!("weak orthogonality <G^(2,1), G^(3,2)>: {:.1e}", weak_orthogonality_check(2, 1, 3, 2, &p)?);
    // same second index, different first: only orthogonal when xi = 0
    println!("<G^(2,0), G^(1,0)> = {:.6}", cross_inner(2, 0, &p)?);
    Ok(())
}
