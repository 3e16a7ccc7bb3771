//! The weighted polynomials G^{m,n} e^{-nu|z|^2/2 - ...} are eigenfunctions
//! of the magnetic Laplacian with eigenvalue nu (n + 1/2), independent of m. The residual
//! L f - lambda f is computed symbolically, so "zero" here means exactly zero.

use gchp::weighted::{apply_l_direct, excited_state};
use gchp::{eigen_residual, Exact, Params, Ring, Scalar};

fn main() -> gchp::Result<()> {
    let p = Params::<Exact>::rational(1, 2, (1, 1), (-3, 2))?;
    println!("{}", p.label());
    for n in 0..=4 {
        let mut zero = 0;
        for m in 0..=4 {
            if eigen_residual(&p, m, n)?.is_zero() {
                zero += 1;
            }
        }
        println!("  level n={n}, eigenvalue {}: {zero}/5 states with zero residual", p.nu().div_int(2) * Exact::from_int(2 * n as i64 + 1));
    }

    let f = excited_state(&p, 2, 1);
    let lf = apply_l_direct(&p, &f);
    let ratio = lf.poly.coeff(2, 1) * Scalar::inv(&f.poly.coeff(2, 1)).expect("leading coefficient is 1");
    println!("  eigenvalue read off G^{{2,1}}: {ratio}, expected 3/4");
    Ok(())
}
