//! Generalized complex Hermite polynomials `G_ν^{m,n}(z, z*|ξ)`.
//!
//! These are the polynomial parts of the Landau-level eigenfunctions of the
//! magnetic Schrödinger operator with potential `S(z) = νz + ξ`. The crate
//! builds them by five independent routes, checks the ladder-operator and
//! eigenvalue identities exactly over Gaussian rationals, and computes
//! their weighted inner products in closed form and by quadrature.
//!
//! ```
//! use gchp::{gchp_series, BiPoly, Exact, Params};
//!
//! let params = Params::<Exact>::rational(1, 1, (2, 1), (0, 1)).unwrap();
//! let g = gchp_series(2, 2, &params);
//! assert_eq!(g, BiPoly::from_int_rows(&[&[2, 0, 0], &[-4, -4, 0], &[1, 2, 1]]));
//! ```

pub mod cli;
pub mod error;
pub mod routes;
pub mod identities;
pub mod inner;
pub mod params;
pub mod poly;
pub mod quadrature;
pub mod scalar;
pub mod special;
pub mod verify;
pub mod weighted;

pub use error::{Error, Result};
pub use routes::{
    complex_hermite, dattoli_h, gchp, gchp_hermite_sum, gchp_hermite_sum_any, gchp_operator,
    gchp_partials, gchp_recursion, gchp_recursion_ordered, gchp_rodrigues, gchp_series,
    genfun_coefficients, hermite_number, GchpCache, GchpKey, Partials, RecursionOrder, Route,
};
pub use params::Params;
pub use poly::{AnyPoly, BiPoly};
pub use scalar::{Coefficient, Exact, Float, Mode, Ring, Scalar};
pub use weighted::{
    apply_a, apply_a_star, apply_l, eigen_residual, excited_state, ground_state, GaussExponent,
    WeightedPoly,
};
