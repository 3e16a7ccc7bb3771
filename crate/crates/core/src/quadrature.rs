//! Tensor Gauss–Hermite quadrature against the Gaussian weight `ω`.
//!
//! Completing the square, `ω(z) = e^{x} e^{-ν|z + c|²}` with `c = ξ/(2ν)`
//! and `x = |ξ|²/(4ν)`. Substituting `z = -c + u/√ν` leaves the standard
//! weight `e^{-|u|²}` on the plane, which splits into two one-dimensional
//! Hermite weights.

use std::f64::consts::PI;

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::params::Params;
use crate::scalar::Scalar;

const NEWTON_TOL: f64 = 3e-14;
const NEWTON_MAX_ITER: usize = 100;

/// Nodes and weights of the `n`-point rule for `∫ f(x) e^{-x²} dx`.
///
/// Roots of `H_n` are found by Newton's method on the orthonormal
/// recurrence, with the usual asymptotic initial guesses; nodes come out in
/// decreasing order.
pub fn gauss_hermite(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::QuadratureOrder {
            order: 0,
            degree: 0,
        });
    }
    let nf = n as f64;
    let pim4 = PI.powf(-0.25);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let mut z = 0.0f64;
    for i in 0..n.div_ceil(2) {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut converged = false;
        let mut pp = 0.0;
        for _ in 0..NEWTON_MAX_ITER {
            let (mut p1, mut p2) = (pim4, 0.0);
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let step = p1 / pp;
            z -= step;
            if step.abs() <= NEWTON_TOL {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence(NEWTON_MAX_ITER));
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    Ok((x, w))
}

/// A recentred, rescaled product rule for integrals against `ω`.
#[derive(Clone, Debug)]
pub struct QuadratureGrid {
    pub order: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// `-ξ/(2ν)`, the centre of the Gaussian.
    pub shift: Complex64,
    /// `1/√ν`.
    pub scale: f64,
    /// `e^{|ξ|²/(4ν)}/ν`, the Jacobian and the constant from completing the square.
    pub prefactor: f64,
}

impl QuadratureGrid {
    pub fn new<S: Scalar>(order: usize, params: &Params<S>) -> Result<Self> {
        let (nodes, weights) = gauss_hermite(order)?;
        let p = params.to_float();
        let nu = p.nu().re;
        Ok(QuadratureGrid {
            order,
            nodes,
            weights,
            shift: -p.xi() / (2.0 * nu),
            scale: 1.0 / nu.sqrt(),
            prefactor: p.kummer_arg().re.exp() / nu,
        })
    }

    /// Total degree in `(Re z, Im z)` integrated exactly.
    pub fn exact_degree(&self) -> usize {
        2 * self.order - 1
    }

    /// `∫ f(z) ω(z) dλ(z)`.
    pub fn integrate(&self, f: impl Fn(Complex64) -> Complex64) -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        for (xs, ws) in self.nodes.iter().zip(&self.weights) {
            for (xt, wt) in self.nodes.iter().zip(&self.weights) {
                let z = self.shift + Complex64::new(*xs, *xt) * self.scale;
                sum += f(z) * (ws * wt);
            }
        }
        sum * self.prefactor
    }
}
