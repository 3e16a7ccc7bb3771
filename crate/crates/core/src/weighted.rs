//! Exact calculus on functions `P(z, z*) · exp(a·zz* + b·z + c·z*)`.
//!
//! The class is closed under `∂/∂z`, `∂/∂z*` and multiplication by
//! polynomials, so the ladder operators `A = ∂/∂z* + S/2`,
//! `A* = -∂/∂z + S*/2` and the magnetic Schrödinger operator `L` act on it
//! without any numerical differentiation. Eigenvalue statements become
//! polynomial identities.

use crate::error::{Error, Result};
use crate::params::Params;
use crate::poly::BiPoly;
use crate::scalar::{Mode, Scalar};

/// Exponent `a·zz* + b·z + c·z*`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussExponent<S> {
    pub a: S,
    pub b: S,
    pub c: S,
}

impl<S: Scalar> GaussExponent<S> {
    pub fn zero() -> Self {
        GaussExponent {
            a: S::zero(),
            b: S::zero(),
            c: S::zero(),
        }
    }

    /// `-½ z* S(z) = -(ν/2) zz* - (ξ/2) z*`, the ground-state exponent.
    pub fn ground_state(params: &Params<S>) -> Self {
        GaussExponent {
            a: -params.nu().div_int(2),
            b: S::zero(),
            c: -params.xi().div_int(2),
        }
    }

    /// `-ν zz* - (ξ*/2) z`, the weight differentiated by the Rodrigues formula.
    pub fn rodrigues(params: &Params<S>) -> Self {
        GaussExponent {
            a: -params.nu().clone(),
            b: -params.half_xi_conj(),
            c: S::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    fn render(&self) -> String {
        format!(
            "{}·zz* + {}·z + {}·z*",
            self.a.render(),
            self.b.render(),
            self.c.render()
        )
    }
}

impl<S: Scalar> std::ops::Add for &GaussExponent<S> {
    type Output = GaussExponent<S>;
    fn add(self, rhs: Self) -> GaussExponent<S> {
        GaussExponent {
            a: self.a.clone() + rhs.a.clone(),
            b: self.b.clone() + rhs.b.clone(),
            c: self.c.clone() + rhs.c.clone(),
        }
    }
}

impl<S: Scalar> std::ops::Neg for &GaussExponent<S> {
    type Output = GaussExponent<S>;
    fn neg(self) -> GaussExponent<S> {
        GaussExponent {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedPoly<S> {
    pub poly: BiPoly<S>,
    pub exponent: GaussExponent<S>,
}

impl<S: Scalar> WeightedPoly<S> {
    pub fn new(poly: BiPoly<S>, exponent: GaussExponent<S>) -> Self {
        WeightedPoly { poly, exponent }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `∂E/∂z = a z* + b`.
    fn exponent_dz(&self) -> BiPoly<S> {
        &BiPoly::monomial(0, 1, self.exponent.a.clone())
            + &BiPoly::constant(self.exponent.b.clone())
    }

    /// `∂E/∂z* = a z + c`.
    fn exponent_dzbar(&self) -> BiPoly<S> {
        &BiPoly::monomial(1, 0, self.exponent.a.clone())
            + &BiPoly::constant(self.exponent.c.clone())
    }

    pub fn d_dz(&self) -> Self {
        let poly = &self.poly.d_dz() + &(&self.poly * &self.exponent_dz());
        WeightedPoly::new(poly, self.exponent.clone())
    }

    pub fn d_dzbar(&self) -> Self {
        let poly = &self.poly.d_dzbar() + &(&self.poly * &self.exponent_dzbar());
        WeightedPoly::new(poly, self.exponent.clone())
    }

    pub fn mul_poly(&self, p: &BiPoly<S>) -> Self {
        WeightedPoly::new(&self.poly * p, self.exponent.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        WeightedPoly::new(self.poly.scale(c), self.exponent.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_exponent(other)?;
        Ok(WeightedPoly::new(
            &self.poly + &other.poly,
            self.exponent.clone(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_exponent(other)?;
        Ok(WeightedPoly::new(
            &self.poly - &other.poly,
            self.exponent.clone(),
        ))
    }

    fn same_exponent(&self, other: &Self) -> Result<()> {
        if self.exponent == other.exponent {
            Ok(())
        } else {
            Err(Error::ExponentMismatch(format!(
                "{} vs {}",
                self.exponent.render(),
                other.exponent.render()
            )))
        }
    }

    /// Multiply by `exp(e)`; exponents add.
    pub fn times_exp(&self, e: &GaussExponent<S>) -> Self {
        WeightedPoly::new(self.poly.clone(), &self.exponent + e)
    }

    /// The bare polynomial, provided the exponent is identically zero.
    pub fn into_polynomial(self) -> Result<BiPoly<S>> {
        if self.exponent.is_zero() {
            Ok(self.poly)
        } else {
            Err(Error::ExponentMismatch(format!(
                "residual exponent {}",
                self.exponent.render()
            )))
        }
    }
}

/// `ψ^m = z^m exp(-½ z* S(z))`.
pub fn ground_state<S: Scalar>(params: &Params<S>, m: usize) -> WeightedPoly<S> {
    WeightedPoly::new(
        BiPoly::monomial(m, 0, S::one()),
        GaussExponent::ground_state(params),
    )
}

/// `A f = ∂f/∂z* + (S/2) f`.
pub fn apply_a<S: Scalar>(params: &Params<S>, f: &WeightedPoly<S>) -> WeightedPoly<S> {
    let half_s = params.s_poly().scale(&S::from_ratio(1, 2));
    let d = f.d_dzbar();
    WeightedPoly::new(&d.poly + &(&f.poly * &half_s), f.exponent.clone())
}

/// `A* f = -∂f/∂z + (S*/2) f`.
pub fn apply_a_star<S: Scalar>(params: &Params<S>, f: &WeightedPoly<S>) -> WeightedPoly<S> {
    let half_s_conj = params.s_conj_poly().scale(&S::from_ratio(1, 2));
    let d = f.d_dz();
    WeightedPoly::new(&(&f.poly * &half_s_conj) - &d.poly, f.exponent.clone())
}

/// `L f = -¼ { 4 ∂²f/∂z∂z* + 2 (S ∂f/∂z - S* ∂f/∂z*) - |S|² f }`.
pub fn apply_l_direct<S: Scalar>(params: &Params<S>, f: &WeightedPoly<S>) -> WeightedPoly<S> {
    let s = params.s_poly();
    let s_conj = params.s_conj_poly();
    let dz = f.d_dz();
    let dzbar = f.d_dzbar();
    let dzdzbar = dzbar.d_dz();
    let inner = &(&(&dzdzbar.poly.scale(&S::from_int(4))
        + &(&(&s * &dz.poly) - &(&s_conj * &dzbar.poly)).scale(&S::from_int(2)))
        - &(&(&s * &s_conj) * &f.poly));
    WeightedPoly::new(inner.scale(&S::from_ratio(-1, 4)), f.exponent.clone())
}

/// `L f = A A* f - (ν/2) f`.
pub fn apply_l_ladder<S: Scalar>(params: &Params<S>, f: &WeightedPoly<S>) -> WeightedPoly<S> {
    let aa = apply_a(params, &apply_a_star(params, f));
    WeightedPoly::new(
        &aa.poly - &f.poly.scale(&params.nu().div_int(2)),
        f.exponent.clone(),
    )
}

/// Magnetic Schrödinger operator. In exact mode the direct formula and the
/// ladder factorization are both evaluated and must agree exactly.
pub fn apply_l<S: Scalar>(params: &Params<S>, f: &WeightedPoly<S>) -> Result<WeightedPoly<S>> {
    let direct = apply_l_direct(params, f);
    if S::MODE == Mode::Exact {
        let ladder = apply_l_ladder(params, f);
        if ladder != direct {
            return Err(Error::OperatorDisagreement(format!(
                "direct and ladder forms of L differ on a {}x{} polynomial",
                f.poly.deg_z() + 1,
                f.poly.deg_zbar() + 1
            )));
        }
    }
    Ok(direct)
}

/// `g^{m,n} = (A*)^n ψ^m`.
pub fn excited_state<S: Scalar>(params: &Params<S>, m: usize, n: usize) -> WeightedPoly<S> {
    (0..n).fold(ground_state(params, m), |f, _| apply_a_star(params, &f))
}

/// Polynomial part of `L g^{m,n} - ν(n + ½) g^{m,n}`; identically zero.
pub fn eigen_residual<S: Scalar>(params: &Params<S>, m: usize, n: usize) -> Result<BiPoly<S>> {
    let g = excited_state(params, m, n);
    let lg = apply_l(params, &g)?;
    let level = params.nu().clone() * S::from_ratio(2 * n as i64 + 1, 2);
    Ok(lg.sub(&g.scale(&level))?.poly)
}
