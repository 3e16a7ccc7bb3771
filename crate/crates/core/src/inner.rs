//! Inner products `⟨f, g⟩_ω = ∫ f(z) conj(g(z)) ω(z) dλ(z)` with the weight
//! `ω(z) = e^{-ν|z|² - Re(z ξ*)}`.
//!
//! Three independent methods are provided:
//!
//! * exact: shift the Gaussian to its centre `-c`, `c = ξ/(2ν)`, and expand
//!   monomials binomially. Every moment is `π e^{x}` (with `x = |ξ|²/(4ν)`)
//!   times a rational function of `ν, ξ, ξ*`, so the product is returned as
//!   that rational part plus the transcendental factor.
//! * moment: the closed form of each monomial moment through `₁F₁`.
//! * quadrature: a tensor Gauss–Hermite rule on the recentred Gaussian.

use std::f64::consts::PI;

use num::complex::Complex64;
use serde_json::json;

use crate::error::{Error, Result};
use crate::routes::gchp_series;
use crate::params::Params;
use crate::poly::BiPoly;
use crate::quadrature::QuadratureGrid;
use crate::scalar::{binomial, factorial, Mode, Scalar};
use crate::special::{hyp1f1, laguerre, HypergeometricArgs};

/// The weight `ω` attached to a parameter pair.
#[derive(Clone, Debug)]
pub struct Weight<S> {
    pub params: Params<S>,
}

impl<S: Scalar> Weight<S> {
    pub fn new(params: Params<S>) -> Self {
        Weight { params }
    }

    /// `ω(z) = e^{-ν|z|² - Re(z ξ*)}`.
    pub fn value(&self, z: Complex64) -> f64 {
        let p = self.params.to_float();
        (-p.nu().re * z.norm_sqr() - (z * p.xi().conj()).re).exp()
    }

    /// `∫ ω dλ = (π/ν) e^{|ξ|²/(4ν)}`.
    pub fn mass(&self) -> f64 {
        let p = self.params.to_float();
        PI / p.nu().re * p.kummer_arg().re.exp()
    }
}

pub fn weight_value<S: Scalar>(params: &Params<S>, z: Complex64) -> f64 {
    Weight::new(params.clone()).value(z)
}

/// `π e^{|ξ|²/(4ν)}`, the factor shared by every moment.
pub fn moment_factor<S: Scalar>(params: &Params<S>) -> f64 {
    PI * params.to_float().kummer_arg().re.exp()
}

/// A value `reduced · π e^{|ξ|²/(4ν)}` whose first factor is exact
/// whenever the scalars are.
#[derive(Clone, Debug, PartialEq)]
pub struct InnerValue<S> {
    pub reduced: S,
    pub factor: f64,
}

impl<S: Scalar> InnerValue<S> {
    pub fn value(&self) -> Complex64 {
        self.reduced.to_c64() * self.factor
    }
}

/// `ν^e` for a possibly negative exponent.
fn nu_pow<S: Scalar>(params: &Params<S>, e: i64) -> S {
    let p = params.nu().powu(e.unsigned_abs() as u32);
    if e >= 0 {
        p
    } else {
        p.inv().expect("nu > 0")
    }
}

/// Table of `∫ z^a z*^b ω / (π e^x)` for `a ≤ max_a`, `b ≤ max_b`.
fn reduced_moments<S: Scalar>(max_a: usize, max_b: usize, params: &Params<S>) -> Vec<Vec<S>> {
    let minus_c = -(params.xi().clone()
        * (params.nu().clone() * S::from_int(2))
            .inv()
            .expect("nu > 0"));
    let minus_cbar = minus_c.conj();
    let nu_inv = params.nu().inv().expect("nu > 0");
    let radial: Vec<S> = (0..=max_a.min(max_b) as u32)
        .map(|k| factorial::<S>(k) * nu_inv.powu(k + 1))
        .collect();
    let c_pows: Vec<S> = (0..=max_a as u32).map(|e| minus_c.powu(e)).collect();
    let cbar_pows: Vec<S> = (0..=max_b as u32).map(|e| minus_cbar.powu(e)).collect();
    (0..=max_a)
        .map(|a| {
            (0..=max_b)
                .map(|b| {
                    (0..=a.min(b)).fold(S::zero(), |acc, k| {
                        acc + binomial::<S>(a as u32, k as u32)
                            * binomial::<S>(b as u32, k as u32)
                            * c_pows[a - k].clone()
                            * cbar_pows[b - k].clone()
                            * radial[k].clone()
                    })
                })
                .collect()
        })
        .collect()
}

/// Exact `∫ z^a z*^b ω dλ`, from the binomial expansion about the centre.
pub fn monomial_moment_exact<S: Scalar>(a: usize, b: usize, params: &Params<S>) -> InnerValue<S> {
    let table = reduced_moments(a, b, params);
    InnerValue {
        reduced: table[a][b].clone(),
        factor: moment_factor(params),
    }
}

/// Closed-form moment
/// `∫ z^m z*^j ω = C_{m,j} · ₁F₁(1+max; 1+|m-j|; |ξ|²/(4ν))` with
/// `C_{m,j} = (-1)^{m+j} max! π / (ν^{max+1} 2^{|m-j|} |m-j|!) · ξ^{max-j} ξ*^{max-m}`
/// and `0⁰ = 1`.
pub fn monomial_moment<S: Scalar>(m: usize, j: usize, params: &Params<S>) -> Result<Complex64> {
    let p = params.to_float();
    let (nu, xi) = (p.nu().re, *p.xi());
    let hi = m.max(j);
    let gap = m.abs_diff(j);
    let sign = if (m + j).is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut c = sign * PI / nu.powi(hi as i32 + 1) / 2f64.powi(gap as i32);
    for k in 1..=hi {
        c *= k as f64;
    }
    for k in 1..=gap {
        c /= k as f64;
    }
    let shape = xi.powu((hi - j) as u32) * xi.conj().powu((hi - m) as u32);
    let f = hyp1f1(HypergeometricArgs::real(
        1.0 + hi as f64,
        1.0 + gap as f64,
        p.kummer_arg().re,
    )?)?;
    Ok(shape * f * c)
}

fn pairing<S: Scalar>(f: &BiPoly<S>, g: &BiPoly<S>) -> BiPoly<S> {
    f * &g.conj_poly()
}

/// `⟨f, g⟩_ω` by exact moment expansion.
pub fn inner_product_exact<S: Scalar>(
    f: &BiPoly<S>,
    g: &BiPoly<S>,
    params: &Params<S>,
) -> InnerValue<S> {
    let h = pairing(f, g);
    let table = reduced_moments(h.deg_z(), h.deg_zbar(), params);
    let reduced = h.terms().fold(S::zero(), |acc, (a, b, c)| {
        acc + c.clone() * table[a][b].clone()
    });
    InnerValue {
        reduced,
        factor: moment_factor(params),
    }
}

/// `⟨f, g⟩_ω` from the closed-form (`₁F₁`) monomial moments.
pub fn inner_product_moment<S: Scalar>(
    f: &BiPoly<S>,
    g: &BiPoly<S>,
    params: &Params<S>,
) -> Result<Complex64> {
    let h = pairing(f, g);
    let mut sum = Complex64::new(0.0, 0.0);
    for (a, b, c) in h.terms() {
        sum += c.to_c64() * monomial_moment(a, b, params)?;
    }
    Ok(sum)
}

/// Smallest order integrating `f·conj(g)` exactly.
pub fn min_quad_order<S: Scalar>(f: &BiPoly<S>, g: &BiPoly<S>) -> usize {
    (f.total_degree() + g.total_degree()) / 2 + 1
}

/// Default order: three points of margin over the minimum.
pub fn default_quad_order<S: Scalar>(f: &BiPoly<S>, g: &BiPoly<S>) -> usize {
    min_quad_order(f, g) + 3
}

/// `⟨f, g⟩_ω` by tensor Gauss–Hermite quadrature. `order = None` picks
/// [`default_quad_order`]; an explicit order below the exactness bound is an
/// error.
pub fn inner_product_quad<S: Scalar>(
    f: &BiPoly<S>,
    g: &BiPoly<S>,
    params: &Params<S>,
    order: Option<usize>,
) -> Result<Complex64> {
    let needed = min_quad_order(f, g);
    let order = order.unwrap_or_else(|| default_quad_order(f, g));
    if order < needed {
        return Err(Error::QuadratureOrder {
            order,
            degree: f.total_degree() + g.total_degree(),
        });
    }
    let grid = QuadratureGrid::new(order, params)?;
    let (ff, gf) = (f.to_float(), g.to_float());
    Ok(grid.integrate(|z| ff.eval(&z) * gf.eval(&z).conj()))
}

/// The three methods side by side.
#[derive(Clone, Debug)]
pub struct InnerProductReport {
    pub exact_value: Complex64,
    /// Rational part of the exact value, rendered in the input mode.
    pub exact_reduced: String,
    pub quad_value: Complex64,
    pub moment_value: Complex64,
    pub quad_order: usize,
    /// Largest pairwise difference, relative to `max(|a|, |b|, ‖f‖‖g‖)`.
    pub max_delta: f64,
}

/// `|a - b| / max(|a|, |b|, scale)`.
pub fn rel_diff(a: Complex64, b: Complex64, scale: f64) -> f64 {
    let d = (a - b).norm();
    if d == 0.0 {
        return 0.0;
    }
    d / a.norm().max(b.norm()).max(scale)
}

impl InnerProductReport {
    pub fn to_json(&self) -> serde_json::Value {
        let c = |z: Complex64| json!([z.re, z.im]);
        json!({
            "exact": c(self.exact_value),
            "exact_reduced": self.exact_reduced,
            "moment": c(self.moment_value),
            "quadrature": c(self.quad_value),
            "quad_order": self.quad_order,
            "max_delta": self.max_delta,
        })
    }
}

pub fn inner_product_report<S: Scalar>(
    f: &BiPoly<S>,
    g: &BiPoly<S>,
    params: &Params<S>,
    order: Option<usize>,
) -> Result<InnerProductReport> {
    let exact = inner_product_exact(f, g, params);
    let moment_value = inner_product_moment(f, g, params)?;
    let quad_order = order.unwrap_or_else(|| default_quad_order(f, g));
    let quad_value = inner_product_quad(f, g, params, Some(quad_order))?;
    let exact_value = exact.value();
    let scale = (inner_product_exact(f, f, params).value().norm()
        * inner_product_exact(g, g, params).value().norm())
    .sqrt();
    let max_delta = [
        rel_diff(exact_value, moment_value, scale),
        rel_diff(exact_value, quad_value, scale),
        rel_diff(moment_value, quad_value, scale),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    Ok(InnerProductReport {
        exact_value,
        exact_reduced: exact.reduced.render(),
        quad_value,
        moment_value,
        quad_order,
        max_delta,
    })
}

/// `‖G^{m,n}‖² = m! n! π ν^{n-m-1} ₁F₁(m+1; 1; |ξ|²/(4ν))`.
pub fn gchp_norm_sq<S: Scalar>(m: usize, n: usize, params: &Params<S>) -> Result<f64> {
    let p = params.to_float();
    let nu = p.nu().re;
    let f = hyp1f1(HypergeometricArgs::real(
        m as f64 + 1.0,
        1.0,
        p.kummer_arg().re,
    )?)?;
    let facts: f64 = (1..=m).chain(1..=n).map(|k| k as f64).product();
    Ok(facts * PI * nu.powi(n as i32 - m as i32 - 1) * f.re)
}

/// The same norm with exact rational part: Kummer's transformation turns
/// `₁F₁(m+1; 1; x)` into `e^x L_m(-x)`.
pub fn gchp_norm_sq_exact<S: Scalar>(m: usize, n: usize, params: &Params<S>) -> InnerValue<S> {
    let x = params.kummer_arg();
    let reduced = factorial::<S>(m as u32)
        * factorial::<S>(n as u32)
        * nu_pow(params, n as i64 - m as i64 - 1)
        * laguerre(m as u32, 0, &(-x));
    InnerValue {
        reduced,
        factor: moment_factor(params),
    }
}

/// `|⟨G^{m,n}, G^{j,k}⟩| / (‖G^{m,n}‖ ‖G^{j,k}‖)` for `n ≠ k`, computed
/// from exact moment expansions; exactly `0.0` in exact mode when the pair
/// is orthogonal.
pub fn weak_orthogonality_check<S: Scalar>(
    m: usize,
    n: usize,
    j: usize,
    k: usize,
    params: &Params<S>,
) -> Result<f64> {
    if n == k {
        return Err(Error::InvalidParams(format!(
            "second indices must differ, got n = k = {n}"
        )));
    }
    Ok(normalized_inner(m, n, j, k, params))
}

fn normalized_inner<S: Scalar>(m: usize, n: usize, j: usize, k: usize, params: &Params<S>) -> f64 {
    let f = gchp_series(m, n, params);
    let g = gchp_series(j, k, params);
    let fg = inner_product_exact(&f, &g, params).reduced;
    if fg.is_zero() {
        return 0.0;
    }
    let ff = inner_product_exact(&f, &f, params).reduced.abs();
    let gg = inner_product_exact(&g, &g, params).reduced.abs();
    fg.abs() / (ff * gg).sqrt()
}

/// `⟨G^{m,n}, G^{m-1,n}⟩ = 2 m! n! π ν^n / (ξ* ν^m) · (₁F₁(m;1;x) - ₁F₁(m+1;1;x))`,
/// and `0` when `ξ = 0`.
pub fn cross_inner<S: Scalar>(m: usize, n: usize, params: &Params<S>) -> Result<Complex64> {
    if m == 0 {
        return Err(Error::InvalidParams(
            "cross inner product needs m >= 1".into(),
        ));
    }
    if params.is_xi_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let p = params.to_float();
    let x = p.kummer_arg().re;
    let f_lo = hyp1f1(HypergeometricArgs::real(m as f64, 1.0, x)?)?;
    let f_hi = hyp1f1(HypergeometricArgs::real(m as f64 + 1.0, 1.0, x)?)?;
    let facts: f64 = (1..=m).chain(1..=n).map(|k| k as f64).product();
    let nu = p.nu().re;
    Ok((f_lo - f_hi) * (2.0 * facts * PI * nu.powi(n as i32 - m as i32)) / p.xi().conj())
}

/// Exact form of [`cross_inner`]: rational part
/// `2 m! n! ν^{n-m} / ξ* · (L_{m-1}(-x) - L_m(-x))`.
pub fn cross_inner_exact<S: Scalar>(
    m: usize,
    n: usize,
    params: &Params<S>,
) -> Result<InnerValue<S>> {
    if m == 0 {
        return Err(Error::InvalidParams(
            "cross inner product needs m >= 1".into(),
        ));
    }
    let factor = moment_factor(params);
    let Some(xi_conj_inv) = params.xi_conj().inv() else {
        return Ok(InnerValue {
            reduced: S::zero(),
            factor,
        });
    };
    let x = -params.kummer_arg();
    let reduced = S::from_int(2)
        * factorial::<S>(m as u32)
        * factorial::<S>(n as u32)
        * nu_pow(params, n as i64 - m as i64)
        * xi_conj_inv
        * (laguerre(m as u32 - 1, 0, &x) - laguerre(m as u32, 0, &x));
    Ok(InnerValue { reduced, factor })
}

/// Searches pairs `(m, n), (j, n)` with `m ≠ j` and all indices at most
/// `budget` for a nonzero inner product. Returns `true` if one is found,
/// which happens exactly when `ξ ≠ 0` (and `budget ≥ 1`).
pub fn orthogonality_iff_xi_zero<S: Scalar>(params: &Params<S>, budget: usize) -> bool {
    for n in 0..=budget {
        for m in 0..=budget {
            for j in 0..m {
                let v = normalized_inner(m, n, j, n, params);
                let nonzero = match S::MODE {
                    Mode::Exact => v != 0.0,
                    Mode::Float => v > 1e-10,
                };
                if nonzero {
                    return true;
                }
            }
        }
    }
    false
}
