//! Generalized complex Hermite polynomials `G_ν^{m,n}(z, z*|ξ)`.
//!
//! Five independent constructions are provided (see [`Route`]). The series
//! route is the canonical one; the others exist so that agreement between
//! them can be checked exactly.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::Params;
use crate::poly::{AnyPoly, BiPoly};
use crate::scalar::{binomial, factorial, Exact, Float, Mode, Scalar};
use crate::weighted::{GaussExponent, WeightedPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Closed finite sum with `(νz* + ξ*/2)` powers expanded binomially.
    Series,
    /// Three-term recursions seeded at `G^{0,0} = 1`.
    Recursion,
    /// `(-∂/∂z + νz* + ξ*/2)^n z^m`.
    Operator,
    /// Mixed derivatives of `exp(-ν|z|² - ξ*z/2)`.
    Rodrigues,
    /// Binomial sum of scaled classical complex Hermite polynomials.
    HermiteSum,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::Series,
        Route::Recursion,
        Route::Operator,
        Route::Rodrigues,
        Route::HermiteSum,
    ];
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Route::Series => "series",
            Route::Recursion => "recursion",
            Route::Operator => "operator",
            Route::Rodrigues => "rodrigues",
            Route::HermiteSum => "hermite-sum",
        };
        f.write_str(s)
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown route `{s}`")))
    }
}

/// Identifies one construction of one polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GchpKey<S> {
    pub m: usize,
    pub n: usize,
    pub params: Params<S>,
    pub route: Route,
}

/// Dattoli's `h_{m,n}(z, z*|τ) = m!n! Σ_j τ^j/j! · z^{m-j}/(m-j)! · z*^{n-j}/(n-j)!`.
pub fn dattoli_h<S: Scalar>(m: usize, n: usize, tau: &S) -> BiPoly<S> {
    let mut rows = vec![vec![S::zero(); n + 1]; m + 1];
    for j in 0..=m.min(n) {
        // m!n!/(j!(m-j)!(n-j)!) = C(m,j) C(n,j) j!
        let c = binomial::<S>(m as u32, j as u32)
            * binomial::<S>(n as u32, j as u32)
            * factorial::<S>(j as u32)
            * tau.powu(j as u32);
        rows[m - j][n - j] = c;
    }
    BiPoly::from_rows(rows)
}

/// Classical complex Hermite polynomial `H^{m,n}(z, z*)`.
pub fn complex_hermite<S: Scalar>(m: usize, n: usize) -> BiPoly<S> {
    dattoli_h(m, n, &-S::one())
}

pub fn gchp_series<S: Scalar>(m: usize, n: usize, params: &Params<S>) -> BiPoly<S> {
    let w = params.zbar_shift();
    let mut w_pows = Vec::with_capacity(n + 1);
    w_pows.push(BiPoly::one());
    for i in 1..=n {
        w_pows.push(&w_pows[i - 1] * &w);
    }
    let mut out = BiPoly::zero();
    for j in 0..=m.min(n) {
        let sign = if j % 2 == 0 { S::one() } else { -S::one() };
        let c = sign
            * binomial::<S>(m as u32, j as u32)
            * binomial::<S>(n as u32, j as u32)
            * factorial::<S>(j as u32);
        let term = &BiPoly::monomial(m - j, 0, c) * &w_pows[n - j];
        out = &out + &term;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecursionOrder {
    /// Fill `G^{i,0}` first, then raise the second index.
    FirstIndexFirst,
    /// Fill `G^{0,k}` first, then raise the first index.
    SecondIndexFirst,
}

/// Build by the three-term recursions
/// `G^{m+1,n} = z G^{m,n} - n G^{m,n-1}` and
/// `G^{m,n+1} = (νz* + ξ*/2) G^{m,n} - m G^{m-1,n}`.
pub fn gchp_recursion_ordered<S: Scalar>(
    m: usize,
    n: usize,
    params: &Params<S>,
    order: RecursionOrder,
) -> BiPoly<S> {
    let z = BiPoly::<S>::z();
    let w = params.zbar_shift();
    let mut table: Vec<Vec<BiPoly<S>>> = vec![vec![BiPoly::zero(); n + 1]; m + 1];
    table[0][0] = BiPoly::one();

    let raise_first = |table: &mut Vec<Vec<BiPoly<S>>>, i: usize, k: usize| {
        let mut next = &z * &table[i][k];
        if k > 0 {
            next = &next - &table[i][k - 1].scale(&S::from_int(k as i64));
        }
        table[i + 1][k] = next;
    };
    let raise_second = |table: &mut Vec<Vec<BiPoly<S>>>, i: usize, k: usize| {
        let mut next = &w * &table[i][k];
        if i > 0 {
            next = &next - &table[i - 1][k].scale(&S::from_int(i as i64));
        }
        table[i][k + 1] = next;
    };

    match order {
        RecursionOrder::FirstIndexFirst => {
            for i in 0..m {
                raise_first(&mut table, i, 0);
            }
            for k in 0..n {
                for i in 0..=m {
                    raise_second(&mut table, i, k);
                }
            }
        }
        RecursionOrder::SecondIndexFirst => {
            for k in 0..n {
                raise_second(&mut table, 0, k);
            }
            for i in 0..m {
                for k in 0..=n {
                    raise_first(&mut table, i, k);
                }
            }
        }
    }
    table.swap_remove(m).swap_remove(n)
}

pub fn gchp_recursion<S: Scalar>(m: usize, n: usize, params: &Params<S>) -> BiPoly<S> {
    gchp_recursion_ordered(m, n, params, RecursionOrder::FirstIndexFirst)
}

/// One application of `-∂/∂z + νz* + ξ*/2`.
pub fn raise<S: Scalar>(p: &BiPoly<S>, params: &Params<S>) -> BiPoly<S> {
    &(&params.zbar_shift() * p) - &p.d_dz()
}

pub fn gchp_operator<S: Scalar>(m: usize, n: usize, params: &Params<S>) -> BiPoly<S> {
    (0..n).fold(BiPoly::monomial(m, 0, S::one()), |p, _| raise(&p, params))
}

/// `(-1)^{m+n}/ν^m · e^{ν|z|²+ξ*z/2} ∂^{m+n}/∂z^n∂z*^m e^{-ν|z|²-ξ*z/2}`,
/// carried out in the weighted calculus; the two exponentials must cancel.
pub fn gchp_rodrigues<S: Scalar>(m: usize, n: usize, params: &Params<S>) -> Result<BiPoly<S>> {
    let weight = GaussExponent::rodrigues(params);
    let mut f = WeightedPoly::new(BiPoly::one(), weight.clone());
    for _ in 0..m {
        f = f.d_dzbar();
    }
    for _ in 0..n {
        f = f.d_dz();
    }
    let nu_pow_inv = params.nu().powu(m as u32).inv().expect("nu > 0");
    let sign = if (m + n).is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    };
    f.scale(&(sign * nu_pow_inv))
        .times_exp(&-&weight)
        .into_polynomial()
}

/// `(n!/√ν^m) Σ_j √ν^j/j! · (ξ*/2)^{n-j}/(n-j)! · H^{m,j}(√ν z, √ν z*)`.
///
/// Needs `√ν` in the field: in exact mode `ν` must be a square rational,
/// otherwise [`Error::IrrationalSqrt`] is returned (see
/// [`gchp_hermite_sum_any`] for the float fallback).
pub fn gchp_hermite_sum<S: Scalar>(m: usize, n: usize, params: &Params<S>) -> Result<BiPoly<S>> {
    let root = params
        .nu()
        .sqrt_real()
        .ok_or_else(|| Error::IrrationalSqrt(params.nu().render()))?;
    let half_xi = params.half_xi_conj();
    let mut out = BiPoly::zero();
    for j in 0..=n {
        let c =
            root.powu(j as u32) * half_xi.powu((n - j) as u32) * binomial::<S>(n as u32, j as u32);
        let h = complex_hermite::<S>(m, j).scale_vars(&root, &root);
        out = &out + &h.scale(&c);
    }
    let root_m_inv = root.powu(m as u32).inv().expect("nu > 0");
    Ok(out.scale(&root_m_inv))
}

/// Hermite-sum route in exact mode when `√ν` is rational, float otherwise.
pub fn gchp_hermite_sum_any(m: usize, n: usize, params: &Params<Exact>) -> AnyPoly {
    match gchp_hermite_sum(m, n, params) {
        Ok(p) => AnyPoly::Exact(p),
        Err(_) => AnyPoly::Float(
            gchp_hermite_sum::<Float>(m, n, &params.to_float()).expect("float sqrt of positive nu"),
        ),
    }
}

pub fn gchp<S: Scalar>(m: usize, n: usize, params: &Params<S>, route: Route) -> Result<BiPoly<S>> {
    match route {
        Route::Series => Ok(gchp_series(m, n, params)),
        Route::Recursion => Ok(gchp_recursion(m, n, params)),
        Route::Operator => Ok(gchp_operator(m, n, params)),
        Route::Rodrigues => gchp_rodrigues(m, n, params),
        Route::HermiteSum => gchp_hermite_sum(m, n, params),
    }
}

/// Value at the origin: `0` if `m > n`, `(-1)^m m!` if `m = n`,
/// `(-1)^m n! (ξ*/2)^{n-m}/(n-m)!` if `n > m`.
pub fn hermite_number<S: Scalar>(m: usize, n: usize, params: &Params<S>) -> S {
    let sign = if m.is_multiple_of(2) { S::one() } else { -S::one() };
    if m > n {
        S::zero()
    } else {
        let d = (n - m) as u32;
        sign * factorial::<S>(n as u32)
            * params.half_xi_conj().powu(d)
            * factorial::<S>(d).inv().expect("nonzero factorial")
    }
}

/// Upper bound on `M`, `N` for the generating-function expansion.
pub const GENFUN_MAX: usize = 12;

/// Taylor coefficients of `exp(u z + v (νz* + ξ*/2) - u v)` in `(u, v)`,
/// scaled by `m! n!`, for `m ≤ max_m`, `n ≤ max_n`.
///
/// The exponential is expanded with the Euler-operator recurrence
/// `(m+n) e_{mn} = Σ (i+j) x_{ij} e_{m-i,n-j}` over the nonzero terms
/// `x_{ij}` of the exponent.
pub fn genfun_coefficients<S: Scalar>(
    params: &Params<S>,
    max_m: usize,
    max_n: usize,
) -> Result<Vec<Vec<BiPoly<S>>>> {
    if max_m > GENFUN_MAX || max_n > GENFUN_MAX {
        return Err(Error::DegreeBound(format!(
            "generating function expansion limited to {GENFUN_MAX}x{GENFUN_MAX}"
        )));
    }
    let exponent: [(usize, usize, BiPoly<S>); 3] = [
        (1, 0, BiPoly::z()),
        (0, 1, params.zbar_shift()),
        (1, 1, BiPoly::constant(-S::one())),
    ];
    let mut e = vec![vec![BiPoly::<S>::zero(); max_n + 1]; max_m + 1];
    e[0][0] = BiPoly::one();
    for total in 1..=(max_m + max_n) {
        for m in 0..=max_m.min(total) {
            let n = total - m;
            if n > max_n {
                continue;
            }
            let mut acc = BiPoly::zero();
            for (i, j, x) in &exponent {
                if *i <= m && *j <= n {
                    let weight = S::from_int((i + j) as i64);
                    acc = &acc + &(x * &e[m - i][n - j]).scale(&weight);
                }
            }
            e[m][n] = acc.scale(&S::from_ratio(1, total as i64));
        }
    }
    for (m, row) in e.iter_mut().enumerate() {
        for (n, entry) in row.iter_mut().enumerate() {
            let f = factorial::<S>(m as u32) * factorial::<S>(n as u32);
            *entry = entry.scale(&f);
        }
    }
    Ok(e)
}

/// First-order partial derivatives of `G^{m,n}` in closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct Partials<S> {
    /// `∂G^{m,n}/∂z = m G^{m-1,n}`.
    pub dz: BiPoly<S>,
    /// `∂G^{m,n}/∂z* = nν G^{m,n-1}`.
    pub dzbar: BiPoly<S>,
    /// `∂G^{m,n}/∂ξ* = (n/2) G^{m,n-1}`.
    pub dxibar: BiPoly<S>,
}

/// Closed-form partials, checked against formal differentiation of the
/// series route (exactly in exact mode, to 1e-12 relative in float mode).
pub fn gchp_partials<S: Scalar>(m: usize, n: usize, params: &Params<S>) -> Result<Partials<S>> {
    let g = gchp_series(m, n, params);
    let lower_m = if m > 0 {
        gchp_series(m - 1, n, params)
    } else {
        BiPoly::zero()
    };
    let lower_n = if n > 0 {
        gchp_series(m, n - 1, params)
    } else {
        BiPoly::zero()
    };
    let partials = Partials {
        dz: lower_m.scale(&S::from_int(m as i64)),
        dzbar: lower_n.scale(&(params.nu().clone() * S::from_int(n as i64))),
        dxibar: lower_n.scale(&S::from_ratio(n as i64, 2)),
    };
    let tol = if S::MODE == Mode::Exact { 0.0 } else { 1e-12 };
    if !g.d_dz().equal_within(&partials.dz, tol) {
        return Err(Error::OperatorDisagreement(format!(
            "dG/dz for m={m} n={n}"
        )));
    }
    if !g.d_dzbar().equal_within(&partials.dzbar, tol) {
        return Err(Error::OperatorDisagreement(format!(
            "dG/dz* for m={m} n={n}"
        )));
    }
    Ok(partials)
}

type CacheKey = (usize, usize, Route, String);

/// Memo table for constructed polynomials. Shared readers and writers are
/// synchronized; concurrent callers always observe equal values.
pub struct GchpCache<S> {
    entries: RwLock<HashMap<CacheKey, Arc<BiPoly<S>>>>,
}

impl<S: Scalar> Default for GchpCache<S> {
    fn default() -> Self {
        GchpCache {
            entries: RwLock::new(HashMap::new()),
        }
    }
}

impl<S: Scalar> GchpCache<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(
        &self,
        m: usize,
        n: usize,
        params: &Params<S>,
        route: Route,
    ) -> Result<Arc<BiPoly<S>>> {
        let key = (m, n, route, params.key());
        if let Some(hit) = self.entries.read().expect("cache lock").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let value = Arc::new(gchp(m, n, params, route)?);
        let mut entries = self.entries.write().expect("cache lock");
        Ok(Arc::clone(entries.entry(key).or_insert(value)))
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Ring;

    type P = BiPoly<Exact>;

    fn params(nu: (i64, i64), re: i64, im: i64) -> Params<Exact> {
        Params::rational(nu.0, nu.1, (re, 1), (im, 1)).unwrap()
    }

    fn one_two() -> Params<Exact> {
        params((1, 1), 2, 0)
    }

    #[test]
    fn classical_hermite_tables() {
        assert_eq!(
            complex_hermite::<Exact>(1, 1),
            P::from_int_rows(&[&[-1, 0], &[0, 1]])
        );
        assert_eq!(
            complex_hermite::<Exact>(2, 2),
            P::from_int_rows(&[&[2, 0, 0], &[0, -4, 0], &[0, 0, 1]])
        );
        let h33 = complex_hermite::<Exact>(3, 3);
        let diag: Vec<_> = (0..4).map(|k| h33.coeff(k, k)).collect();
        assert_eq!(diag, [-6, 18, -9, 1].map(Exact::from_int));
        assert_eq!(h33.terms().count(), 4);
    }

    #[test]
    fn dattoli_special_cases() {
        let tau = Exact::from_ratio(3, 7);
        assert_eq!(
            dattoli_h(3, 2, &Exact::zero()),
            P::monomial(3, 2, Exact::one())
        );
        assert_eq!(dattoli_h(4, 3, &-Exact::one()), complex_hermite(4, 3));
        assert_eq!(
            dattoli_h(1, 1, &tau),
            &P::monomial(1, 1, Exact::one()) + &P::constant(tau)
        );
    }

    #[test]
    fn series_closed_cases() {
        let p = params((2, 1), 1, 1);
        let w = p.zbar_shift();
        for m in 0..5 {
            assert_eq!(gchp_series(m, 0, &p), P::monomial(m, 0, Exact::one()));
            assert_eq!(gchp_series(0, m, &p), w.pow(m as u32));
        }
        for m in 1..5 {
            let expected = &P::monomial(m - 1, 0, Exact::one())
                * &(&(&P::z() * &w) - &P::constant(Exact::from_int(m as i64)));
            assert_eq!(gchp_series(m, 1, &p), expected);
            let expected =
                &w.pow(m as u32 - 1) * &(&(&P::z() * &w) - &P::constant(Exact::from_int(m as i64)));
            assert_eq!(gchp_series(1, m, &p), expected);
        }
    }

    #[test]
    fn recursion_examples() {
        let p = params((2, 1), 1, 1);
        let g11 = &(&P::z() * &p.zbar_shift()) - &P::one();
        assert_eq!(gchp_recursion(1, 1, &p), g11);
        for order in [
            RecursionOrder::FirstIndexFirst,
            RecursionOrder::SecondIndexFirst,
        ] {
            assert_eq!(
                gchp_recursion_ordered(5, 0, &p, order),
                P::monomial(5, 0, Exact::one())
            );
        }
        assert_eq!(
            gchp_recursion(2, 2, &one_two()),
            P::from_int_rows(&[&[2, 0, 0], &[-4, -4, 0], &[1, 2, 1]])
        );
    }

    #[test]
    fn operator_examples() {
        let p = params((1, 2), 0, -1);
        assert_eq!(gchp_operator(4, 0, &p), P::monomial(4, 0, Exact::one()));
        let one_step = raise(&P::monomial(3, 0, Exact::one()), &p);
        assert_eq!(one_step, gchp_series(3, 1, &p));
        let w = p.zbar_shift();
        for n in 1..5u32 {
            let expected =
                &w.pow(n - 1) * &(&(&P::z() * &w) - &P::constant(Exact::from_int(n as i64)));
            assert_eq!(gchp_operator(1, n as usize, &p), expected);
        }
    }

    #[test]
    fn rodrigues_examples() {
        assert_eq!(
            gchp_rodrigues(0, 0, &params((3, 1), 1, 1)).unwrap(),
            P::one()
        );
        let classical = params((1, 1), 0, 0);
        for m in 0..5 {
            for n in 0..5 {
                assert_eq!(
                    gchp_rodrigues(m, n, &classical).unwrap(),
                    complex_hermite(m, n)
                );
            }
        }
        assert_eq!(
            gchp_rodrigues(3, 3, &one_two()).unwrap(),
            P::from_int_rows(&[
                &[-6, 0, 0, 0],
                &[18, 18, 0, 0],
                &[-9, -18, -9, 0],
                &[1, 3, 3, 1]
            ])
        );
    }

    #[test]
    fn hermite_sum_examples() {
        let p = one_two();
        for m in 0..6 {
            let sum = (0..=m).fold(P::zero(), |acc, k| {
                &acc + &complex_hermite::<Exact>(m, k).scale(&binomial::<Exact>(m as u32, k as u32))
            });
            assert_eq!(gchp_hermite_sum(m, m, &p).unwrap(), sum);
        }
        let classical = params((1, 1), 0, 0);
        assert_eq!(
            gchp_hermite_sum(3, 2, &classical).unwrap(),
            complex_hermite(3, 2)
        );
        let p4 = params((4, 1), 1, 1);
        assert_eq!(gchp_hermite_sum(2, 2, &p4).unwrap(), gchp_series(2, 2, &p4));
    }

    #[test]
    fn hermite_sum_needs_rational_root() {
        let p = params((2, 1), 1, 1);
        assert!(matches!(
            gchp_hermite_sum(2, 2, &p),
            Err(Error::IrrationalSqrt(_))
        ));
        match gchp_hermite_sum_any(3, 2, &p) {
            AnyPoly::Float(f) => assert!(f.equal_within(&gchp_series(3, 2, &p).to_float(), 1e-12)),
            AnyPoly::Exact(_) => panic!("expected float fallback"),
        }
        assert!(matches!(
            gchp_hermite_sum_any(3, 2, &params((4, 9), 1, 1)),
            AnyPoly::Exact(_)
        ));
    }

    #[test]
    fn hermite_numbers() {
        let p = one_two();
        assert_eq!(hermite_number(3, 1, &p), Exact::zero());
        assert_eq!(hermite_number(2, 2, &p), Exact::from_int(2));
        assert_eq!(hermite_number(1, 3, &p), Exact::from_int(-3));
        assert_eq!(
            gchp_series(1, 3, &p).eval(&Exact::zero()),
            Exact::from_int(-3)
        );
        assert_eq!(
            gchp_series(1, 1, &p).eval(&Exact::zero()),
            Exact::from_int(-1)
        );
        let q = params((2, 1), 1, 1);
        for m in 0..6 {
            for n in 0..6 {
                assert_eq!(
                    hermite_number(m, n, &q),
                    gchp_series(m, n, &q).eval(&Exact::zero())
                );
            }
        }
    }

    #[test]
    fn generating_function_entries() {
        let p = params((2, 1), 1, 1);
        let table = genfun_coefficients(&p, 4, 4).unwrap();
        assert_eq!(table[0][0], P::one());
        for m in 0..=4 {
            assert_eq!(table[m][0], P::monomial(m, 0, Exact::one()));
        }
        assert_eq!(table[1][1], &(&P::z() * &p.zbar_shift()) - &P::one());
        assert!(genfun_coefficients(&p, 13, 2).is_err());
    }

    #[test]
    fn partials_examples() {
        let p = params((2, 1), 1, 1);
        for m in 0..5 {
            for n in 0..5 {
                let d = gchp_partials(m, n, &p).unwrap();
                assert_eq!(
                    d.dzbar,
                    d.dxibar.scale(&(p.nu().clone() * Exact::from_int(2)))
                );
            }
        }
        let d = gchp_partials(4, 0, &p).unwrap();
        assert_eq!(d.dz, P::monomial(3, 0, Exact::from_int(4)));
        let d = gchp_partials(1, 1, &p).unwrap();
        assert_eq!(d.dzbar, P::monomial(1, 0, p.nu().clone()));
    }

    #[test]
    fn degrees_match_indices() {
        let p = params((1, 2), 0, -1);
        for m in 0..7 {
            for n in 0..7 {
                let g = gchp_series(m, n, &p);
                assert_eq!((g.deg_z(), g.deg_zbar()), (m, n));
            }
        }
    }

    #[test]
    fn cache_returns_equal_values_across_threads() {
        let cache = GchpCache::<Exact>::new();
        let p = params((2, 1), 1, 1);
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| {
                    for route in [Route::Series, Route::Operator, Route::Recursion] {
                        let g = cache.get(3, 2, &p, route).unwrap();
                        assert_eq!(*g, gchp_series(3, 2, &p));
                    }
                });
            }
        });
        assert_eq!(cache.len(), 3);
        assert!(cache.get(1, 1, &p, Route::HermiteSum).is_err());
    }

    #[test]
    fn route_names_round_trip() {
        for r in Route::ALL {
            assert_eq!(r.to_string().parse::<Route>().unwrap(), r);
        }
        assert!("rodriguez".parse::<Route>().is_err());
    }
}
