//! Laguerre polynomials, the Kummer function `₁F₁`, and the point-value
//! representations of `G^{m,n}` through them.

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::params::Params;
use crate::scalar::{factorial, Ring, Scalar};

/// Relative size of the last series term at which summation stops.
pub const SERIES_TOL: f64 = 1e-16;
/// Hard cap on the number of series terms.
pub const MAX_TERMS: usize = 100_000;

/// Generalized Laguerre polynomial `L_s^α(x)` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k+1+α-x) L_k - (k+α) L_{k-1}`.
///
/// Works over any [`Ring`]: exact or float scalars, complex arguments, or
/// whole polynomials.
pub fn laguerre<T: Ring>(s: u32, alpha: u32, x: &T) -> T {
    let a = alpha as i64;
    let mut prev = T::from_int(1);
    if s == 0 {
        return prev;
    }
    let mut cur = T::from_int(1 + a) - x.clone();
    for k in 1..s as i64 {
        let next = ((T::from_int(2 * k + 1 + a) - x.clone()) * cur.clone()
            - T::from_int(k + a) * prev)
            * T::from_ratio(1, k + 1);
        prev = cur;
        cur = next;
    }
    cur
}

/// Terminating Kummer series `₁F₁(-s; c; x) = Σ_{j≤s} (-s)_j/((c)_j j!) x^j`
/// for a positive integer `c`. Exact whenever the ring is.
pub fn hyp1f1_terminating<T: Ring>(s: u32, c: u32, x: &T) -> T {
    assert!(c > 0, "c must be a positive integer");
    let (s, c) = (s as i64, c as i64);
    // Horner from the top coefficient down.
    let coeffs: Vec<T> = {
        let mut out = Vec::with_capacity(s as usize + 1);
        let mut t = T::from_int(1);
        out.push(t.clone());
        for j in 0..s {
            t = t * T::from_ratio(j - s, (c + j) * (j + 1));
            out.push(t.clone());
        }
        out
    };
    coeffs
        .into_iter()
        .rev()
        .fold(T::from_int(0), |acc, coeff| acc * x.clone() + coeff)
}

/// Arguments of `₁F₁(a; c; x)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HypergeometricArgs {
    pub a: f64,
    pub c: f64,
    pub x: Complex64,
}

fn nonpositive_integer(v: f64) -> Option<u32> {
    (v <= 0.0 && v.fract() == 0.0 && v > -(u32::MAX as f64)).then(|| (-v) as u32)
}

impl HypergeometricArgs {
    pub fn new(a: f64, c: f64, x: Complex64) -> Result<Self> {
        if !c.is_finite() || nonpositive_integer(c).is_some() {
            return Err(Error::InvalidHypergeometric(format!("c = {c} is a pole")));
        }
        if !a.is_finite() || !x.re.is_finite() || !x.im.is_finite() {
            return Err(Error::InvalidHypergeometric("non-finite input".into()));
        }
        Ok(HypergeometricArgs { a, c, x })
    }

    pub fn real(a: f64, c: f64, x: f64) -> Result<Self> {
        Self::new(a, c, Complex64::new(x, 0.0))
    }
}

fn kummer_series(a: f64, c: f64, x: Complex64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..MAX_TERMS {
        let k = k as f64;
        term *= x * ((a + k) / ((c + k) * (k + 1.0)));
        sum += term;
        if term.norm() <= SERIES_TOL * sum.norm() || term.norm() == 0.0 {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence(MAX_TERMS))
}

/// Kummer's confluent hypergeometric function in double precision.
///
/// Terminating parameters (`a` a nonpositive integer) are summed directly.
/// Otherwise the power series is used, after Kummer's transformation
/// `₁F₁(a;c;x) = e^x ₁F₁(c-a;c;-x)` when `Re x < 0`.
pub fn hyp1f1(args: HypergeometricArgs) -> Result<Complex64> {
    let HypergeometricArgs { a, c, x } = args;
    if let Some(s) = nonpositive_integer(a) {
        if let Some(c_int) = (c.fract() == 0.0 && c > 0.0).then_some(c as u32) {
            return Ok(hyp1f1_terminating(s, c_int, &x));
        }
        return kummer_series(a, c, x);
    }
    if x.re < 0.0 {
        return Ok(x.exp() * kummer_series(c - a, c, -x)?);
    }
    kummer_series(a, c, x)
}

/// Prefactor convention for the Kummer-function form of `G^{m,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prefactor {
    /// `(-1)^{min} max!/|m-n|!`, consistent with the Laguerre form.
    Corrected,
    /// `(-1)^{min} min!/|m-n|!`, the historically printed variant. It is
    /// off by `max!/min!` whenever `m ≠ n`.
    AsPrinted,
}

struct Shape<S> {
    lo: u32,
    hi: u32,
    gap: u32,
    sign: S,
    monomial: S,
    arg: S,
}

/// Common pieces: `z^{max-n} (νz*+ξ*/2)^{max-m}` and `x = z(νz*+ξ*/2)`.
fn shape<S: Scalar>(m: usize, n: usize, params: &Params<S>, z: &S) -> Shape<S> {
    let (lo, hi) = (m.min(n) as u32, m.max(n) as u32);
    let w = params.nu().clone() * z.conj() + params.half_xi_conj();
    let monomial = z.powu(hi - n as u32) * w.powu(hi - m as u32);
    let sign = if lo % 2 == 0 { S::one() } else { -S::one() };
    Shape {
        lo,
        hi,
        gap: hi - lo,
        sign,
        monomial,
        arg: z.clone() * w,
    }
}

/// `G^{m,n}(z) = (-1)^{min} min! · z^{max-n} w^{max-m} · L_{min}^{|m-n|}(z w)`
/// with `w = νz* + ξ*/2`. The Laguerre argument is complex when `ξ ≠ 0`.
pub fn gchp_via_laguerre<S: Scalar>(m: usize, n: usize, params: &Params<S>, z: &S) -> S {
    let sh = shape(m, n, params, z);
    sh.sign * factorial::<S>(sh.lo) * sh.monomial * laguerre(sh.lo, sh.gap, &sh.arg)
}

pub fn gchp_via_1f1_with<S: Scalar>(
    m: usize,
    n: usize,
    params: &Params<S>,
    z: &S,
    prefactor: Prefactor,
) -> S {
    let sh = shape(m, n, params, z);
    let top = match prefactor {
        Prefactor::Corrected => factorial::<S>(sh.hi),
        Prefactor::AsPrinted => factorial::<S>(sh.lo),
    };
    let scale = top * factorial::<S>(sh.gap).inv().expect("nonzero factorial");
    sh.sign * scale * sh.monomial * hyp1f1_terminating(sh.lo, sh.gap + 1, &sh.arg)
}

/// `G^{m,n}(z) = (-1)^{min} max!/|m-n|! · z^{max-n} w^{max-m} · ₁F₁(-min; |m-n|+1; z w)`.
pub fn gchp_via_1f1<S: Scalar>(m: usize, n: usize, params: &Params<S>, z: &S) -> S {
    gchp_via_1f1_with(m, n, params, z, Prefactor::Corrected)
}
