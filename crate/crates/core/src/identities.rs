//! Executable checks of the Hermite/Laguerre sum identities and of the
//! matrix structure of `G^{m,m}`.
//!
//! Each sum identity is evaluated in two variants: the form as it is
//! usually printed and a corrected form. A case is `Verified` when the
//! printed form holds, `Erratum` when only the corrected form holds, and
//! `Failed` otherwise.

use std::fmt;

use num::complex::Complex64;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::routes::{complex_hermite, gchp_series};
use crate::params::Params;
use crate::poly::BiPoly;
use crate::scalar::{binomial, factorial, Exact, Mode, Scalar};
use crate::special::laguerre;

/// Relative residual accepted in float mode.
pub const FLOAT_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityStatus {
    Verified,
    Erratum,
    Failed,
}

impl fmt::Display for IdentityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityStatus::Verified => "verified",
            IdentityStatus::Erratum => "erratum",
            IdentityStatus::Failed => "failed",
        })
    }
}

/// Outcome of one identity at one index pair.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseCheck {
    pub printed_residual: f64,
    pub corrected_residual: f64,
    pub printed_ok: bool,
    pub corrected_ok: bool,
}

impl CaseCheck {
    fn from_polys<S: Scalar>(lhs: &BiPoly<S>, printed: &BiPoly<S>, corrected: &BiPoly<S>) -> Self {
        let (printed_residual, printed_ok) = poly_residual(lhs, printed);
        let (corrected_residual, corrected_ok) = poly_residual(lhs, corrected);
        CaseCheck {
            printed_residual,
            corrected_residual,
            printed_ok,
            corrected_ok,
        }
    }

    pub fn status(&self) -> IdentityStatus {
        match (self.printed_ok, self.corrected_ok) {
            (true, true) => IdentityStatus::Verified,
            (false, true) => IdentityStatus::Erratum,
            _ => IdentityStatus::Failed,
        }
    }
}

/// Relative coefficient residual and whether it counts as zero (exactly in
/// exact mode).
fn poly_residual<S: Scalar>(a: &BiPoly<S>, b: &BiPoly<S>) -> (f64, bool) {
    let scale = a.max_abs().max(b.max_abs()).max(f64::MIN_POSITIVE);
    let residual = a.max_abs_diff(b) / scale;
    let ok = match S::MODE {
        Mode::Exact => a == b,
        Mode::Float => residual <= FLOAT_TOL,
    };
    (residual, ok)
}

fn sign<S: Scalar>(k: usize) -> S {
    if k.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}

/// `√ν^{j-m} H^{m,j}(√ν z, √ν z*) = H^{m,j}(z, ν z*)`: the half-integer powers
/// of `√ν` always pair up, so no square root is needed.
pub fn rescaled_hermite<S: Scalar>(m: usize, j: usize, nu: &S) -> BiPoly<S> {
    complex_hermite::<S>(m, j).scale_vars(&S::one(), nu)
}

/// `Σ_j C(n,j) (ξ*/2)^{n-j} H^{m,j}(z, ν z*)`.
fn hermite_shift_sum<S: Scalar>(m: usize, n: usize, params: &Params<S>) -> BiPoly<S> {
    let h = params.half_xi_conj();
    (0..=n).fold(BiPoly::zero(), |acc, j| {
        let c = binomial::<S>(n as u32, j as u32) * h.powu((n - j) as u32);
        &acc + &rescaled_hermite(m, j, params.nu()).scale(&c)
    })
}

/// `H^{m,n}(z, ν z* + ξ*/2)` against the binomial sum of rescaled
/// `H^{m,j}`. The printed variant carries an extra `(-1)^{min(m,n)}`; the
/// corrected one has no sign.
pub fn verify_shifted_hermite_sum<S: Scalar>(m: usize, n: usize, params: &Params<S>) -> CaseCheck {
    let lhs = complex_hermite::<S>(m, n).substitute_zbar(&params.zbar_shift());
    let corrected = hermite_shift_sum(m, n, params);
    let printed = corrected.scale(&sign::<S>(m.min(n)));
    CaseCheck::from_polys(&lhs, &printed, &corrected)
}

/// The `ν = 1, ξ = 2` case: `H^{m,n}(z, z*+1)` against `Σ_j C(n,j) H^{m,j}`.
pub fn verify_unit_shift_hermite(m: usize, n: usize) -> CaseCheck {
    let params = Params::<Exact>::rational(1, 1, (2, 1), (0, 1)).expect("valid");
    verify_shifted_hermite_sum(m, n, &params)
}

/// Which Laguerre sum identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LaguerreIdentity {
    /// `L_min^{|m-n|}(z w)` as a rescaled Hermite sum, any `ν, ξ`.
    ShiftSum,
    /// `L_n^{m-n}(zz*+z)` for `m ≥ n`.
    Lower,
    /// `L_m^{n-m}(zz*+z)` for `n ≥ m`.
    Upper,
    /// Exchange of the two indices in the unit-shift sums, `m ≥ n`.
    Exchange,
}

impl LaguerreIdentity {
    pub const ALL: [LaguerreIdentity; 4] = [
        LaguerreIdentity::ShiftSum,
        LaguerreIdentity::Lower,
        LaguerreIdentity::Upper,
        LaguerreIdentity::Exchange,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LaguerreIdentity::ShiftSum => "laguerre-shift-sum",
            LaguerreIdentity::Lower => "laguerre-lower",
            LaguerreIdentity::Upper => "laguerre-upper",
            LaguerreIdentity::Exchange => "laguerre-exchange",
        }
    }

    pub fn applies(self, m: usize, n: usize) -> bool {
        match self {
            LaguerreIdentity::ShiftSum => true,
            LaguerreIdentity::Lower | LaguerreIdentity::Exchange => m >= n,
            LaguerreIdentity::Upper => n >= m,
        }
    }
}

/// `Σ_{j≤n} H^{m,j}(z,z*) / (j!(n-j)!)`, the unit-shift sum without `n!`.
fn unit_sum<S: Scalar>(m: usize, n: usize) -> BiPoly<S> {
    (0..=n).fold(BiPoly::zero(), |acc, j| {
        let c = (factorial::<S>(j as u32) * factorial::<S>((n - j) as u32))
            .inv()
            .expect("nonzero");
        &acc + &complex_hermite::<S>(m, j).scale(&c)
    })
}

fn point_samples(seed: u64, count: usize) -> Vec<Complex64> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            Complex64::from_polar(
                rng.gen_range(0.3..1.8),
                rng.gen_range(0.0..std::f64::consts::TAU),
            )
        })
        .collect()
}

fn float_hermite(m: usize, j: usize, z: Complex64, zbar: Complex64) -> (Complex64, f64) {
    let h = complex_hermite::<Complex64>(m, j);
    let abs: f64 = h
        .terms()
        .map(|(a, b, c)| c.norm() * z.norm().powi(a as i32) * zbar.norm().powi(b as i32))
        .sum();
    (h.eval_pair(&z, &zbar), abs)
}

/// Literal pointwise check of the identity as printed, negative powers
/// included, at seeded random points. Returns the worst relative residual.
fn laguerre_pointwise(
    which: LaguerreIdentity,
    m: usize,
    n: usize,
    params: &Params<Complex64>,
) -> f64 {
    let (nu, half_xi) = (params.nu().re, params.half_xi_conj());
    let root = nu.sqrt();
    let (lo, hi, gap) = (m.min(n), m.max(n), m.abs_diff(n));
    let fact = |k: usize| (1..=k).map(|i| i as f64).product::<f64>();
    let mut worst = 0.0f64;
    for z in point_samples(0x5eed + (m * 31 + n) as u64, 6) {
        let zbar = z.conj();
        let (lhs, rhs, scale) = match which {
            LaguerreIdentity::ShiftSum => {
                let w = zbar * nu + half_xi;
                let lhs = laguerre(lo as u32, gap as u32, &(z * w));
                let mut sum = Complex64::new(0.0, 0.0);
                let mut abs = 0.0;
                for j in 0..=n {
                    let (h, ha) = float_hermite(m, j, z * root, zbar * root);
                    let c =
                        root.powi(j as i32) / fact(j) * half_xi.powu((n - j) as u32) / fact(n - j);
                    sum += h * c;
                    abs += ha * c.norm();
                }
                let pre = sign::<Complex64>(lo) * fact(n) / (root.powi(m as i32) * fact(lo))
                    * z.powi(n as i32 - hi as i32)
                    * w.powi(m as i32 - hi as i32);
                (lhs, pre * sum, pre.norm() * abs)
            }
            LaguerreIdentity::Lower | LaguerreIdentity::Upper => {
                let lhs = laguerre(lo as u32, gap as u32, &(z * zbar + z));
                let mut sum = Complex64::new(0.0, 0.0);
                let mut abs = 0.0;
                for j in 0..=n {
                    let (h, ha) = float_hermite(m, j, z, zbar);
                    let c = 1.0 / (fact(j) * fact(n - j));
                    sum += h * c;
                    abs += ha * c;
                }
                let pre = if which == LaguerreIdentity::Lower {
                    sign::<Complex64>(n) * z.powi(n as i32 - m as i32)
                } else {
                    sign::<Complex64>(m)
                        * (fact(n) / fact(m))
                        * (zbar + 1.0).powi(m as i32 - n as i32)
                };
                (lhs, pre * sum, pre.norm() * abs)
            }
            LaguerreIdentity::Exchange => {
                let one = Complex64::new(1.0, 0.0);
                let side = |a: usize, b: usize, pre: Complex64| {
                    let mut sum = Complex64::new(0.0, 0.0);
                    let mut abs = 0.0;
                    for j in 0..=b {
                        let (h, ha) = float_hermite(a, j, z, zbar);
                        let c = 1.0 / (fact(j) * fact(b - j));
                        sum += h * c;
                        abs += ha * c;
                    }
                    (pre * sum, pre.norm() * abs)
                };
                let (l, la) = side(m, n, (zbar + one).powi(m as i32 - n as i32) * fact(n));
                let (r, ra) = side(n, m, z.powi(m as i32 - n as i32) * fact(m));
                (l, r, la.max(ra))
            }
        };
        let d = (lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(scale).max(f64::MIN_POSITIVE);
        worst = worst.max(d);
    }
    worst
}

/// Polynomial form of each identity, cleared of negative powers. Returns
/// `(lhs, rhs)`.
fn laguerre_polynomial_sides<S: Scalar>(
    which: LaguerreIdentity,
    m: usize,
    n: usize,
    params: &Params<S>,
) -> (BiPoly<S>, BiPoly<S>) {
    let (lo, hi, gap) = (m.min(n), m.max(n), m.abs_diff(n));
    match which {
        LaguerreIdentity::ShiftSum => {
            // (-1)^min min! z^{max-n} w^{max-m} L_min^{|m-n|}(zw) = Σ_j C(n,j) h^{n-j} H^{m,j}(z, νz*)
            let w = params.zbar_shift();
            let zw = &BiPoly::z() * &w;
            let lhs = (&BiPoly::z().pow((hi - n) as u32) * &w.pow((hi - m) as u32))
                .scale(&(sign::<S>(lo) * factorial::<S>(lo as u32)));
            (
                &lhs * &laguerre(lo as u32, gap as u32, &zw),
                hermite_shift_sum(m, n, params),
            )
        }
        LaguerreIdentity::Lower => {
            let x = &BiPoly::z() * &(&BiPoly::zbar() + &BiPoly::one());
            let lhs = &BiPoly::z().pow((m - n) as u32) * &laguerre(n as u32, (m - n) as u32, &x);
            (lhs, unit_sum::<S>(m, n).scale(&sign::<S>(n)))
        }
        LaguerreIdentity::Upper => {
            let shift = &BiPoly::zbar() + &BiPoly::one();
            let x = &BiPoly::z() * &shift;
            let lhs = &shift.pow((n - m) as u32) * &laguerre(m as u32, (n - m) as u32, &x);
            let c = sign::<S>(m)
                * factorial::<S>(n as u32)
                * factorial::<S>(m as u32).inv().expect("nonzero");
            (lhs, unit_sum::<S>(m, n).scale(&c))
        }
        LaguerreIdentity::Exchange => {
            let shift = &BiPoly::zbar() + &BiPoly::one();
            let lhs = (&shift.pow((m - n) as u32) * &unit_sum::<S>(m, n))
                .scale(&factorial::<S>(n as u32));
            let rhs = (&BiPoly::z().pow((m - n) as u32) * &unit_sum::<S>(n, m))
                .scale(&factorial::<S>(m as u32));
            (lhs, rhs)
        }
    }
}

/// Checks one Laguerre identity at `(m, n)`. The "printed" variant is the
/// literal statement evaluated pointwise in double precision; the
/// "corrected" variant is the same identity multiplied through to a
/// polynomial identity and compared coefficient by coefficient. Returns
/// `None` when the index condition does not hold.
pub fn verify_laguerre_identity<S: Scalar>(
    which: LaguerreIdentity,
    m: usize,
    n: usize,
    params: &Params<S>,
) -> Option<CaseCheck> {
    if !which.applies(m, n) {
        return None;
    }
    let (lhs, rhs) = laguerre_polynomial_sides(which, m, n, params);
    let (corrected_residual, corrected_ok) = poly_residual(&lhs, &rhs);
    let printed_residual = laguerre_pointwise(which, m, n, &params.to_float());
    Some(CaseCheck {
        printed_residual,
        corrected_residual,
        printed_ok: printed_residual <= 1e-9,
        corrected_ok,
    })
}

/// All applicable Laguerre identities at `(m, n)`.
pub fn verify_laguerre_identities<S: Scalar>(
    m: usize,
    n: usize,
    params: &Params<S>,
) -> Vec<(LaguerreIdentity, CaseCheck)> {
    LaguerreIdentity::ALL
        .iter()
        .filter_map(|&w| verify_laguerre_identity(w, m, n, params).map(|c| (w, c)))
        .collect()
}

/// A coefficient grid in display orientation: row `j` is the power of `z`,
/// column `k` the power of `z*`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    pub rows: Vec<Vec<S>>,
}

impl<S: Scalar> Matrix<S> {
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn entry(&self, j: usize, k: usize) -> &S {
        &self.rows[j][k]
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Scalar::render).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

pub fn matrix_of<S: Scalar>(p: &BiPoly<S>) -> Matrix<S> {
    Matrix { rows: p.to_rows() }
}

/// Matrix padded (never truncated) to at least `rows × cols`.
pub fn matrix_with_shape<S: Scalar>(p: &BiPoly<S>, rows: usize, cols: usize) -> Matrix<S> {
    let mut grid = p.to_rows();
    let cols = cols.max(p.deg_zbar() + 1);
    for row in &mut grid {
        row.resize(cols, S::zero());
    }
    while grid.len() < rows {
        grid.push(vec![S::zero(); cols]);
    }
    Matrix { rows: grid }
}

/// Closed-form entry `g_{lk}` of the lower-triangular matrix of `G^{m,m}`:
/// `(-1)^m (m!)² (-1)^l ν^k / (l!(m-l)!k!(l-k)!) · (ξ*/2)^{l-k}` for `k ≤ l`.
pub fn square_entry<S: Scalar>(m: usize, l: usize, k: usize, params: &Params<S>) -> S {
    if k > l || l > m {
        return S::zero();
    }
    let mf = factorial::<S>(m as u32);
    let den = factorial::<S>(l as u32)
        * factorial::<S>((m - l) as u32)
        * factorial::<S>(k as u32)
        * factorial::<S>((l - k) as u32);
    sign::<S>(m + l)
        * mf.clone()
        * mf
        * params.nu().powu(k as u32)
        * params.half_xi_conj().powu((l - k) as u32)
        * den.inv().expect("nonzero")
}

/// `G^{m,m}` is lower triangular and every entry matches [`square_entry`].
pub fn check_square_matrix<S: Scalar>(m: usize, params: &Params<S>) -> bool {
    let g = matrix_with_shape(&gchp_series(m, m, params), m + 1, m + 1);
    (0..=m).all(|l| {
        (0..=m).all(|k| {
            let want = square_entry(m, l, k, params);
            match S::MODE {
                Mode::Exact => *g.entry(l, k) == want,
                Mode::Float => {
                    (g.entry(l, k).clone() - want.clone()).abs() <= FLOAT_TOL * want.abs().max(1.0)
                }
            }
        })
    })
}

/// One diagonal of `G^{m,m}`: `scale · H^{m,k}(z, νz*)`, which equals
/// `C_{m,k} H^{m,k}(√ν z, √ν z*)` with `C_{m,k} = C(m,k) √ν^{k-m} (ξ*/2)^{m-k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalTerm<S> {
    pub k: usize,
    /// Offset `m - k` below the principal diagonal.
    pub offset: usize,
    pub scale: S,
    pub hermite: BiPoly<S>,
}

/// Splits `G^{m,m}` along its diagonals, ordered `k = m, m-1, ..., 0`.
/// Errors if a diagonal differs from its predicted Hermite term.
pub fn diagonal_decomposition<S: Scalar>(
    m: usize,
    params: &Params<S>,
) -> Result<Vec<DiagonalTerm<S>>> {
    let g = gchp_series(m, m, params);
    let h = params.half_xi_conj();
    let mut out = Vec::with_capacity(m + 1);
    for k in (0..=m).rev() {
        let term = DiagonalTerm {
            k,
            offset: m - k,
            scale: binomial::<S>(m as u32, k as u32) * h.powu((m - k) as u32),
            hermite: rescaled_hermite(m, k, params.nu()),
        };
        let predicted = term.hermite.scale(&term.scale);
        if !poly_residual(&g.diagonal(term.offset), &predicted).1 {
            return Err(Error::OperatorDisagreement(format!(
                "diagonal {} of G^{{{m},{m}}}",
                term.offset
            )));
        }
        out.push(term);
    }
    Ok(out)
}

/// Polynomial in `z, z*` whose coefficients are polynomials in `t = ξ*`,
/// with `ν` numeric. Only used for the `ξ*`-derivative prescription.
#[derive(Clone, Debug, PartialEq)]
pub struct XiPoly<S> {
    /// `grid[j][k][e]` is the coefficient of `z^j z*^k t^e`.
    grid: Vec<Vec<Vec<S>>>,
}

impl<S: Scalar> XiPoly<S> {
    /// `G^{m,n}` with `ξ*` kept symbolic: the series with `w = νz* + t/2`.
    pub fn gchp(m: usize, n: usize, nu: &S) -> Self {
        let mut grid = vec![vec![vec![S::zero(); n + 1]; n + 1]; m + 1];
        let half = S::from_ratio(1, 2);
        for j in 0..=m.min(n) {
            let c = sign::<S>(j)
                * binomial::<S>(m as u32, j as u32)
                * binomial::<S>(n as u32, j as u32)
                * factorial::<S>(j as u32);
            let d = n - j;
            for i in 0..=d {
                let e = d - i;
                let term = c.clone()
                    * binomial::<S>(d as u32, i as u32)
                    * nu.powu(i as u32)
                    * half.powu(e as u32);
                let slot = &mut grid[m - j][i][e];
                *slot = slot.clone() + term;
            }
        }
        XiPoly { grid }
    }

    pub fn drop_last_column(&self) -> Self {
        let grid = self
            .grid
            .iter()
            .map(|row| row[..row.len().saturating_sub(1)].to_vec())
            .collect();
        XiPoly { grid }
    }

    /// Entry-wise `∂/∂t`.
    pub fn d_dt(&self) -> Self {
        let grid = self
            .grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        (1..c.len())
                            .map(|e| c[e].clone() * S::from_int(e as i64))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        XiPoly { grid }
    }

    /// Binds `t = ξ*`.
    pub fn substitute(&self, xi_conj: &S) -> BiPoly<S> {
        BiPoly::from_rows(
            self.grid
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| {
                            c.iter()
                                .rev()
                                .fold(S::zero(), |acc, a| acc * xi_conj.clone() + a.clone())
                        })
                        .collect()
                })
                .collect(),
        )
    }
}

/// Drop the last `z*` column of `G^{m,n}` and differentiate every entry in
/// `ξ*`. The result equals `(n/2) G^{m,n-1}`; a mismatch is an error.
pub fn drop_column_differentiate<S: Scalar>(
    m: usize,
    n: usize,
    params: &Params<S>,
) -> Result<BiPoly<S>> {
    if n == 0 {
        return Err(Error::InvalidParams(
            "drop-column prescription needs n >= 1".into(),
        ));
    }
    let out = XiPoly::gchp(m, n, params.nu())
        .drop_last_column()
        .d_dt()
        .substitute(&params.xi_conj());
    let want = gchp_series(m, n - 1, params).scale(&S::from_ratio(n as i64, 2));
    if !poly_residual(&out, &want).1 {
        return Err(Error::OperatorDisagreement(format!(
            "xi*-derivative of G^{{{m},{n}}}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::routes::gchp_partials;
    use crate::scalar::Float;
    use crate::scalar::Ring;

    fn params(nu: (i64, i64), re: i64, im: i64) -> Params<Exact> {
        Params::rational(nu.0, nu.1, (re, 1), (im, 1)).unwrap()
    }

    fn test_set() -> Vec<Params<Exact>> {
        vec![
            params((1, 1), 0, 0),
            params((1, 1), 2, 0),
            params((2, 1), 1, 1),
            params((1, 4), 0, -1),
        ]
    }

    #[test]
    fn hermite_shift_sign_erratum() {
        // (1,1): H = zz* + z - 1; unsigned sum z + (zz* - 1) holds, signed fails
        let c = verify_unit_shift_hermite(1, 1);
        assert!(c.corrected_ok && !c.printed_ok);
        assert_eq!(c.status(), IdentityStatus::Erratum);
        for m in 0..5 {
            assert_eq!(
                verify_unit_shift_hermite(m, 0).status(),
                IdentityStatus::Verified
            );
            assert_eq!(
                verify_unit_shift_hermite(0, m).status(),
                IdentityStatus::Verified
            );
        }
        for p in test_set() {
            for m in 0..=6 {
                for n in 0..=6 {
                    let c = verify_shifted_hermite_sum(m, n, &p);
                    assert!(c.corrected_ok, "{} ({m},{n})", p.label());
                    let odd_min = m.min(n) % 2 == 1;
                    assert_eq!(c.printed_ok, !odd_min);
                }
            }
        }
    }

    #[test]
    fn rescaled_hermite_matches_square_root_form() {
        let p = params((4, 1), 1, -1);
        let root = Exact::from_int(2);
        for m in 0..5 {
            for j in 0..5 {
                let direct = complex_hermite::<Exact>(m, j)
                    .scale_vars(&root, &root)
                    .scale(&(root.powu(j as u32) * Scalar::inv(&root.powu(m as u32)).unwrap()));
                assert_eq!(direct, rescaled_hermite(m, j, p.nu()));
            }
        }
    }

    #[test]
    fn laguerre_identities_hold_as_printed() {
        for p in test_set() {
            for m in 0..=6 {
                for n in 0..=6 {
                    for (which, c) in verify_laguerre_identities(m, n, &p) {
                        assert_eq!(
                            c.status(),
                            IdentityStatus::Verified,
                            "{} {m},{n} {c:?}",
                            which.name()
                        );
                    }
                }
            }
        }
        // first printed case: L_1^0(zz*+z) = 1 - zz* - z
        let (lhs, rhs) = laguerre_polynomial_sides::<Exact>(
            LaguerreIdentity::Lower,
            1,
            1,
            &params((1, 1), 2, 0),
        );
        assert_eq!(lhs, BiPoly::from_int_rows(&[&[1], &[-1, -1]]));
        assert_eq!(lhs, rhs);
        assert!(
            verify_laguerre_identity(LaguerreIdentity::Upper, 3, 1, &params((1, 1), 2, 0))
                .is_none()
        );
    }

    #[test]
    fn printed_matrix_tables() {
        let p = params((1, 1), 2, 0);
        let rows = |m: usize| matrix_of(&gchp_series(m, m, &p)).rows;
        assert_eq!(
            rows(1),
            BiPoly::<Exact>::from_int_rows(&[&[-1, 0], &[1, 1]]).to_rows()
        );
        assert_eq!(
            rows(2),
            BiPoly::<Exact>::from_int_rows(&[&[2, 0, 0], &[-4, -4, 0], &[1, 2, 1]]).to_rows()
        );
        assert_eq!(
            rows(3),
            BiPoly::<Exact>::from_int_rows(&[
                &[-6, 0, 0, 0],
                &[18, 18, 0, 0],
                &[-9, -18, -9, 0],
                &[1, 3, 3, 1]
            ])
            .to_rows()
        );
        let h33 = matrix_of(&complex_hermite::<Exact>(3, 3));
        assert_eq!(
            h33.rows,
            BiPoly::<Exact>::from_int_rows(&[&[-6], &[0, 18], &[0, 0, -9], &[0, 0, 0, 1]])
                .to_rows()
        );
        let shown = matrix_of(&gchp_series(2, 2, &p)).to_string();
        assert_eq!(shown, "[  2   0   0 ]\n[ -4  -4   0 ]\n[  1   2   1 ]\n");
    }

    #[test]
    fn square_matrices_are_lower_triangular() {
        for p in test_set() {
            for m in 0..=6 {
                assert!(check_square_matrix(m, &p), "{} m={m}", p.label());
            }
        }
        assert!(check_square_matrix(4, &params((2, 1), 1, 1).to_float()));
    }

    #[test]
    fn diagonals_are_hermite_polynomials() {
        let p = params((1, 1), 2, 0);
        let d = diagonal_decomposition(3, &p).unwrap();
        let scales: Vec<Exact> = d.iter().map(|t| t.scale.clone()).collect();
        assert_eq!(scales, [1, 3, 3, 1].map(Exact::from_int).to_vec());
        assert_eq!(d[0].hermite, complex_hermite(3, 3));
        // displayed component matrix of 3·H^{3,2}
        assert_eq!(
            d[1].hermite.scale(&d[1].scale),
            BiPoly::from_int_rows(&[&[0], &[18], &[0, -18], &[0, 0, 3]])
        );
        let d0 = diagonal_decomposition(0, &p).unwrap();
        assert_eq!(d0.len(), 1);
        assert_eq!(d0[0].hermite, BiPoly::one());
        assert_eq!(gchp_series(2, 2, &p).diagonal(0), complex_hermite(2, 2));
        for p in test_set() {
            for m in 0..=6 {
                assert!(diagonal_decomposition(m, &p).is_ok());
            }
        }
    }

    fn symbolic_44(nu: &Exact, h: &Exact) -> BiPoly<Exact> {
        let q = |a: i64, i: u32, j: u32| Exact::from_int(a) * nu.powu(i) * h.powu(j);
        BiPoly::from_rows(vec![
            vec![q(24, 0, 0)],
            vec![q(-96, 0, 1), q(-96, 1, 0)],
            vec![q(72, 0, 2), q(144, 1, 1), q(72, 2, 0)],
            vec![q(-16, 0, 3), q(-48, 1, 2), q(-48, 2, 1), q(-16, 3, 0)],
            vec![q(1, 0, 4), q(4, 1, 3), q(6, 2, 2), q(4, 3, 1), q(1, 4, 0)],
        ])
    }

    fn symbolic_43(nu: &Exact, h: &Exact) -> BiPoly<Exact> {
        let q = |a: i64, i: u32, j: u32| Exact::from_int(a) * nu.powu(i) * h.powu(j);
        let z = Exact::zero;
        BiPoly::from_rows(vec![
            vec![z(), z(), z(), z()],
            vec![q(-24, 0, 0), z(), z(), z()],
            vec![q(36, 0, 1), q(36, 1, 0), z(), z()],
            vec![q(-12, 0, 2), q(-24, 1, 1), q(-12, 2, 0), z()],
            vec![q(1, 0, 3), q(3, 1, 2), q(3, 2, 1), q(1, 3, 0)],
        ])
    }

    #[test]
    fn symbolic_matrices_and_xi_derivative() {
        for p in test_set() {
            let h = p.half_xi_conj();
            assert_eq!(gchp_series(4, 4, &p), symbolic_44(p.nu(), &h));
            assert_eq!(gchp_series(4, 3, &p), symbolic_43(p.nu(), &h));
            let m43 = matrix_with_shape(&gchp_series(4, 3, &p), 5, 4);
            assert_eq!((m43.n_rows(), m43.n_cols()), (5, 4));
            assert!(m43.rows[0].iter().all(Scalar::is_zero));
            let d = drop_column_differentiate(4, 4, &p).unwrap();
            assert_eq!(d, gchp_series(4, 3, &p).scale(&Exact::from_int(2)));
            for m in 0..=5 {
                for n in 1..=5 {
                    let d = drop_column_differentiate(m, n, &p).unwrap();
                    assert_eq!(d, gchp_partials(m, n, &p).unwrap().dxibar);
                }
            }
        }
        // (m,1): G^{m,1} = z^m w - m z^{m-1}, so the ξ*-derivative is z^m/2
        let p = params((3, 1), 1, 2);
        assert_eq!(
            drop_column_differentiate(3, 1, &p).unwrap(),
            BiPoly::monomial(3, 0, Exact::from_ratio(1, 2))
        );
        assert!(drop_column_differentiate(2, 0, &p).is_err());
    }

    #[test]
    fn float_mode_checks() {
        let p: Params<Float> = params((1, 4), 0, -1).to_float();
        assert_eq!(
            verify_shifted_hermite_sum(3, 3, &p).status(),
            IdentityStatus::Erratum
        );
        assert_eq!(
            verify_shifted_hermite_sum(2, 4, &p).status(),
            IdentityStatus::Verified
        );
        assert!(drop_column_differentiate(4, 4, &p).is_ok());
    }
}
