//! Dense bivariate polynomials in `z` and `z*`.
//!
//! A [`BiPoly`] stores the coefficient grid `p[j][k]` of `z^j z*^k`, rows
//! indexed by the power of `z` and columns by the power of `z*`. The grid is
//! kept normalized: trailing all-zero rows and columns are trimmed after
//! every public operation, so `deg_z`/`deg_zbar` are canonical and derived
//! equality is polynomial equality.

use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::{convert, Coefficient, Exact, Float, Mode, Ring, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly<S> {
    coeffs: Vec<S>,
    rows: usize,
    cols: usize,
}

impl<S: Scalar> BiPoly<S> {
    fn from_grid(rows: usize, cols: usize, coeffs: Vec<S>) -> Self {
        debug_assert_eq!(coeffs.len(), rows * cols);
        let mut p = BiPoly { coeffs, rows, cols };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        let mut rows = self.rows;
        while rows > 1 && (0..self.cols).all(|k| self.coeffs[(rows - 1) * self.cols + k].is_zero())
        {
            rows -= 1;
        }
        let mut cols = self.cols;
        while cols > 1 && (0..rows).all(|j| self.coeffs[j * self.cols + cols - 1].is_zero()) {
            cols -= 1;
        }
        if rows == self.rows && cols == self.cols {
            return;
        }
        let mut out = Vec::with_capacity(rows * cols);
        for j in 0..rows {
            out.extend_from_slice(&self.coeffs[j * self.cols..j * self.cols + cols]);
        }
        self.coeffs = out;
        self.rows = rows;
        self.cols = cols;
    }

    pub fn zero() -> Self {
        Self::constant(S::zero())
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::from_grid(1, 1, vec![c])
    }

    /// `c · z^j z*^k`.
    pub fn monomial(j: usize, k: usize, c: S) -> Self {
        let cols = k + 1;
        let mut coeffs = vec![S::zero(); (j + 1) * cols];
        coeffs[j * cols + k] = c;
        Self::from_grid(j + 1, cols, coeffs)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, S::one())
    }

    pub fn zbar() -> Self {
        Self::monomial(0, 1, S::one())
    }

    /// Build from rows (row `j` holds the coefficients of `z^j z*^0, z^j z*^1, ...`).
    /// Short rows are padded with zeros.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        if rows.is_empty() {
            return Self::zero();
        }
        let cols = rows.iter().map(Vec::len).max().unwrap_or(1).max(1);
        let n_rows = rows.len();
        let mut coeffs = Vec::with_capacity(n_rows * cols);
        for row in rows {
            let pad = cols - row.len();
            coeffs.extend(row);
            coeffs.extend(std::iter::repeat_with(S::zero).take(pad));
        }
        Self::from_grid(n_rows, cols, coeffs)
    }

    /// Integer grid convenience, used heavily for tables.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| S::from_int(c)).collect())
                .collect(),
        )
    }

    pub fn deg_z(&self) -> usize {
        self.rows - 1
    }

    pub fn deg_zbar(&self) -> usize {
        self.cols - 1
    }

    /// Largest `j + k` over nonzero terms.
    pub fn total_degree(&self) -> usize {
        self.terms().map(|(j, k, _)| j + k).max().unwrap_or(0)
    }

    pub fn get(&self, j: usize, k: usize) -> Option<&S> {
        (j < self.rows && k < self.cols).then(|| &self.coeffs[j * self.cols + k])
    }

    /// Coefficient of `z^j z*^k` (zero outside the grid).
    pub fn coeff(&self, j: usize, k: usize) -> S {
        self.get(j, k).cloned().unwrap_or_else(S::zero)
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        self.coeffs.chunks(self.cols).map(<[S]>::to_vec).collect()
    }

    /// Nonzero terms as `(j, k, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &S)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i / self.cols, i % self.cols, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> BiPoly<T> {
        BiPoly::from_grid(self.rows, self.cols, self.coeffs.iter().map(f).collect())
    }

    pub fn convert<T: Scalar>(&self) -> BiPoly<T> {
        self.map(convert::<S, T>)
    }

    pub fn to_float(&self) -> BiPoly<Float> {
        self.convert()
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn checked_add(&self, other: &Self) -> Self {
        let rows = self.rows.max(other.rows);
        let cols = self.cols.max(other.cols);
        let mut coeffs = Vec::with_capacity(rows * cols);
        for j in 0..rows {
            for k in 0..cols {
                coeffs.push(match (self.get(j, k), other.get(j, k)) {
                    (Some(a), Some(b)) => a.clone() + b.clone(),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => S::zero(),
                });
            }
        }
        Self::from_grid(rows, cols, coeffs)
    }

    fn convolve(&self, other: &Self) -> Self {
        let rows = self.rows + other.rows - 1;
        let cols = self.cols + other.cols - 1;
        let mut coeffs = vec![S::zero(); rows * cols];
        for (j, k, a) in self.terms() {
            for (l, p, b) in other.terms() {
                let slot = &mut coeffs[(j + l) * cols + k + p];
                *slot = slot.clone() + a.clone() * b.clone();
            }
        }
        Self::from_grid(rows, cols, coeffs)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Formal `∂/∂z`, treating `z` and `z*` as independent.
    pub fn d_dz(&self) -> Self {
        if self.rows == 1 {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity((self.rows - 1) * self.cols);
        for j in 1..self.rows {
            let m = S::from_int(j as i64);
            for k in 0..self.cols {
                coeffs.push(self.coeffs[j * self.cols + k].clone() * m.clone());
            }
        }
        Self::from_grid(self.rows - 1, self.cols, coeffs)
    }

    /// Formal `∂/∂z*`.
    pub fn d_dzbar(&self) -> Self {
        if self.cols == 1 {
            return Self::zero();
        }
        let cols = self.cols - 1;
        let mut coeffs = Vec::with_capacity(self.rows * cols);
        for j in 0..self.rows {
            for k in 1..self.cols {
                coeffs.push(self.coeffs[j * self.cols + k].clone() * S::from_int(k as i64));
            }
        }
        Self::from_grid(self.rows, cols, coeffs)
    }

    /// Value at `z` with `z*` bound to the conjugate of `z`.
    pub fn eval(&self, z: &S) -> S {
        self.eval_pair(z, &z.conj())
    }

    /// Value with independent bindings for `z` and `z*` (nested Horner).
    pub fn eval_pair(&self, z: &S, zbar: &S) -> S {
        self.coeffs
            .chunks(self.cols)
            .rev()
            .fold(S::zero(), |acc, row| {
                let inner = row
                    .iter()
                    .rev()
                    .fold(S::zero(), |a, c| a * zbar.clone() + c.clone());
                acc * z.clone() + inner
            })
    }

    /// `Σ |p_jk| |z|^{j+k}`: an upper bound on `|P(z, conj z)|` and the
    /// natural scale for relative errors near zeros of `P`.
    pub fn eval_abs(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.terms()
            .map(|(j, k, c)| c.abs() * r.powi((j + k) as i32))
            .sum()
    }

    /// The polynomial `Q` with `Q(z, z*) = conj(P(z, z*))` on the diagonal
    /// `z* = conj(z)`: transpose and conjugate every coefficient.
    pub fn conj_poly(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.rows * self.cols);
        for k in 0..self.cols {
            for j in 0..self.rows {
                coeffs.push(self.coeffs[j * self.cols + k].conj());
            }
        }
        Self::from_grid(self.cols, self.rows, coeffs)
    }

    /// Formal substitution `z* → q(z, z*)`: `Σ p_jk z^j q^k`.
    pub fn substitute_zbar(&self, q: &Self) -> Self {
        let mut q_pow = Self::one();
        let mut out = Self::zero();
        for k in 0..self.cols {
            let column: Vec<Vec<S>> = (0..self.rows)
                .map(|j| vec![self.coeffs[j * self.cols + k].clone()])
                .collect();
            out = &out + &(&Self::from_rows(column) * &q_pow);
            q_pow = &q_pow * q;
        }
        out
    }

    /// `P(sz·z, szbar·z*)`.
    pub fn scale_vars(&self, sz: &S, szbar: &S) -> Self {
        let mut coeffs = self.coeffs.clone();
        for j in 0..self.rows {
            let row_scale = sz.powu(j as u32);
            for k in 0..self.cols {
                let c = &mut coeffs[j * self.cols + k];
                *c = c.clone() * row_scale.clone() * szbar.powu(k as u32);
            }
        }
        Self::from_grid(self.rows, self.cols, coeffs)
    }

    /// Keep only the terms with `j - k == offset` (a sub-diagonal of the grid).
    pub fn diagonal(&self, offset: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        for j in 0..self.rows {
            for k in 0..self.cols {
                if j != k + offset {
                    coeffs[j * self.cols + k] = S::zero();
                }
            }
        }
        Self::from_grid(self.rows, self.cols, coeffs)
    }

    /// Drop the highest `z*` column.
    pub fn drop_last_column(&self) -> Self {
        if self.cols == 1 {
            return Self::zero();
        }
        let cols = self.cols - 1;
        let mut coeffs = Vec::with_capacity(self.rows * cols);
        for j in 0..self.rows {
            coeffs.extend_from_slice(&self.coeffs[j * self.cols..j * self.cols + cols]);
        }
        Self::from_grid(self.rows, cols, coeffs)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(Scalar::abs).fold(0.0, f64::max)
    }

    /// Exact mode: exact equality, `tol` ignored. Float mode: every
    /// coefficient difference within `tol · max(|a|_max, |b|_max)`.
    pub fn equal_within(&self, other: &Self, tol: f64) -> bool {
        match S::MODE {
            Mode::Exact => self == other,
            Mode::Float => {
                let scale = self.max_abs().max(other.max_abs());
                self.max_abs_diff(other) <= tol * scale
            }
        }
    }

    /// Largest coefficient-wise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self - other).max_abs()
    }
}

impl<S: Scalar> Add for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn add(self, rhs: Self) -> BiPoly<S> {
        self.checked_add(rhs)
    }
}

impl<S: Scalar> Sub for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn sub(self, rhs: Self) -> BiPoly<S> {
        self.checked_add(&-rhs)
    }
}

impl<S: Scalar> Mul for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn mul(self, rhs: Self) -> BiPoly<S> {
        self.convolve(rhs)
    }
}

impl<S: Scalar> Neg for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn neg(self) -> BiPoly<S> {
        self.map(|c| -c.clone())
    }
}

macro_rules! forward_by_value {
    ($tr:ident, $method:ident) => {
        impl<S: Scalar> $tr for BiPoly<S> {
            type Output = BiPoly<S>;
            fn $method(self, rhs: Self) -> BiPoly<S> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_by_value!(Add, add);
forward_by_value!(Sub, sub);
forward_by_value!(Mul, mul);

impl<S: Scalar> Neg for BiPoly<S> {
    type Output = BiPoly<S>;
    fn neg(self) -> BiPoly<S> {
        -&self
    }
}

impl<S: Scalar> Ring for BiPoly<S> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::constant(S::from_ratio(num, den))
    }
}

/// A polynomial whose coefficient mode is chosen at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyPoly {
    Exact(BiPoly<Exact>),
    Float(BiPoly<Float>),
}

impl AnyPoly {
    pub fn mode(&self) -> Mode {
        match self {
            AnyPoly::Exact(_) => Mode::Exact,
            AnyPoly::Float(_) => Mode::Float,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (AnyPoly::Exact(a), AnyPoly::Exact(b)) => Ok(AnyPoly::Exact(a + b)),
            (AnyPoly::Float(a), AnyPoly::Float(b)) => Ok(AnyPoly::Float(a + b)),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (AnyPoly::Exact(a), AnyPoly::Exact(b)) => Ok(AnyPoly::Exact(a * b)),
            (AnyPoly::Float(a), AnyPoly::Float(b)) => Ok(AnyPoly::Float(a * b)),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn eval(&self, z: &Coefficient) -> Result<Coefficient> {
        match (self, z) {
            (AnyPoly::Exact(p), Coefficient::Exact(z)) => Ok(p.eval(z).into()),
            (AnyPoly::Float(p), Coefficient::Float(z)) => Ok(p.eval(z).into()),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn to_float(&self) -> BiPoly<Float> {
        match self {
            AnyPoly::Exact(p) => p.to_float(),
            AnyPoly::Float(p) => p.clone(),
        }
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        self.to_float().eval(&z)
    }
}

impl From<BiPoly<Exact>> for AnyPoly {
    fn from(p: BiPoly<Exact>) -> Self {
        AnyPoly::Exact(p)
    }
}

impl From<BiPoly<Float>> for AnyPoly {
    fn from(p: BiPoly<Float>) -> Self {
        AnyPoly::Float(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Ring;
    use proptest::prelude::*;

    type P = BiPoly<Exact>;

    fn ints(rows: &[&[i64]]) -> P {
        P::from_int_rows(rows)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&P::z() + &P::zbar(), ints(&[&[0, 1], &[1]]));
        let p = ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(&p + &P::zero(), p);
        let zzbar_minus_one = ints(&[&[-1], &[0, 1]]);
        let sum = &zzbar_minus_one + &P::one();
        assert_eq!(sum, P::monomial(1, 1, Exact::one()));
        assert_eq!((sum.deg_z(), sum.deg_zbar()), (1, 1));
    }

    #[test]
    fn cancellation_trims_degrees() {
        let p = ints(&[&[0, 0, 5], &[1]]);
        let q = ints(&[&[0, 0, -5]]);
        let s = &p + &q;
        assert_eq!((s.deg_z(), s.deg_zbar()), (1, 0));
        assert!((&p - &p).is_zero());
        assert_eq!(((&p - &p).deg_z(), (&p - &p).deg_zbar()), (0, 0));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&P::z() * &P::zbar(), P::monomial(1, 1, Exact::one()));
        let zb1 = &P::zbar() + &P::one();
        assert_eq!(zb1.pow(2), ints(&[&[1, 2, 1]]));
        let g11 = &(&P::z() * &zb1) - &P::one();
        assert_eq!(g11.to_rows(), ints(&[&[-1, 0], &[1, 1]]).to_rows());
        assert_eq!(g11.deg_z(), 1);
    }

    #[test]
    fn derivative_examples() {
        let z5 = P::monomial(5, 0, Exact::one());
        assert_eq!(z5.d_dz(), P::monomial(4, 0, Exact::from_int(5)));
        assert!(z5.d_dzbar().is_zero());
        let p = P::monomial(1, 2, Exact::one());
        assert_eq!(p.d_dzbar(), P::monomial(1, 1, Exact::from_int(2)));
    }

    #[test]
    fn eval_examples() {
        let zzbar = P::monomial(1, 1, Exact::one());
        let w = Exact::new(Exact::one().re, Exact::one().re);
        assert_eq!(zzbar.eval(&w), Exact::from_int(2));
        let c = Exact::from_ratio(7, 3);
        assert_eq!(P::constant(c.clone()).eval(&Exact::i()), c);
    }

    #[test]
    fn equal_within_examples() {
        let p = ints(&[&[1, 2], &[3]]);
        assert!(p.equal_within(&p, 0.0));
        assert!(!P::z().equal_within(&P::zbar(), 1e9));
        let f = p.to_float();
        let g = f.map(|c| c * Float::new(1.0 + 1e-13, 0.0));
        assert!(f.equal_within(&g, 1e-10));
        assert!(!f.equal_within(&g, 1e-15));
    }

    #[test]
    fn conj_poly_matches_pointwise_conjugate() {
        let p = P::from_rows(vec![
            vec![Exact::i(), Exact::from_int(2)],
            vec![Exact::from_ratio(1, 3), Exact::i() * Exact::from_int(-4)],
        ]);
        let z = Exact::from_rationals(Exact::from_ratio(1, 2).re, Exact::from_ratio(-3, 1).re);
        assert_eq!(p.conj_poly().eval(&z), p.eval(&z).conj());
    }

    #[test]
    fn substitution_and_scaling() {
        // (z z*)|_{z* -> z* + 1} = z z* + z
        let p = P::monomial(1, 1, Exact::one());
        let q = &P::zbar() + &P::one();
        assert_eq!(p.substitute_zbar(&q), ints(&[&[0], &[1, 1]]));
        let s = p.scale_vars(&Exact::from_int(2), &Exact::from_int(3));
        assert_eq!(s, P::monomial(1, 1, Exact::from_int(6)));
    }

    #[test]
    fn runtime_mode_mismatch() {
        let a = AnyPoly::from(P::z());
        let b = AnyPoly::from(P::z().to_float());
        assert!(matches!(a.add(&b), Err(Error::ModeMismatch)));
        assert!(matches!(a.mul(&b), Err(Error::ModeMismatch)));
        assert!(a.add(&a).is_ok());
    }

    fn small_poly() -> impl Strategy<Value = P> {
        (1usize..4, 1usize..4)
            .prop_flat_map(|(r, c)| {
                proptest::collection::vec((-5i64..6, -5i64..6), r * c).prop_map(move |v| (r, c, v))
            })
            .prop_map(|(r, c, v)| {
                let rows = v
                    .chunks(c)
                    .map(|ch| {
                        ch.iter()
                            .map(|&(a, b)| Exact::from_int(a) + Exact::i() * Exact::from_int(b))
                            .collect()
                    })
                    .collect::<Vec<_>>();
                debug_assert_eq!(rows.len(), r);
                P::from_rows(rows)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn derivatives_commute(a in small_poly()) {
            prop_assert_eq!(a.d_dz().d_dzbar(), a.d_dzbar().d_dz());
        }

        #[test]
        fn eval_is_multiplicative(a in small_poly(), b in small_poly(), re in -2.0f64..2.0, im in -2.0f64..2.0) {
            let z = Float::new(re, im);
            let (fa, fb) = (a.to_float(), b.to_float());
            let lhs = (&fa * &fb).eval(&z);
            let rhs = fa.eval(&z) * fb.eval(&z);
            prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm().max(1.0));
        }
    }
}
