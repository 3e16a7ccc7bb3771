//! Coefficient fields.
//!
//! Every polynomial in this crate is generic over a [`Scalar`]: either
//! [`Exact`] (Gaussian rationals, `Complex<BigRational>`) or [`Float`]
//! (`Complex<f64>`). Because the field is a type parameter, an expression
//! that mixes the two modes does not compile. Values whose mode is only
//! known at run time (CLI input) go through [`Coefficient`], whose
//! arithmetic reports [`Error::ModeMismatch`] instead.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::complex::Complex64;
use num::{BigInt, BigRational, Complex, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Gaussian rational `p + q·i` with arbitrary-precision `p`, `q`.
pub type Exact = Complex<BigRational>;
/// Double-precision complex number.
pub type Float = Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

/// Commutative ring with a rational embedding. Implemented by scalars and
/// by [`BiPoly`](crate::BiPoly), so recurrences such as Laguerre's can run
/// over point values or over whole polynomials.
pub trait Ring:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// The rational `num/den` embedded in the ring. `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
}

pub trait Scalar: Ring + PartialEq + Debug + Send + Sync + 'static {
    const MODE: Mode;

    fn zero() -> Self {
        Self::from_int(0)
    }

    fn one() -> Self {
        Self::from_int(1)
    }

    fn i() -> Self;

    /// Complex number with the given real and imaginary parts. Exact mode
    /// keeps the binary value of each `f64` exactly.
    fn from_parts(re: f64, im: f64) -> Self;

    fn from_rationals(re: BigRational, im: BigRational) -> Self;

    fn conj(&self) -> Self;

    fn is_zero(&self) -> bool;

    fn inv(&self) -> Option<Self>;

    fn to_c64(&self) -> Complex64;

    /// Real and imaginary parts as rationals (exact binary value in float mode).
    fn to_rationals(&self) -> (BigRational, BigRational);

    /// Principal square root of a nonnegative real value, if it exists in
    /// this field (exact mode requires a perfect-square rational).
    fn sqrt_real(&self) -> Option<Self>;

    fn is_real(&self) -> bool;

    fn abs(&self) -> f64 {
        self.to_c64().norm()
    }

    fn powu(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    fn div_int(&self, d: i64) -> Self {
        self.clone() * Self::from_ratio(1, d)
    }

    /// Human-readable form: `p/q` rationals in exact mode, decimals otherwise.
    fn render(&self) -> String;

    /// Canonical text used as a hash key.
    fn key(&self) -> String {
        format!("{self:?}")
    }
}

impl Ring for Exact {
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }
}

impl Ring for Float {
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
}

fn exact_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(BigRational::new(root(r.numer())?, root(r.denom())?))
}

fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Scalar for Exact {
    const MODE: Mode = Mode::Exact;

    fn i() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }

    fn from_parts(re: f64, im: f64) -> Self {
        let conv = |x: f64| BigRational::from_float(x).expect("finite input");
        Complex::new(conv(re), conv(im))
    }

    fn from_rationals(re: BigRational, im: BigRational) -> Self {
        Complex::new(re, im)
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        (!Scalar::is_zero(self)).then(|| Complex::inv(self))
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn to_rationals(&self) -> (BigRational, BigRational) {
        (self.re.clone(), self.im.clone())
    }

    fn sqrt_real(&self) -> Option<Self> {
        if !self.im.is_zero() {
            return None;
        }
        exact_sqrt(&self.re).map(|r| Complex::new(r, BigRational::zero()))
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    fn render(&self) -> String {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => render_rational(&self.re),
            (true, false) => format!("{}i", render_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                format!(
                    "{}{}{}i",
                    render_rational(&self.re),
                    sign,
                    render_rational(&self.im.abs())
                )
            }
        }
    }

    fn key(&self) -> String {
        format!("{}|{}", self.re, self.im)
    }
}

impl Scalar for Float {
    const MODE: Mode = Mode::Float;

    fn i() -> Self {
        Complex64::i()
    }

    fn from_parts(re: f64, im: f64) -> Self {
        Complex64::new(re, im)
    }

    fn from_rationals(re: BigRational, im: BigRational) -> Self {
        Complex64::new(
            re.to_f64().unwrap_or(f64::NAN),
            im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn inv(&self) -> Option<Self> {
        (!Scalar::is_zero(self)).then(|| Complex::inv(self))
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }

    fn to_rationals(&self) -> (BigRational, BigRational) {
        let conv = |x: f64| BigRational::from_float(x).expect("finite value");
        (conv(self.re), conv(self.im))
    }

    fn sqrt_real(&self) -> Option<Self> {
        (self.im == 0.0 && self.re >= 0.0).then(|| Complex64::new(self.re.sqrt(), 0.0))
    }

    fn is_real(&self) -> bool {
        self.im == 0.0
    }

    fn render(&self) -> String {
        if self.im == 0.0 {
            format!("{}", self.re)
        } else {
            format!("{}{:+}i", self.re, self.im)
        }
    }

    fn key(&self) -> String {
        format!("{:x}|{:x}", self.re.to_bits(), self.im.to_bits())
    }
}

/// Convert between fields. Exact → float rounds; float → exact is exact.
pub fn convert<A: Scalar, B: Scalar>(a: &A) -> B {
    let (re, im) = a.to_rationals();
    B::from_rationals(re, im)
}

/// `n!` in the field.
pub fn factorial<S: Scalar>(n: u32) -> S {
    (2..=n as i64).fold(S::one(), |acc, k| acc * S::from_int(k))
}

/// `C(n, k)` in the field; zero when `k > n`.
pub fn binomial<S: Scalar>(n: u32, k: u32) -> S {
    if k > n {
        return S::zero();
    }
    let k = k.min(n - k) as i64;
    let n = n as i64;
    // Product form keeps every intermediate integral.
    (0..k).fold(S::one(), |acc, i| acc * S::from_ratio(n - i, i + 1))
}

/// Parse a real number: `p/q` or a decimal literal. Exact mode keeps decimals
/// exact (`0.25` → `1/4`).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a number: `{s}`"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: BigInt = format!("{int_part}{frac_part}")
        .parse()
        .map_err(|_| bad())?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut value = BigRational::from_integer(all);
    if scale >= 0 {
        value *= num::pow(ten, scale as usize);
    } else {
        value /= num::pow(ten, (-scale) as usize);
    }
    Ok(if neg { -value } else { value })
}

/// Parse a complex scalar from its real and imaginary parts.
pub fn parse_scalar<S: Scalar>(re: &str, im: &str) -> Result<S> {
    Ok(S::from_rationals(parse_rational(re)?, parse_rational(im)?))
}

/// A scalar whose mode is known only at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum Coefficient {
    Exact(Exact),
    Float(Float),
}

impl Coefficient {
    pub fn mode(&self) -> Mode {
        match self {
            Coefficient::Exact(_) => Mode::Exact,
            Coefficient::Float(_) => Mode::Float,
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        match self {
            Coefficient::Exact(c) => c.to_c64(),
            Coefficient::Float(c) => *c,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Coefficient::Exact(c) => c.render(),
            Coefficient::Float(c) => c.render(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (Coefficient::Exact(a), Coefficient::Exact(b)) => Ok(Coefficient::Exact(a + b)),
            (Coefficient::Float(a), Coefficient::Float(b)) => Ok(Coefficient::Float(a + b)),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (Coefficient::Exact(a), Coefficient::Exact(b)) => Ok(Coefficient::Exact(a * b)),
            (Coefficient::Float(a), Coefficient::Float(b)) => Ok(Coefficient::Float(a * b)),
            _ => Err(Error::ModeMismatch),
        }
    }
}

impl From<Exact> for Coefficient {
    fn from(c: Exact) -> Self {
        Coefficient::Exact(c)
    }
}

impl From<Float> for Coefficient {
    fn from(c: Float) -> Self {
        Coefficient::Float(c)
    }
}
