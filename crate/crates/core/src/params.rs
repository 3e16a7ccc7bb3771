use crate::error::{Error, Result};
use crate::poly::BiPoly;
use crate::scalar::{convert, Float, Scalar};

/// Magnetic parameters: field strength `nu > 0` and shift `xi ∈ ℂ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<S> {
    nu: S,
    xi: S,
}

impl<S: Scalar> Params<S> {
    pub fn new(nu: S, xi: S) -> Result<Self> {
        let v = nu.to_c64();
        if !nu.is_real() || v.re.is_nan() || v.re <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "nu must be real and positive, got {}",
                nu.render()
            )));
        }
        Ok(Params { nu, xi })
    }

    /// Rational shorthand: `nu = nu_num/nu_den`, `xi = xi_re + xi_im·i`.
    pub fn rational(
        nu_num: i64,
        nu_den: i64,
        xi_re: (i64, i64),
        xi_im: (i64, i64),
    ) -> Result<Self> {
        let xi = S::from_ratio(xi_re.0, xi_re.1) + S::i() * S::from_ratio(xi_im.0, xi_im.1);
        Self::new(S::from_ratio(nu_num, nu_den), xi)
    }

    pub fn nu(&self) -> &S {
        &self.nu
    }

    pub fn xi(&self) -> &S {
        &self.xi
    }

    pub fn xi_conj(&self) -> S {
        self.xi.conj()
    }

    /// `ξ*/2`.
    pub fn half_xi_conj(&self) -> S {
        self.xi.conj().div_int(2)
    }

    /// `S(z) = νz + ξ`.
    pub fn s_poly(&self) -> BiPoly<S> {
        &BiPoly::monomial(1, 0, self.nu.clone()) + &BiPoly::constant(self.xi.clone())
    }

    /// `S*(z) = νz* + ξ*`.
    pub fn s_conj_poly(&self) -> BiPoly<S> {
        &BiPoly::monomial(0, 1, self.nu.clone()) + &BiPoly::constant(self.xi_conj())
    }

    /// `νz* + ξ*/2`, the variable that replaces `z*` in the classical
    /// complex Hermite polynomials.
    pub fn zbar_shift(&self) -> BiPoly<S> {
        &BiPoly::monomial(0, 1, self.nu.clone()) + &BiPoly::constant(self.half_xi_conj())
    }

    /// `|ξ|²/(4ν)`, the argument of every Kummer function in the norms.
    pub fn kummer_arg(&self) -> S {
        let four_nu_inv = (self.nu.clone() * S::from_int(4)).inv().expect("nu > 0");
        self.xi.clone() * self.xi.conj() * four_nu_inv
    }

    pub fn is_xi_zero(&self) -> bool {
        self.xi.is_zero()
    }

    pub fn convert<T: Scalar>(&self) -> Params<T> {
        Params {
            nu: convert(&self.nu),
            xi: convert(&self.xi),
        }
    }

    pub fn to_float(&self) -> Params<Float> {
        self.convert()
    }

    /// Compact label such as `nu=1/4,xi=-1i`.
    pub fn label(&self) -> String {
        format!("nu={},xi={}", self.nu.render(), self.xi.render())
    }

    pub(crate) fn key(&self) -> String {
        format!("{}#{}", self.nu.key(), self.xi.key())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;
    use crate::scalar::Ring;

    #[test]
    fn rejects_nonpositive_nu() {
        assert!(Params::<Exact>::new(Exact::from_int(0), Exact::zero()).is_err());
        assert!(Params::<Exact>::new(Exact::from_int(-1), Exact::zero()).is_err());
        assert!(Params::<Exact>::new(Exact::i(), Exact::zero()).is_err());
        assert!(Params::<Float>::new(Float::new(f64::NAN, 0.0), Float::zero()).is_err());
    }

    #[test]
    fn derived_quantities() {
        let p = Params::<Exact>::rational(2, 1, (1, 1), (1, 1)).unwrap();
        assert_eq!(p.kummer_arg(), Exact::from_ratio(1, 4));
        let z = Exact::from_int(3);
        // S(3) = 6 + 1 + i, S*(3) = 6 + 1 - i
        assert_eq!(p.s_poly().eval(&z), Exact::from_int(7) + Exact::i());
        assert_eq!(p.s_conj_poly().eval(&z), Exact::from_int(7) - Exact::i());
        assert_eq!(
            p.zbar_shift().eval(&z),
            Exact::from_ratio(13, 2) - Exact::from_ratio(1, 2) * Exact::i()
        );
    }
}
