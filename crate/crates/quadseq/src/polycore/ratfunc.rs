//! Rational functions in one formal parameter `alpha` over Q.

use crate::error::{Error, Result};
use crate::polycore::upoly::UPoly;
use crate::polycore::Rat;
use num_traits::One;
use std::fmt;

/// Reduced fraction of univariate polynomials: gcd(num, den) = 1, den monic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: UPoly::zero(),
                den: UPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g);
        let (den, _) = den.divrem(&g);
        let lead = den.leading_coeff();
        let inv = Rat::one() / lead;
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        RatFunc::from_poly(UPoly::constant(c))
    }

    /// The parameter alpha itself.
    pub fn alpha() -> Self {
        RatFunc::from_poly(UPoly::var())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Some(c) when this is a constant function.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.num.degree().map_or(true, |d| d == 0) && self.den.is_one() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::reduced(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        RatFunc::reduced(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inverse(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(RatFunc::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        let mut acc = RatFunc::from_rat(Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at a rational alpha; errors if the denominator vanishes.
    pub fn eval(&self, alpha: &Rat) -> Result<Rat> {
        let d = self.den.eval(alpha);
        if num_traits::Zero::is_zero(&d) {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.num.eval(alpha) / d)
    }

    pub fn render(&self) -> String {
        format!("({})/({})", self.num.render("alpha"), self.den.render("alpha"))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
