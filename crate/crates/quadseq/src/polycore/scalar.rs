//! The universal scalar: Q, Q(alpha), or a simple radical extension tower.

use crate::error::{Error, Result};
use crate::polycore::radical::RadicalElem;
use crate::polycore::ratfunc::RatFunc;
use crate::polycore::Rat;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rat),
    Func(RatFunc),
    Radical(RadicalElem),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rat::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(Rat::from_integer(n.into()))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Scalar::Rat(Rat::new(n.into(), d.into()))
    }

    pub fn alpha() -> Self {
        Scalar::Func(RatFunc::alpha())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(c) => c.is_zero(),
            Scalar::Func(f) => f.is_zero(),
            Scalar::Radical(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(c) => c.is_one(),
            Scalar::Func(f) => f.is_one(),
            Scalar::Radical(r) => r.is_one(),
        }
    }

    pub fn as_rat(&self) -> Option<Rat> {
        match self {
            Scalar::Rat(c) => Some(c.clone()),
            Scalar::Func(f) => f.as_rat(),
            Scalar::Radical(r) => r.as_rat(),
        }
    }

    /// Promotes a pair to a common domain. Q embeds into Q(alpha) and into
    /// any radical tower; Q(alpha) and radical towers do not mix.
    fn promote(a: &Scalar, b: &Scalar) -> Result<(Scalar, Scalar)> {
        use Scalar::*;
        Ok(match (a, b) {
            (Rat(_), Rat(_)) | (Func(_), Func(_)) | (Radical(_), Radical(_)) => {
                (a.clone(), b.clone())
            }
            (Rat(c), Func(_)) => (Func(RatFunc::from_rat(c.clone())), b.clone()),
            (Func(_), Rat(c)) => (a.clone(), Func(RatFunc::from_rat(c.clone()))),
            (Rat(c), Radical(r)) => (
                Radical(RadicalElem::from_rat(r.sig().clone(), c.clone())),
                b.clone(),
            ),
            (Radical(r), Rat(c)) => (
                a.clone(),
                Radical(RadicalElem::from_rat(r.sig().clone(), c.clone())),
            ),
            (Func(_), Radical(_)) | (Radical(_), Func(_)) => {
                return Err(Error::ScalarDomain(
                    "cannot mix Q(alpha) with a radical tower".into(),
                ))
            }
        })
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        let (a, b) = Scalar::promote(self, other)?;
        Ok(match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Func(x), Scalar::Func(y)) => Scalar::Func(x.add(&y)),
            (Scalar::Radical(x), Scalar::Radical(y)) => Scalar::Radical(x.add(&y)?),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(c) => Scalar::Rat(-c.clone()),
            Scalar::Func(f) => Scalar::Func(f.neg()),
            Scalar::Radical(r) => Scalar::Radical(r.neg()),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        let (a, b) = Scalar::promote(self, other)?;
        Ok(match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Func(x), Scalar::Func(y)) => Scalar::Func(x.mul(&y)),
            (Scalar::Radical(x), Scalar::Radical(y)) => Scalar::Radical(x.mul(&y)?),
            _ => unreachable!(),
        })
    }

    pub fn inverse(&self) -> Result<Scalar> {
        Ok(match self {
            Scalar::Rat(c) => {
                if c.is_zero() {
                    return Err(Error::ZeroDivisor);
                }
                Scalar::Rat(Rat::one() / c.clone())
            }
            Scalar::Func(f) => Scalar::Func(f.inverse()?),
            Scalar::Radical(r) => Scalar::Radical(r.inverse()?),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.mul(&other.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Result<Scalar> {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Canonical text form; rationals render as "num/den".
    pub fn render(&self) -> String {
        match self {
            Scalar::Rat(c) => format!("{}/{}", c.numer(), c.denom()),
            Scalar::Func(f) => f.render(),
            Scalar::Radical(r) => r.render(),
        }
    }

}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotion_rat_func() {
        let a = Scalar::alpha();
        let two = Scalar::from_int(2);
        let s = a.add(&two).unwrap();
        // (alpha + 2) - alpha = 2
        assert_eq!(s.sub(&a).unwrap().as_rat(), Some(Rat::from_integer(2.into())));
    }

    #[test]
    fn promotion_rat_radical() {
        let b = Scalar::Radical(RadicalElem::root(2, Rat::from_integer(5.into())).unwrap());
        let x = b.add(&Scalar::from_int(1)).unwrap(); // 1 + sqrt5
        let y = x.mul(&x).unwrap(); // 6 + 2 sqrt5
        let z = y.sub(&b.mul(&Scalar::from_int(2)).unwrap()).unwrap();
        assert_eq!(z.as_rat(), Some(Rat::from_integer(6.into())));
    }

    #[test]
    fn func_radical_mix_rejected() {
        let a = Scalar::alpha();
        let b = Scalar::Radical(RadicalElem::root(2, Rat::from_integer(5.into())).unwrap());
        assert!(a.add(&b).is_err());
    }
}
