//! Exact scalars and sparse multivariate polynomial arithmetic over Q,
//! Q(alpha), and simple radical extension towers.

pub mod mpoly;
pub mod radical;
pub mod ratfunc;
pub mod reduce;
pub mod scalar;
pub mod upoly;

pub use mpoly::{MPoly, Mono};
pub use radical::{RadicalElem, RadicalSig};
pub use ratfunc::RatFunc;
pub use reduce::{m_identity_coeffs, power_var_names, reduce_linear_in_powers, GenBasis};
pub use scalar::Scalar;
pub use upoly::UPoly;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational number; invariants (reduced form, positive
/// denominator) are maintained by `num_rational`.
pub type Rat = num_rational::BigRational;

/// Exact k-th root of a rational number, if one exists. For even k the
/// nonnegative root is returned (callers add the sign choice).
pub fn rat_kth_root(r: &Rat, k: u32) -> Option<Rat> {
    if r.is_zero() {
        return Some(Rat::zero());
    }
    if k % 2 == 0 && r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let rn = int_kth_root(num, k)?;
    let rd = int_kth_root(den, k)?;
    Some(Rat::new(rn, rd))
}

/// Exact k-th root of an integer, if one exists (sign-aware for odd k).
pub fn int_kth_root(v: &BigInt, k: u32) -> Option<BigInt> {
    if v.is_zero() {
        return Some(BigInt::from(0));
    }
    if v.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return int_kth_root(&-v, k).map(|r| -r);
    }
    let root = v.nth_root(k);
    if num_traits::pow::pow(root.clone(), k as usize) == *v {
        Some(root)
    } else {
        None
    }
}

/// True when r is the square of a rational.
pub fn rat_is_square(r: &Rat) -> bool {
    rat_kth_root(r, 2).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn roots() {
        assert_eq!(rat_kth_root(&r(25, 4), 2), Some(r(5, 2)));
        assert_eq!(rat_kth_root(&r(-27, 8), 3), Some(r(-3, 2)));
        assert_eq!(rat_kth_root(&r(-4, 1), 2), None);
        assert_eq!(rat_kth_root(&r(22, 1), 3), None);
        assert!(rat_is_square(&r(49, 9)));
        assert!(!rat_is_square(&r(2, 1)));
    }
}
