//! Dense univariate polynomials over Q, the backing store for `RatFunc`.

use crate::polycore::Rat;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Univariate polynomial over Q. `coeffs[i]` is the coefficient of `t^i`;
/// no trailing zeros are stored, the zero polynomial has an empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = UPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn var() -> Self {
        UPoly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = UPoly { coeffs };
        p.trim();
        p
    }

    /// Convenience: polynomial from integer coefficients, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::from_coeffs(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        UPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Long division; panics if `div` is zero.
    pub fn divrem(&self, div: &UPoly) -> (UPoly, UPoly) {
        assert!(!div.is_zero(), "UPoly division by zero");
        let dd = div.degree().unwrap();
        let lead = div.leading_coeff();
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.leading_coeff() / lead.clone();
            let shift = rd - dd;
            quot[shift] = q.clone();
            // rem -= q * t^shift * div
            let mut new = rem.coeffs.clone();
            for (i, c) in div.coeffs.iter().enumerate() {
                new[i + shift] -= &q * c;
            }
            rem = UPoly::from_coeffs(new);
        }
        (UPoly::from_coeffs(quot), rem)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn make_monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let lead = self.leading_coeff();
        self.scale(&(Rat::one() / lead))
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Canonical text with the given variable name, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = format!("{}/{}", c.numer(), c.denom());
            let term = match i {
                0 => coef,
                1 => format!("{coef}*{var}"),
                _ => format!("{coef}*{var}^{i}"),
            };
            parts.push(term);
        }
        join_signed(&parts)
    }
}

/// Joins rendered terms, folding a leading minus sign into " - " separators.
pub(crate) fn join_signed(parts: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(p);
        } else if let Some(stripped) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn divrem_exact() {
        // (t^2 - 1) / (t - 1) = t + 1
        let p = UPoly::from_ints(&[-1, 0, 1]);
        let d = UPoly::from_ints(&[-1, 1]);
        let (q, rem) = p.divrem(&d);
        assert_eq!(q, UPoly::from_ints(&[1, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn gcd_monic() {
        // gcd(t^2-1, t^2-2t+1) = t-1
        let a = UPoly::from_ints(&[-1, 0, 1]);
        let b = UPoly::from_ints(&[1, -2, 1]);
        assert_eq!(a.gcd(&b), UPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn eval_horner() {
        let p = UPoly::from_ints(&[1, -2, 3]); // 3t^2 - 2t + 1
        assert_eq!(p.eval(&r(2)), r(9));
    }
}
