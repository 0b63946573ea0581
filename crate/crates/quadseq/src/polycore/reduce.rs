//! Reduction of polynomials in the k-th powers x_i^k modulo the surface
//! ideal, treated as linear forms in y_i = x_i^k.
//!
//! Both generator families pivot on the highest-index power they contain, so
//! the canonical remainder is a polynomial in y_1, y_2, y_3 only: every x_m^k
//! reduces to its expression through x_1^k, x_2^k, x_3^k.

use crate::error::{Error, Result};
use crate::polycore::mpoly::{MPoly, Mono};
use crate::polycore::scalar::Scalar;
use crate::polycore::Rat;

/// Which generator family drives the row reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenBasis {
    F,
    G,
}

/// Coefficients (c1, c2, c3) with c1*y1 + c2*y2 + c3*y3 = y_m on the surface:
/// c1 = (m-3)(m-2)/2, c2 = -((m-2)^2 - 1), c3 = (m-2)(m-1)/2.
pub fn m_identity_coeffs(m: i64) -> (Rat, Rat, Rat) {
    let half = Rat::new(1.into(), 2.into());
    let c1 = Rat::from_integer(((m - 3) * (m - 2)).into()) * &half;
    let c2 = -Rat::from_integer(((m - 2) * (m - 2) - 1).into());
    let c3 = Rat::from_integer(((m - 2) * (m - 1)).into()) * &half;
    (c1, c2, c3)
}

pub fn power_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Converts a polynomial in the monomials x_i^k into the same polynomial
/// with exponents divided by k (a polynomial "in the y_i").
fn to_y_poly(p: &MPoly, k: u32) -> Result<MPoly> {
    let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        let mut exps = Vec::with_capacity(m.0.len());
        for &e in &m.0 {
            if e % k != 0 {
                return Err(Error::NotInPowers(format!(
                    "monomial exponent {e} not a multiple of {k}"
                )));
            }
            exps.push(e / k);
        }
        terms.push((c.clone(), exps));
    }
    Ok(MPoly::from_terms(&vars, terms))
}

fn from_y_poly(p: &MPoly, k: u32) -> MPoly {
    let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    let terms = p
        .terms()
        .map(|(m, c)| (c.clone(), m.0.iter().map(|&e| e * k).collect()))
        .collect();
    MPoly::from_terms(&vars, terms)
}

/// Row-reduces `p` (a polynomial in the x_i^k) against the chosen generator
/// family of X_{n,k}; the canonical remainder involves only x1^k, x2^k, x3^k.
/// The remainder is zero exactly when `p` lies in the ideal.
pub fn reduce_linear_in_powers(p: &MPoly, n: usize, k: u32, basis: GenBasis) -> Result<MPoly> {
    if n < 3 {
        return Err(Error::BadParameter(format!("n must be >= 3, got {n}")));
    }
    if k < 2 {
        return Err(Error::BadParameter(format!("k must be >= 2, got {k}")));
    }
    let names = power_var_names(n);
    let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let embedded = p.embed_into(&vars)?;
    let mut y = to_y_poly(&embedded, k)?;
    for m in (4..=n).rev() {
        let name = format!("x{m}");
        let replacement = match basis {
            GenBasis::F => {
                // f_{m-3}: y_{m-3} - 3y_{m-2} + 3y_{m-1} - y_m = 0
                MPoly::from_int_terms(
                    &vars,
                    &[
                        (1, &unit_exps(n, m - 4)),
                        (-3, &unit_exps(n, m - 3)),
                        (3, &unit_exps(n, m - 2)),
                    ],
                )
            }
            GenBasis::G => {
                let (c1, c2, c3) = m_identity_coeffs(m as i64);
                MPoly::from_terms(
                    &vars,
                    vec![
                        (Scalar::Rat(c1), unit_exps(n, 0)),
                        (Scalar::Rat(c2), unit_exps(n, 1)),
                        (Scalar::Rat(c3), unit_exps(n, 2)),
                    ],
                )
            }
        };
        y = y.substitute_var(&name, &replacement)?;
    }
    Ok(from_y_poly(&y, k))
}

fn unit_exps(n: usize, idx: usize) -> Vec<u32> {
    let mut e = vec![0u32; n];
    e[idx] = 1;
    e
}

/// Canonical remainder of x_m^k itself: the right-hand side of the m-identity.
pub fn reduce_power_var(m: usize, n: usize, k: u32) -> Result<MPoly> {
    let names = power_var_names(n);
    let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let p = MPoly::var_pow(&vars, &format!("x{m}"), k)?;
    reduce_linear_in_powers(&p, n, k, GenBasis::F)
}

#[allow(unused)]
fn mono_of(p: &MPoly) -> Option<Mono> {
    p.leading_term().map(|(m, _)| m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g1_equals_f1() {
        // g_1 = f_1, so g_1 reduces to zero against the f family.
        let n = 5;
        let names = power_var_names(n);
        let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let k = 3;
        let g1 = MPoly::from_int_terms(
            &vars,
            &[
                (1, &[3, 0, 0, 0, 0]),
                (-3, &[0, 3, 0, 0, 0]),
                (3, &[0, 0, 3, 0, 0]),
                (-1, &[0, 0, 0, 3, 0]),
            ],
        );
        let r = reduce_linear_in_powers(&g1, n, k, GenBasis::F).unwrap();
        assert!(r.is_zero());
        let r = reduce_linear_in_powers(&g1, n, k, GenBasis::G).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn x1_power_not_in_ideal() {
        let n = 6;
        let k = 2;
        let names = power_var_names(n);
        let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let p = MPoly::var_pow(&vars, "x1", k).unwrap();
        let r = reduce_linear_in_powers(&p, n, k, GenBasis::F).unwrap();
        assert_eq!(r, p);
    }

    #[test]
    fn power_var_reduces_to_m_identity() {
        // x5^2 on X_{6,2} reduces to 3x1^2 - 8x2^2 + 6x3^2.
        let r = reduce_power_var(5, 6, 2).unwrap();
        let names = power_var_names(6);
        let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let expect = MPoly::from_int_terms(
            &vars,
            &[
                (3, &[2, 0, 0, 0, 0, 0]),
                (-8, &[0, 2, 0, 0, 0, 0]),
                (6, &[0, 0, 2, 0, 0, 0]),
            ],
        );
        assert_eq!(r, expect);
    }

    #[test]
    fn rejects_non_power_monomials() {
        let names = power_var_names(4);
        let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let p = MPoly::var(&vars, "x1").unwrap();
        assert!(reduce_linear_in_powers(&p, 4, 2, GenBasis::F).is_err());
    }

    #[test]
    fn idempotent_and_linear() {
        let n = 7;
        let k = 2;
        let names = power_var_names(n);
        let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let p = MPoly::from_int_terms(&vars, &[(2, &[0, 0, 0, 0, 2, 0, 0]), (5, &[0, 0, 0, 0, 0, 0, 2])]);
        let q = MPoly::from_int_terms(&vars, &[(1, &[0, 0, 2, 0, 0, 0, 0]), (-7, &[0, 0, 0, 2, 0, 0, 0])]);
        let rp = reduce_linear_in_powers(&p, n, k, GenBasis::F).unwrap();
        let rq = reduce_linear_in_powers(&q, n, k, GenBasis::F).unwrap();
        // idempotent
        assert_eq!(reduce_linear_in_powers(&rp, n, k, GenBasis::F).unwrap(), rp);
        // linear
        let sum = reduce_linear_in_powers(&p.add(&q).unwrap(), n, k, GenBasis::F).unwrap();
        assert_eq!(sum, rp.add(&rq).unwrap());
    }
}
