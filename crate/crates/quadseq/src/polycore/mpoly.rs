//! Sparse multivariate polynomials with `Scalar` coefficients.
//!
//! Terms live in a BTreeMap keyed by exponent tuples under the graded
//! lexicographic order, so construction order never changes the normal form
//! and printed output is deterministic.

use crate::error::{Error, Result};
use crate::polycore::scalar::Scalar;
use crate::polycore::Rat;
use serde::ser::Serializer;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent tuple. Ordered by total degree first, then lexicographically,
/// so the BTreeMap's last entry is the graded-lex leading term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn quotient(&self, den: &Mono) -> Mono {
        Mono(self.0.iter().zip(&den.0).map(|(a, b)| a - b).collect())
    }

    pub fn product(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Mono, Scalar>,
}

impl MPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Scalar) -> Self {
        let mut p = MPoly::zero(vars);
        p.add_term(Mono(vec![0; p.vars.len()]), c);
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        MPoly::constant(vars, Scalar::one())
    }

    /// The variable `name` as a polynomial.
    pub fn var(vars: &[&str], name: &str) -> Result<Self> {
        MPoly::var_pow(vars, name, 1)
    }

    pub fn var_pow(vars: &[&str], name: &str, e: u32) -> Result<Self> {
        let mut p = MPoly::zero(vars);
        let idx = p
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; p.vars.len()];
        exps[idx] = e;
        p.add_term(Mono(exps), Scalar::one());
        Ok(p)
    }

    /// Builds a polynomial from (coefficient, exponents) pairs.
    pub fn from_terms(vars: &[&str], terms: Vec<(Scalar, Vec<u32>)>) -> Self {
        let mut p = MPoly::zero(vars);
        for (c, e) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent tuple length mismatch");
            p.add_term(Mono(e), c);
        }
        p
    }

    /// Convenience for integer-coefficient polynomials.
    pub fn from_int_terms(vars: &[&str], terms: &[(i64, &[u32])]) -> Self {
        MPoly::from_terms(
            vars,
            terms
                .iter()
                .map(|(c, e)| (Scalar::from_int(*c), e.to_vec()))
                .collect(),
        )
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms
            .get(&Mono(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Graded-lex leading term.
    pub fn leading_term(&self) -> Option<(Mono, Scalar)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    fn add_term(&mut self, mono: Mono, coef: Scalar) {
        if coef.is_zero() {
            return;
        }
        match self.terms.remove(&mono) {
            None => {
                self.terms.insert(mono, coef);
            }
            Some(prev) => {
                let sum = prev.add(&coef).expect("scalar domain mismatch inside one polynomial");
                if !sum.is_zero() {
                    self.terms.insert(mono, sum);
                }
            }
        }
    }

    /// Reindexes this polynomial into a superset variable list (by name).
    pub fn embed_into(&self, vars: &[&str]) -> Result<MPoly> {
        let target: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let mut map = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let idx = target
                .iter()
                .position(|t| t == v)
                .ok_or_else(|| Error::IncompatibleVars(format!("{v} missing from target")))?;
            map.push(idx);
        }
        let mut out = MPoly {
            vars: target,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut exps = vec![0; out.vars.len()];
            for (i, &e) in m.0.iter().enumerate() {
                exps[map[i]] = e;
            }
            out.add_term(Mono(exps), c.clone());
        }
        Ok(out)
    }

    /// Brings two polynomials onto a common variable list; one list must be a
    /// subset of the other.
    fn promote_pair(&self, other: &MPoly) -> Result<(MPoly, MPoly)> {
        if self.vars == other.vars {
            return Ok((self.clone(), other.clone()));
        }
        let mine: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let theirs: Vec<&str> = other.vars.iter().map(|s| s.as_str()).collect();
        if other.vars.iter().all(|v| self.vars.contains(v)) {
            Ok((self.clone(), other.embed_into(&mine)?))
        } else if self.vars.iter().all(|v| other.vars.contains(v)) {
            Ok((self.embed_into(&theirs)?, other.clone()))
        } else {
            Err(Error::IncompatibleVars(format!(
                "{:?} vs {:?}",
                self.vars, other.vars
            )))
        }
    }

    pub fn add(&self, other: &MPoly) -> Result<MPoly> {
        let (mut a, b) = self.promote_pair(other)?;
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        Ok(a)
    }

    pub fn sub(&self, other: &MPoly) -> Result<MPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> Result<MPoly> {
        let (a, b) = self.promote_pair(other)?;
        let mut out = MPoly::zero(&a.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.product(mb), ca.mul(cb)?);
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Result<MPoly> {
        let mut out = MPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.mul(c)?);
        }
        Ok(out)
    }

    pub fn pow(&self, e: i64) -> Result<MPoly> {
        if e < 0 {
            return Err(Error::NegativeExponent);
        }
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut acc = MPoly::one(&vars);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to `var`.
    pub fn partial_derivative(&self, var: &str) -> Result<MPoly> {
        let idx = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut out = MPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[idx] = e - 1;
            out.add_term(Mono(exps), c.mul(&Scalar::from_int(e as i64))?);
        }
        Ok(out)
    }

    /// Exact substitution at a point given in variable order.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.vars.len() {
            return Err(Error::LengthMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&point[i].pow(e)?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Exact division by a single divisor. Returns `Ok(None)` when no exact
    /// quotient exists over the scalar field; the returned quotient always
    /// re-multiplies to `self` exactly (checked).
    pub fn divide_exact(&self, g: &MPoly) -> Result<Option<MPoly>> {
        if g.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (p, g) = self.promote_pair(g)?;
        let vars: Vec<&str> = p.vars.iter().map(|s| s.as_str()).collect();
        let (lt_m, lt_c) = g.leading_term().expect("nonzero divisor");
        let mut rem = p.clone();
        let mut quot = MPoly::zero(&vars);
        while let Some((m, c)) = rem.leading_term() {
            if !lt_m.divides(&m) {
                return Ok(None);
            }
            let qm = m.quotient(&lt_m);
            let qc = c.div(&lt_c)?;
            let step = MPoly::from_terms(&vars, vec![(qc, qm.0.clone())]);
            quot = quot.add(&step)?;
            rem = rem.sub(&step.mul(&g)?)?;
        }
        debug_assert_eq!(quot.mul(&g).unwrap(), p);
        Ok(Some(quot))
    }

    /// Substitutes `var := replacement`, keeping the variable list.
    pub fn substitute_var(&self, var: &str, replacement: &MPoly) -> Result<MPoly> {
        let idx = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let repl = replacement.embed_into(&vars)?;
        let mut out = MPoly::zero(&vars);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut exps = m.0.clone();
            exps[idx] = 0;
            let base = MPoly::from_terms(&vars, vec![(c.clone(), exps)]);
            let term = if e == 0 { base } else { base.mul(&repl.pow(e as i64)?)? };
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Sets `var` to 1 and removes it from the variable list.
    pub fn dehomogenize(&self, var: &str) -> Result<MPoly> {
        let idx = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let vars: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, v)| v.clone())
            .collect();
        let mut out = MPoly {
            vars,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let exps: Vec<u32> = m
                .0
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != idx)
                .map(|(_, &e)| e)
                .collect();
            out.add_term(Mono(exps), c.clone());
        }
        Ok(out)
    }

    /// Canonical text: terms in graded-lex descending order, coefficients
    /// rendered as num/den.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&self.vars[i]);
                if e > 1 {
                    mono.push_str(&format!("^{e}"));
                }
            }
            let coef = c.render();
            let term = if mono.is_empty() {
                coef
            } else if c.is_one() {
                mono
            } else if c.neg().is_one() {
                format!("-{mono}")
            } else {
                format!("{coef}*{mono}")
            };
            parts.push(term);
        }
        crate::polycore::upoly::join_signed(&parts)
    }

    /// Rational content check helper: true when every coefficient is in Q.
    pub fn all_rational(&self) -> bool {
        self.terms.values().all(|c| c.as_rat().is_some())
    }

    /// Evaluates a polynomial with rational coefficients at a rational point.
    pub fn evaluate_rat(&self, point: &[Rat]) -> Result<Rat> {
        let scalars: Vec<Scalar> = point.iter().map(|r| Scalar::Rat(r.clone())).collect();
        self.evaluate(&scalars)?
            .as_rat()
            .ok_or_else(|| Error::ScalarDomain("non-rational value".into()))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const XY: &[&str] = &["x1", "x2"];

    fn x1() -> MPoly {
        MPoly::var(XY, "x1").unwrap()
    }

    fn x2() -> MPoly {
        MPoly::var(XY, "x2").unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let p = x1().add(&x2()).unwrap();
        let q = x1().sub(&x2()).unwrap();
        let prod = p.mul(&q).unwrap();
        let expect = MPoly::from_int_terms(XY, &[(1, &[2, 0]), (-1, &[0, 2])]);
        assert_eq!(prod, expect);
    }

    #[test]
    fn annihilator() {
        let p = x1().add(&x2()).unwrap();
        let z = MPoly::zero(XY);
        assert!(p.mul(&z).unwrap().is_zero());
    }

    #[test]
    fn normal_form_independent_of_order() {
        let a = x1().add(&x2()).unwrap().add(&MPoly::one(XY)).unwrap();
        let b = MPoly::one(XY).add(&x2()).unwrap().add(&x1()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.render(), b.render());
    }

    #[test]
    fn graded_lex_leading_term() {
        // x1*x2^2 beats x1^2 in degree; x1^2 beats x1*x2 lexicographically.
        let p = MPoly::from_int_terms(XY, &[(1, &[2, 0]), (1, &[1, 1]), (5, &[1, 2])]);
        let (m, _) = p.leading_term().unwrap();
        assert_eq!(m.0, vec![1, 2]);
        let q = MPoly::from_int_terms(XY, &[(1, &[2, 0]), (1, &[1, 1])]);
        let (m, _) = q.leading_term().unwrap();
        assert_eq!(m.0, vec![2, 0]);
    }

    #[test]
    fn derivative_power_rule() {
        let p = x1().pow(3).unwrap();
        assert_eq!(
            p.partial_derivative("x1").unwrap(),
            MPoly::from_int_terms(XY, &[(3, &[2, 0])])
        );
        assert!(x1().pow(4).unwrap().partial_derivative("x2").unwrap().is_zero());
        assert!(p.partial_derivative("zz").is_err());
    }

    #[test]
    fn divide_exact_basics() {
        let p = MPoly::from_int_terms(XY, &[(1, &[2, 0]), (-1, &[0, 2])]);
        let g = x1().sub(&x2()).unwrap();
        let h = p.divide_exact(&g).unwrap().unwrap();
        assert_eq!(h, x1().add(&x2()).unwrap());

        let p2 = x1().add(&MPoly::one(XY)).unwrap();
        assert!(p2.divide_exact(&x2()).unwrap().is_none());

        assert!(p.divide_exact(&MPoly::zero(XY)).is_err());
    }

    #[test]
    fn evaluate_exact() {
        let p = MPoly::from_int_terms(XY, &[(3, &[2, 1]), (-1, &[0, 0])]);
        let v = p
            .evaluate_rat(&[Rat::from_integer(2.into()), Rat::from_integer(5.into())])
            .unwrap();
        assert_eq!(v, Rat::from_integer(59.into()));
        let z = x1().sub(&x1()).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn render_canonical() {
        let p = MPoly::from_int_terms(XY, &[(1, &[2, 0]), (-4, &[1, 1]), (1, &[0, 0])]);
        assert_eq!(p.render(), "x1^2 - 4/1*x1*x2 + 1/1");
    }

    #[test]
    fn substitution() {
        // x1^2 with x1 := x2 + 1 gives x2^2 + 2x2 + 1
        let p = x1().pow(2).unwrap();
        let s = p
            .substitute_var("x1", &x2().add(&MPoly::one(XY)).unwrap())
            .unwrap();
        let expect = MPoly::from_int_terms(XY, &[(1, &[0, 2]), (2, &[0, 1]), (1, &[0, 0])]);
        assert_eq!(s, expect);
    }
}
