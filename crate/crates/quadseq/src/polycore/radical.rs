//! Simple radical extensions of Q: elements of Q[b1,...,bt]/(b_i^{k_i} - r_i)
//! with tower height t <= 2. These house k-th-root coordinates of lifted
//! points; the radicands r_i are rational.

use crate::error::{Error, Result};
use crate::polycore::Rat;
use num_traits::{One, Zero};
use std::fmt;

/// Tower descriptor: the adjoined roots beta_i with beta_i^{k_i} = r_i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RadicalSig {
    gens: Vec<(u32, Rat)>,
}

impl RadicalSig {
    pub fn new(gens: Vec<(u32, Rat)>) -> Result<Self> {
        if gens.is_empty() || gens.len() > 2 {
            return Err(Error::BadParameter(format!(
                "radical tower height must be 1 or 2, got {}",
                gens.len()
            )));
        }
        for (k, r) in &gens {
            if *k < 2 {
                return Err(Error::BadParameter("radical exponent must be >= 2".into()));
            }
            if r.is_zero() {
                return Err(Error::BadParameter("radicand must be nonzero".into()));
            }
        }
        Ok(RadicalSig { gens })
    }

    pub fn height(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[(u32, Rat)] {
        &self.gens
    }

    fn dim(&self) -> usize {
        self.gens.iter().map(|(k, _)| *k as usize).product()
    }

    /// Mixed-radix index of an exponent tuple (each entry below k_i).
    fn index(&self, exps: &[u32]) -> usize {
        let mut idx = 0usize;
        for (m, (k, _)) in self.gens.iter().enumerate() {
            idx = idx * (*k as usize) + exps[m] as usize;
        }
        idx
    }

    fn exps_of(&self, mut idx: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.gens.len()];
        for m in (0..self.gens.len()).rev() {
            let k = self.gens[m].0 as usize;
            out[m] = (idx % k) as u32;
            idx /= k;
        }
        out
    }
}

/// Element of the tower in reduced normal form: exponents of each beta_i
/// strictly below k_i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RadicalElem {
    sig: RadicalSig,
    coeffs: Vec<Rat>,
}

impl RadicalElem {
    pub fn from_rat(sig: RadicalSig, c: Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); sig.dim()];
        coeffs[0] = c;
        RadicalElem { sig, coeffs }
    }

    /// The generator beta_{i} itself (0-based index).
    pub fn generator(sig: RadicalSig, i: usize) -> Self {
        let mut exps = vec![0u32; sig.height()];
        exps[i] = 1;
        let idx = sig.index(&exps);
        let mut coeffs = vec![Rat::zero(); sig.dim()];
        coeffs[idx] = Rat::one();
        RadicalElem { sig, coeffs }
    }

    /// A fresh height-1 root: beta with beta^k = r.
    pub fn root(k: u32, r: Rat) -> Result<Self> {
        let sig = RadicalSig::new(vec![(k, r)])?;
        Ok(RadicalElem::generator(sig, 0))
    }

    pub fn sig(&self) -> &RadicalSig {
        &self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Some(c) when the element lies in Q.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_sig(&self, other: &RadicalElem) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::ScalarDomain(
                "radical elements from different towers".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &RadicalElem) -> Result<RadicalElem> {
        self.check_sig(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(RadicalElem {
            sig: self.sig.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &RadicalElem) -> Result<RadicalElem> {
        self.check_sig(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(RadicalElem {
            sig: self.sig.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> RadicalElem {
        RadicalElem {
            sig: self.sig.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &RadicalElem) -> Result<RadicalElem> {
        self.check_sig(other)?;
        let sig = &self.sig;
        let mut out = vec![Rat::zero(); sig.dim()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = sig.exps_of(i);
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let eb = sig.exps_of(j);
                let mut factor = a * b;
                let mut exps = vec![0u32; sig.height()];
                for m in 0..sig.height() {
                    let (k, r) = &sig.gens[m];
                    let mut e = ea[m] + eb[m];
                    if e >= *k {
                        e -= *k;
                        factor *= r;
                    }
                    exps[m] = e;
                }
                out[sig.index(&exps)] += factor;
            }
        }
        Ok(RadicalElem {
            sig: sig.clone(),
            coeffs: out,
        })
    }

    pub fn pow(&self, e: u32) -> Result<RadicalElem> {
        let mut acc = RadicalElem::from_rat(self.sig.clone(), Rat::one());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse, found by solving the linear system of the
    /// multiplication-by-self map. Errors on zero or a zero divisor (the
    /// tower is a ring; it is a field only when the relations are
    /// irreducible, which all callers in this crate arrange).
    pub fn inverse(&self) -> Result<RadicalElem> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let sig = &self.sig;
        let d = sig.dim();
        // Column j of the matrix is self * basis_j.
        let mut mat = vec![vec![Rat::zero(); d + 1]; d];
        for j in 0..d {
            let mut basis = RadicalElem::from_rat(sig.clone(), Rat::zero());
            basis.coeffs[j] = Rat::one();
            let col = self.mul(&basis)?;
            for i in 0..d {
                mat[i][j] = col.coeffs[i].clone();
            }
        }
        mat[0][d] = Rat::one(); // right-hand side e_0
        // Gaussian elimination with exact rationals.
        let mut row = 0usize;
        let mut pivots = Vec::new();
        for col in 0..d {
            let Some(p) = (row..d).find(|&r| !mat[r][col].is_zero()) else {
                continue;
            };
            mat.swap(row, p);
            let inv = Rat::one() / mat[row][col].clone();
            for c in col..=d {
                mat[row][c] = &mat[row][c] * &inv;
            }
            for r in 0..d {
                if r != row && !mat[r][col].is_zero() {
                    let f = mat[r][col].clone();
                    for c in col..=d {
                        let sub = &mat[row][c] * &f;
                        mat[r][c] = &mat[r][c] - &sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == d {
                break;
            }
        }
        if row < d {
            // Singular multiplication map: zero divisor.
            return Err(Error::ZeroDivisor);
        }
        let mut coeffs = vec![Rat::zero(); d];
        for (r, &col) in pivots.iter().enumerate() {
            coeffs[col] = mat[r][d].clone();
        }
        let inv = RadicalElem {
            sig: sig.clone(),
            coeffs,
        };
        debug_assert!(self.mul(&inv).map(|p| p.is_one()).unwrap_or(false));
        Ok(inv)
    }

    pub fn render(&self) -> String {
        let sig = &self.sig;
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exps = sig.exps_of(i);
            let mut term = format!("{}/{}", c.numer(), c.denom());
            for (m, e) in exps.iter().enumerate() {
                if *e > 0 {
                    term.push_str(&format!("*beta{}", m + 1));
                    if *e > 1 {
                        term.push_str(&format!("^{e}"));
                    }
                }
            }
            parts.push(term);
        }
        let body = if parts.is_empty() {
            "0".to_string()
        } else {
            crate::polycore::upoly::join_signed(&parts)
        };
        let rels = sig
            .gens
            .iter()
            .enumerate()
            .map(|(m, (k, r))| format!("beta{}^{}={}/{}", m + 1, k, r.numer(), r.denom()))
            .collect::<Vec<_>>()
            .join(",");
        format!("{{{body} | {rels}}}")
    }
}

impl fmt::Display for RadicalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn cube_root_arithmetic() {
        // beta^3 = 22
        let b = RadicalElem::root(3, r(22)).unwrap();
        assert_eq!(b.pow(3).unwrap().as_rat(), Some(r(22)));
        assert_eq!(b.pow(4).unwrap().as_rat(), None);
    }

    #[test]
    fn inverse_height_one() {
        let b = RadicalElem::root(3, r(2)).unwrap();
        let x = b.add(&RadicalElem::from_rat(b.sig().clone(), r(1))).unwrap(); // 1 + 2^(1/3)
        let inv = x.inverse().unwrap();
        assert!(x.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn inverse_height_two() {
        let sig = RadicalSig::new(vec![(2, r(2)), (2, r(3))]).unwrap();
        let b1 = RadicalElem::generator(sig.clone(), 0);
        let b2 = RadicalElem::generator(sig.clone(), 1);
        let x = b1.add(&b2).unwrap(); // sqrt2 + sqrt3
        let inv = x.inverse().unwrap();
        assert!(x.mul(&inv).unwrap().is_one());
        // (sqrt2 * sqrt3)^2 = 6
        let prod = b1.mul(&b2).unwrap();
        assert_eq!(prod.pow(2).unwrap().as_rat(), Some(r(6)));
    }

    #[test]
    fn mixed_towers_rejected() {
        let a = RadicalElem::root(2, r(2)).unwrap();
        let b = RadicalElem::root(2, r(3)).unwrap();
        assert!(a.add(&b).is_err());
    }
}
