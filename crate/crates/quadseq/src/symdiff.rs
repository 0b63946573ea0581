//! The rank-2 symmetric differential on P^2, chart by chart: construction,
//! the gluing check across charts, the exact-division integrality criterion
//! for plane curves, and the discriminant locus.

use crate::error::{Error, Result};
use crate::polycore::{MPoly, Scalar};
use serde::Serialize;
use std::fmt;

/// The three standard affine charts of P^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChartId {
    U1,
    U2,
    U3,
}

impl ChartId {
    /// Affine coordinates of the chart, in order (u, v).
    pub fn coords(self) -> (&'static str, &'static str) {
        match self {
            ChartId::U3 => ("x1", "x2"),
            ChartId::U1 => ("x2", "x3"),
            ChartId::U2 => ("x1", "x3"),
        }
    }

    /// The homogeneous coordinate that equals 1 on this chart.
    pub fn dehomogenizing_var(self) -> &'static str {
        match self {
            ChartId::U3 => "x3",
            ChartId::U1 => "x1",
            ChartId::U2 => "x2",
        }
    }
}

impl fmt::Display for ChartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChartId::U1 => write!(f, "U1"),
            ChartId::U2 => write!(f, "U2"),
            ChartId::U3 => write!(f, "U3"),
        }
    }
}

/// A rank-2 symmetric differential A0 du^2 + A1 du dv + A2 dv^2 on one chart.
/// On U1 and U2 the twist factor x^{-(2k+3)} has been stripped; `twist`
/// records the stripped degree (zero on U3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymDiff {
    pub chart: ChartId,
    pub k: u32,
    pub a0: MPoly,
    pub a1: MPoly,
    pub a2: MPoly,
    pub twist: u32,
}

/// Exact-division witness that a plane curve is integral for the form:
/// quotient * curve = criterion, with criterion = A0 gv^2 - A1 gu gv + A2 gu^2.
#[derive(Debug, Clone)]
pub struct IntegralityCertificate {
    pub k: u32,
    pub chart: ChartId,
    pub curve: MPoly,
    pub criterion: MPoly,
    pub quotient: MPoly,
}

impl IntegralityCertificate {
    /// Re-multiplies the quotient against the curve; must reproduce the
    /// criterion exactly.
    pub fn verify(&self) -> bool {
        self.quotient
            .mul(&self.curve)
            .map(|p| p == self.criterion)
            .unwrap_or(false)
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            k: self.k,
            chart: self.chart.to_string(),
            curve: self.curve.render(),
            criterion: self.criterion.render(),
            quotient: self.quotient.render(),
            verified: self.verify(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    pub k: u32,
    pub chart: String,
    pub curve: String,
    pub criterion: String,
    pub quotient: String,
    pub verified: bool,
}

/// Transcribes the differential onto the requested chart.
pub fn build_omega(k: u32, chart: ChartId) -> Result<SymDiff> {
    if k < 2 {
        return Err(Error::BadParameter(format!("k must be >= 2, got {k}")));
    }
    let (a0, a1, a2, twist) = match chart {
        ChartId::U3 => {
            let vars = &["x1", "x2"];
            (
                MPoly::from_int_terms(vars, &[(1, &[2 * k - 2, 2])]),
                MPoly::from_int_terms(
                    vars,
                    &[(1, &[k - 1, 1]), (-4, &[k - 1, k + 1]), (-1, &[2 * k - 1, 1])],
                ),
                MPoly::from_int_terms(vars, &[(4, &[k, k])]),
                0,
            )
        }
        ChartId::U1 => {
            let vars = &["x2", "x3"];
            (
                MPoly::from_int_terms(vars, &[(4, &[k, 1])]),
                MPoly::from_int_terms(vars, &[(-1, &[1, k]), (1, &[1, 0]), (-4, &[k + 1, 0])]),
                MPoly::from_int_terms(vars, &[(1, &[2, k - 1])]),
                2 * k + 3,
            )
        }
        ChartId::U2 => {
            let vars = &["x1", "x3"];
            (
                MPoly::from_int_terms(vars, &[(1, &[2 * k - 2, 1])]),
                MPoly::from_int_terms(
                    vars,
                    &[(-1, &[2 * k - 1, 0]), (-1, &[k - 1, k]), (4, &[k - 1, 0])],
                ),
                MPoly::from_int_terms(vars, &[(1, &[k, k - 1])]),
                2 * k + 3,
            )
        }
    };
    Ok(SymDiff {
        chart,
        k,
        a0,
        a1,
        a2,
        twist,
    })
}

/// Rewrites a U3-chart polynomial under the substitution into U1 coordinates
/// (x1 -> 1/x3, x2 -> x2/x3), cleared by x3^N: the term c*x1^i*x2^j becomes
/// c*x2^j*x3^(N-i-j).
fn clear_to_u1(p: &MPoly, n_deg: u32) -> MPoly {
    let terms = p
        .terms()
        .map(|(m, c)| {
            let (i, j) = (m.0[0], m.0[1]);
            (c.clone(), vec![j, n_deg - i - j])
        })
        .collect();
    MPoly::from_terms(&["x2", "x3"], terms)
}

/// Same for U2 coordinates (x1 -> x1/x3, x2 -> 1/x3): c*x1^i*x2^j becomes
/// c*x1^i*x3^(N-i-j).
fn clear_to_u2(p: &MPoly, n_deg: u32) -> MPoly {
    let terms = p
        .terms()
        .map(|(m, c)| {
            let (i, j) = (m.0[0], m.0[1]);
            (c.clone(), vec![i, n_deg - i - j])
        })
        .collect();
    MPoly::from_terms(&["x1", "x3"], terms)
}

/// Checks that the chart forms glue into a global twisted section: the U3
/// expression written in U1 (resp. U2) coordinates equals x3^{-(2k+3)} times
/// the U1 (resp. U2) expression, as an exact polynomial identity after
/// clearing powers of x3.
pub fn transition_verify(k: u32) -> Result<bool> {
    let u3 = build_omega(k, ChartId::U3)?;
    let u1 = build_omega(k, ChartId::U1)?;
    let u2 = build_omega(k, ChartId::U2)?;
    Ok(transition_holds(&u3, &u1, &u2))
}

/// The raw identity check, separated so tests can perturb a coefficient.
pub(crate) fn transition_holds(u3: &SymDiff, u1: &SymDiff, u2: &SymDiff) -> bool {
    let k = u3.k;
    let n_deg = 2 * k; // total degree bound of A0, A1, A2 on U3
    let check = || -> Result<bool> {
        // U1: coordinates (c, d) = (x2, x3); x1 = 1/d, x2 = c/d.
        // da = -d^{-2} dd, db = d^{-1} dc - c d^{-2} dd. Collecting and
        // multiplying through by d^{2k+3}:
        //   A2^ * d                          == B0
        //   -(A1^ + 2 x2 A2^)                == B1
        //   A0^ + x2 A1^ + x2^2 A2^          == B2 * d
        let a0h = clear_to_u1(&u3.a0, n_deg);
        let a1h = clear_to_u1(&u3.a1, n_deg);
        let a2h = clear_to_u1(&u3.a2, n_deg);
        let uvars = &["x2", "x3"];
        let x2 = MPoly::var(uvars, "x2")?;
        let x3 = MPoly::var(uvars, "x3")?;
        let id1 = a2h.mul(&x3)? == u1.a0;
        let id2 = a1h.add(&x2.mul(&a2h)?.scalar_mul(&Scalar::from_int(2))?)?.neg() == u1.a1;
        let lhs3 = a0h
            .add(&x2.mul(&a1h)?)?
            .add(&x2.pow(2)?.mul(&a2h)?)?;
        let id3 = lhs3 == u1.a2.mul(&x3)?;

        // U2: coordinates (e, f) = (x1, x3); x1 = e/f, x2 = 1/f.
        //   A0^ * f                          == C0
        //   -(2 x1 A0^ + A1^)                == C1
        //   x1^2 A0^ + x1 A1^ + A2^          == C2 * f
        let b0h = clear_to_u2(&u3.a0, n_deg);
        let b1h = clear_to_u2(&u3.a1, n_deg);
        let b2h = clear_to_u2(&u3.a2, n_deg);
        let vvars = &["x1", "x3"];
        let x1 = MPoly::var(vvars, "x1")?;
        let f3 = MPoly::var(vvars, "x3")?;
        let id4 = b0h.mul(&f3)? == u2.a0;
        let id5 = x1
            .mul(&b0h)?
            .scalar_mul(&Scalar::from_int(2))?
            .add(&b1h)?
            .neg()
            == u2.a1;
        let lhs6 = x1
            .pow(2)?
            .mul(&b0h)?
            .add(&x1.mul(&b1h)?)?
            .add(&b2h)?;
        let id6 = lhs6 == u2.a2.mul(&f3)?;
        Ok(id1 && id2 && id3 && id4 && id5 && id6)
    };
    check().unwrap_or(false)
}

/// The exact-division integrality criterion for a plane curve g = 0 on the
/// chart of the form: computes R = A0 gv^2 - A1 gu gv + A2 gu^2 and divides
/// by g. The caller passes the reduced (squarefree) equation.
pub fn integrality_criterion(
    g: &MPoly,
    omega: &SymDiff,
) -> Result<Option<IntegralityCertificate>> {
    if g.is_constant() {
        return Err(Error::BadInput("curve equation is constant".into()));
    }
    let (u, v) = omega.chart.coords();
    let vars = &[u, v];
    let g = g.embed_into(vars)?;
    let gu = g.partial_derivative(u)?;
    let gv = g.partial_derivative(v)?;
    let criterion = omega
        .a0
        .mul(&gv.pow(2)?)?
        .sub(&omega.a1.mul(&gu)?.mul(&gv)?)?
        .add(&omega.a2.mul(&gu.pow(2)?)?)?;
    match criterion.divide_exact(&g)? {
        None => Ok(None),
        Some(quotient) => Ok(Some(IntegralityCertificate {
            k: omega.k,
            chart: omega.chart,
            curve: g,
            criterion,
            quotient,
        })),
    }
}

/// The discriminant data of the form: (A0, A1^2 - 4 A0 A2).
pub fn discriminant(omega: &SymDiff) -> Result<(MPoly, MPoly)> {
    let delta = omega
        .a1
        .pow(2)?
        .sub(&omega.a0.mul(&omega.a2)?.scalar_mul(&Scalar::from_int(4))?)?;
    Ok((omega.a0.clone(), delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::Rat;

    #[test]
    fn omega_u3_k2_transcription() {
        let w = build_omega(2, ChartId::U3).unwrap();
        let vars = &["x1", "x2"];
        assert_eq!(w.a0, MPoly::from_int_terms(vars, &[(1, &[2, 2])]));
        assert_eq!(
            w.a1,
            MPoly::from_int_terms(vars, &[(1, &[1, 1]), (-4, &[1, 3]), (-1, &[3, 1])])
        );
        assert_eq!(w.a2, MPoly::from_int_terms(vars, &[(4, &[2, 2])]));
        assert_eq!(w.twist, 0);
    }

    #[test]
    fn omega_k3_a2() {
        let w = build_omega(3, ChartId::U3).unwrap();
        assert_eq!(w.a2, MPoly::from_int_terms(&["x1", "x2"], &[(4, &[3, 3])]));
    }

    #[test]
    fn a0_a2_product() {
        for k in 2..=6u32 {
            let w = build_omega(k, ChartId::U3).unwrap();
            let prod = w.a0.mul(&w.a2).unwrap();
            let expect = MPoly::from_int_terms(&["x1", "x2"], &[(4, &[3 * k - 2, k + 2])]);
            assert_eq!(prod, expect);
        }
    }

    #[test]
    fn u1_twist_recorded() {
        let w = build_omega(4, ChartId::U1).unwrap();
        assert_eq!(w.twist, 11);
    }

    #[test]
    fn transition_small_k() {
        for k in 2..=8 {
            assert!(transition_verify(k).unwrap(), "transition failed at k={k}");
        }
    }

    #[test]
    fn transition_detects_mutation() {
        let k = 3;
        let u3 = build_omega(k, ChartId::U3).unwrap();
        let mut u1 = build_omega(k, ChartId::U1).unwrap();
        let u2 = build_omega(k, ChartId::U2).unwrap();
        // drop one term of A1 on U1
        u1.a1 = u1
            .a1
            .sub(&MPoly::from_int_terms(&["x2", "x3"], &[(1, &[1, 0])]))
            .unwrap();
        assert!(!transition_holds(&u3, &u1, &u2));
    }

    #[test]
    fn axis_certificates() {
        // g = x2 on U3: criterion reduces to A0 = x1^{2k-2} x2^2.
        for k in [2u32, 3, 4] {
            let w = build_omega(k, ChartId::U3).unwrap();
            let g = MPoly::var(&["x1", "x2"], "x2").unwrap();
            let cert = integrality_criterion(&g, &w).unwrap().unwrap();
            assert_eq!(cert.criterion, w.a0);
            assert!(cert.verify());
            let expect_quot = MPoly::from_int_terms(&["x1", "x2"], &[(1, &[2 * k - 2, 1])]);
            assert_eq!(cert.quotient, expect_quot);
        }
    }

    #[test]
    fn c5_curve_is_integral_at_k3() {
        // C_5 dehomogenized on U3 for k=3: 3x1^3 - 8x2^3 + 6.
        let w = build_omega(3, ChartId::U3).unwrap();
        let g = MPoly::from_int_terms(&["x1", "x2"], &[(3, &[3, 0]), (-8, &[0, 3]), (6, &[0, 0])]);
        let cert = integrality_criterion(&g, &w).unwrap().expect("C_5 must be integral");
        assert!(cert.verify());
    }

    #[test]
    fn generic_line_not_integral() {
        // x2 - x1 - 1 at k=3.
        let w = build_omega(3, ChartId::U3).unwrap();
        let g = MPoly::from_int_terms(&["x1", "x2"], &[(1, &[0, 1]), (-1, &[1, 0]), (-1, &[0, 0])]);
        assert!(integrality_criterion(&g, &w).unwrap().is_none());
    }

    #[test]
    fn cinfinity_quotient_structure() {
        // C_inf on U3: x1^k - 2x2^k + 1; quotient is 2k^2 x1^{2k-2} x2^k.
        for k in [2u32, 3, 5] {
            let w = build_omega(k, ChartId::U3).unwrap();
            let g = MPoly::from_int_terms(
                &["x1", "x2"],
                &[(1, &[k, 0]), (-2, &[0, k]), (1, &[0, 0])],
            );
            let cert = integrality_criterion(&g, &w).unwrap().unwrap();
            let expect = MPoly::from_int_terms(
                &["x1", "x2"],
                &[(2 * (k as i64) * (k as i64), &[2 * k - 2, k])],
            );
            assert_eq!(cert.quotient, expect);
        }
    }

    #[test]
    fn discriminant_k2_factorization() {
        // Delta = x1^2 x2^2 (x1^4 - 8x1^2x2^2 - 2x1^2 + 16x2^4 - 8x2^2 + 1) at k=2.
        let w = build_omega(2, ChartId::U3).unwrap();
        let (a0, delta) = discriminant(&w).unwrap();
        assert_eq!(a0, w.a0);
        let vars = &["x1", "x2"];
        let q = MPoly::from_int_terms(
            vars,
            &[
                (1, &[4, 0]),
                (-8, &[2, 2]),
                (-2, &[2, 0]),
                (16, &[0, 4]),
                (-8, &[0, 2]),
                (1, &[0, 0]),
            ],
        );
        let expect = MPoly::from_int_terms(vars, &[(1, &[2, 2])]).mul(&q).unwrap();
        assert_eq!(delta, expect);
    }

    #[test]
    fn discriminant_evaluation() {
        let w = build_omega(2, ChartId::U3).unwrap();
        let (_, delta) = discriminant(&w).unwrap();
        let v = delta
            .evaluate_rat(&[Rat::from_integer(1.into()), Rat::from_integer(2.into())])
            .unwrap();
        assert_eq!(v, Rat::from_integer(768.into()));
    }
}
