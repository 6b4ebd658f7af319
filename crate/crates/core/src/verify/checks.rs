use std::collections::BTreeMap;

use super::{relative, VerificationReport, LAURICELLA_TOLERANCE};
use crate::canonical::{d4_orbit, IntegrandKind};
use crate::error::{Error, Result};
use crate::moebius::arc_contains;
use crate::ratpoly::{rat, LaurentPolynomial, Polynomial, Rational};
use crate::reduction::{reduce, BasisElement, ReductionResult};
use crate::special::{lauricella_fd, quad_sqrt, Integrand, QuadratureSpec, Radicand};

/// `Q(t) = t(1-t)(1-t/4)(1-t/3)(1-t/2)`.
pub fn worked_example_polynomial() -> Polynomial<Rational> {
    Polynomial::new(vec![
        rat(0, 1),
        rat(1, 1),
        rat(-25, 12),
        rat(35, 24),
        rat(-5, 12),
        rat(1, 24),
    ])
}

/// `U_{l,-3}` for the worked example at `p = 3/2`, `l = -1..=3`.
pub fn worked_example_column() -> Result<BTreeMap<i64, Rational>> {
    let r = reduce(&worked_example_polynomial(), &rat(3, 2), -3)?;
    Ok(r.shifted)
}

fn basis_laurent(b: BasisElement, p: &Rational) -> LaurentPolynomial {
    match b {
        BasisElement::Pole => LaurentPolynomial::monomial(p.clone(), -1, Rational::one()),
        BasisElement::Power(l) => LaurentPolynomial::from_x_poly(
            p.clone(),
            &Polynomial::monomial(l as usize, Rational::one()),
        ),
        BasisElement::Shifted(l) => {
            LaurentPolynomial::monomial(p.clone(), l as i64, Rational::one())
        }
    }
}

/// Replays `d/dx[E√Q] = (E'Q + EQ'/2)/√Q` and checks
/// `(x-p)^n - Σ c_b·b(x) - (E'Q + EQ'/2) ≡ 0` in exact arithmetic.
pub fn verify_reduction_exact(
    q: &Polynomial<Rational>,
    p: &Rational,
    n: i64,
    result: &ReductionResult,
) -> VerificationReport {
    let case = format!("reduction/deg={}/p={p}/n={n}", q.degree().unwrap_or(0));
    if result.p != *p || result.n != n || result.elementary.center() != p {
        return VerificationReport::exact(case, "mismatched result".into())
            .with_detail("result was produced for different (p, n)");
    }
    let mut residual = LaurentPolynomial::monomial(p.clone(), n, Rational::one());
    for (b, c) in &result.basic {
        residual = residual.sub(&basis_laurent(*b, p).scale(c));
    }
    let ql = LaurentPolynomial::from_x_poly(p.clone(), q);
    let e = &result.elementary;
    let half = rat(1, 2);
    let de = e
        .derivative()
        .mul(&ql)
        .add(&e.mul(&ql.derivative()).scale(&half));
    residual = residual.sub(&de);
    VerificationReport::exact(case, residual.to_string())
}

fn power_integrand(radicand: &Radicand, p: f64, n: i64) -> Integrand {
    let lin = Polynomial::new(vec![-p, 1.0]);
    let it = Integrand::inverse_sqrt(radicand.clone());
    if n >= 0 {
        it.with_numerator(lin.pow(n as u32))
    } else {
        it.with_denominator(lin.pow((-n) as u32))
    }
}

fn basis_integrand(radicand: &Radicand, b: BasisElement, p: f64) -> Integrand {
    match b {
        BasisElement::Pole => power_integrand(radicand, p, -1),
        BasisElement::Power(l) => power_integrand(radicand, 0.0, l as i64),
        BasisElement::Shifted(l) => power_integrand(radicand, p, l as i64),
    }
}

/// Compares `∫_a^b (x-p)^n dx/√Q` with the reduced right-hand side, both by
/// quadrature, plus the boundary values of `E√Q`.
///
/// Needs `Q > 0` inside `(a, b)` (endpoints may be simple roots) and, for
/// `n < 0`, `p ∉ [a, b]`.
pub fn verify_reduction_numeric(
    q: &Polynomial<Rational>,
    p: &Rational,
    n: i64,
    result: &ReductionResult,
    interval: (f64, f64),
    tol: f64,
) -> Result<VerificationReport> {
    let (a, b) = interval;
    if a >= b || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidArgument(format!("bad interval [{a}, {b}]")));
    }
    let qf = q.to_f64();
    let pf = p.to_f64();
    if qf.eval(&a) < -1e-12 || qf.eval(&b) < -1e-12 || qf.eval(&(0.5 * (a + b))) <= 0.0 {
        return Err(Error::domain(
            "verify_reduction_numeric",
            "Q is not positive on the interval",
        ));
    }
    let uses_pole = n < 0 || result.basic.contains_key(&BasisElement::Pole);
    if uses_pole && a <= pf && pf <= b {
        return Err(Error::domain(
            "verify_reduction_numeric",
            "pole inside the interval",
        ));
    }
    let radicand = Radicand::Poly(qf.clone());
    let integrate = |it: Integrand| quad_sqrt(&QuadratureSpec::new(it, a, b));
    let lhs = integrate(power_integrand(&radicand, pf, n))?;
    let mut rhs = 0.0;
    for (basis, c) in &result.basic {
        rhs += c.to_f64() * integrate(basis_integrand(&radicand, *basis, pf))?;
    }
    let e = &result.elementary;
    let boundary = |x: f64| {
        let qx = qf.eval(&x).max(0.0);
        if qx < 1e-13 {
            0.0
        } else {
            e.eval_f64(x) * qx.sqrt()
        }
    };
    rhs += boundary(b) - boundary(a);
    let case = format!("reduction-numeric/p={p}/n={n}/[{a},{b}]");
    Ok(VerificationReport::numeric(case, relative(lhs, rhs), tol)
        .with_detail(format!("lhs={lhs:e} rhs={rhs:e}")))
}

/// All eight D₄ variants of a definite elliptic integral agree with each
/// other and with direct quadrature over `L(x₄, u)`.
pub fn verify_orbit(
    kind: &IntegrandKind<Rational>,
    leading: &Rational,
    roots: &[Rational],
    u: &Rational,
    pv: bool,
    tol: f64,
) -> Result<VerificationReport> {
    let orbit = d4_orbit(kind, leading, roots, Some(u), pv)?;
    let values: Vec<f64> = orbit.iter().filter_map(|r| r.value).collect();
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let spread = relative(lo, hi);
    let base = orbit
        .iter()
        .find(|r| r.element == crate::moebius::DihedralElement::identity(4))
        .expect("orbit contains the identity");
    let x4 = &base.labels[3];
    let radicand = Radicand::Factored {
        leading: leading.to_f64(),
        roots: roots.iter().map(Rational::to_f64).collect(),
    };
    let it = Integrand::inverse_sqrt(radicand);
    let it = match kind {
        IntegrandKind::Const => it,
        IntegrandKind::X => it.with_numerator(Polynomial::new(vec![0.0, 1.0])),
        IntegrandKind::Pole(p) => it.with_denominator(Polynomial::new(vec![-p.to_f64(), 1.0])),
    };
    let mut spec = QuadratureSpec::new(it, x4.to_f64(), u.to_f64());
    if let IntegrandKind::Pole(p) = kind {
        if pv && arc_contains(x4, u, &crate::moebius::ProjPoint::Finite(p.clone()))? {
            spec = spec.with_principal_value(p.to_f64());
        }
    }
    let oracle = quad_sqrt(&spec)?;
    let residual = spread.max(relative(base.value.unwrap_or(f64::NAN), oracle));
    let case = format!("orbit/{}/u={u}", kind.name());
    Ok(
        VerificationReport::numeric(case, residual, tol).with_detail(format!(
            "value={:e} oracle={oracle:e} spread={spread:e}",
            base.value.unwrap_or(f64::NAN)
        )),
    )
}

const LAURICELLA_X: [f64; 4] = [2.0 / 3.0, 0.25, 1.0 / 3.0, 0.5];

/// Both sides of
/// `F_D(1/2; 3,1/2,1/2,1/2; 1; x) = Σ_l (-3/2)^{l+3} U_{l,-3} F_D(1/2; -l,1/2,1/2,1/2; 1; x)`
/// at `x = (2/3, 1/4, 1/3, 1/2)`.
pub fn lauricella_identity_sides(u: &BTreeMap<i64, Rational>) -> Result<(f64, f64)> {
    let fd = |b1: f64| lauricella_fd(0.5, &[b1, 0.5, 0.5, 0.5], 1.0, &LAURICELLA_X);
    let lhs = fd(3.0)?;
    let mut rhs = 0.0;
    for (&l, c) in u {
        if !(-1..=3).contains(&l) {
            return Err(Error::InvalidArgument(format!("U row {l} outside -1..=3")));
        }
        rhs += (-1.5f64).powi(l as i32 + 3) * c.to_f64() * fd(-(l as f64))?;
    }
    Ok((lhs, rhs))
}

/// The Lauricella identity with coefficients `u`.
pub fn verify_lauricella_with(u: &BTreeMap<i64, Rational>) -> Result<VerificationReport> {
    let (lhs, rhs) = lauricella_identity_sides(u)?;
    Ok(VerificationReport::numeric(
        "lauricella/identity",
        relative(lhs, rhs),
        LAURICELLA_TOLERANCE,
    )
    .with_detail(format!("lhs={lhs} rhs={rhs}")))
}

/// The Lauricella identity with `U_{l,-3}` taken from the reduction.
pub fn verify_lauricella() -> Result<VerificationReport> {
    verify_lauricella_with(&worked_example_column()?)
}

/// The worked example integrated over `[0, 1]`, where `√Q` vanishes at both ends.
pub fn verify_lauricella_definite() -> Result<VerificationReport> {
    let q = worked_example_polynomial();
    let p = rat(3, 2);
    let r = reduce(&q, &p, -3)?;
    let mut rep = verify_reduction_numeric(&q, &p, -3, &r, (0.0, 1.0), LAURICELLA_TOLERANCE)?;
    rep.case = "lauricella/definite".into();
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::reduce_root_pole;

    #[test]
    fn worked_example_exact() {
        let q = worked_example_polynomial();
        let p = rat(3, 2);
        let r = reduce(&q, &p, -3).unwrap();
        let rep = verify_reduction_exact(&q, &p, -3, &r);
        assert!(rep.pass, "{rep:?}");
        assert_eq!(
            rep.to_json_line(),
            format!(
                r#"{{"case":"{}","mode":"exact","pass":true,"residual":"0"}}"#,
                rep.case
            )
        );
    }

    #[test]
    fn trivial_and_corrupted() {
        let q = worked_example_polynomial();
        let p = rat(3, 2);
        assert!(verify_reduction_exact(&q, &p, 0, &reduce(&q, &p, 0).unwrap()).pass);
        let mut r = reduce(&q, &p, -3).unwrap();
        *r.basic.get_mut(&BasisElement::Power(0)).unwrap() += rat(1, 1000);
        assert!(!verify_reduction_exact(&q, &p, -3, &r).pass);
    }

    #[test]
    fn root_pole_replays() {
        let q = Polynomial::from_roots(rat(2, 1), &[rat(-1, 1), rat(1, 3), rat(2, 1), rat(5, 1)]);
        let p = rat(1, 3);
        let r = reduce_root_pole(&q, &p).unwrap();
        assert!(verify_reduction_exact(&q, &p, -1, &r).pass);
    }

    #[test]
    fn worked_example_numeric() {
        let q = worked_example_polynomial();
        let p = rat(3, 2);
        let r = reduce(&q, &p, -3).unwrap();
        let rep = verify_reduction_numeric(&q, &p, -3, &r, (0.1, 0.9), 1e-9).unwrap();
        assert!(rep.pass, "{rep:?}");
        let rep0 =
            verify_reduction_numeric(&q, &p, 0, &reduce(&q, &p, 0).unwrap(), (0.1, 0.9), 1e-9);
        assert!(rep0.unwrap().pass);
        assert!(verify_reduction_numeric(&q, &p, -3, &r, (0.5, 1.5), 1e-9).is_err());
        // mpmath: -4.28605703256608603852039416017
        let direct = quad_sqrt(&QuadratureSpec::new(
            power_integrand(&Radicand::Poly(q.to_f64()), 1.5, -3),
            0.1,
            0.9,
        ))
        .unwrap();
        approx::assert_relative_eq!(direct, -4.286057032566086, max_relative = 1e-12);
    }

    #[test]
    fn lauricella_sides_match_reference() {
        // mpmath, 30 digits: 13.8475570986976423917831946221
        let (lhs, rhs) = lauricella_identity_sides(&worked_example_column().unwrap()).unwrap();
        approx::assert_relative_eq!(lhs, 13.847557098697642, max_relative = 1e-9);
        approx::assert_relative_eq!(rhs, 13.847557098697642, max_relative = 1e-9);
        assert!(verify_lauricella().unwrap().pass);
        let rep = verify_lauricella_definite().unwrap();
        assert!(rep.pass, "{rep:?}");
        // mpmath: -12.8898914522766532599954609035
        let q = Radicand::Poly(worked_example_polynomial().to_f64());
        let direct =
            quad_sqrt(&QuadratureSpec::new(power_integrand(&q, 1.5, -3), 0.0, 1.0)).unwrap();
        approx::assert_relative_eq!(direct, -12.889891452276653, max_relative = 1e-10);
    }

    #[test]
    fn lauricella_negative_control() {
        let mut u = worked_example_column().unwrap();
        *u.get_mut(&-1).unwrap() *= rat(1001, 1000);
        assert!(!verify_lauricella_with(&u).unwrap().pass);
    }

    #[test]
    fn orbit_reports() {
        let roots: Vec<Rational> = (1..=4).map(|x| rat(x, 1)).collect();
        let one = rat(1, 1);
        let u = rat(6, 1);
        for (kind, pv) in [
            (IntegrandKind::Const, false),
            (IntegrandKind::X, false),
            (IntegrandKind::Pole(rat(5, 1)), true),
        ] {
            let rep = verify_orbit(&kind, &one, &roots, &u, pv, 1e-9).unwrap();
            assert!(rep.pass, "{rep:?}");
        }
    }
}
