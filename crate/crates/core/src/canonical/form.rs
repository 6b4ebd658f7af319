use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::moebius::{cross_ratio, r_operator, Homography, ProjPoint, RootCycle};
use crate::ratpoly::{Polynomial, Variable};
use crate::scalar::Scalar;

/// `A_{x_{N-1}, x_N, x_1}`: the homography with `ψ(∞) = x_prev`,
/// `ψ(0) = x_last`, `ψ(1) = x_first`.
pub fn canonical_matrix<S: Scalar>(x_prev: &S, x_last: &S, x_first: &S) -> Result<Homography<S>> {
    let (xp, xl, xf) = (x_prev.clone(), x_last.clone(), x_first.clone());
    Homography::new(
        (xf.clone() - xl.clone()) * xp.clone(),
        -((xf.clone() - xp.clone()) * xl.clone()),
        xf.clone() - xl,
        -(xf - xp),
    )
}

/// The data of `r_N(A)P = C·t(1-t)∏ⱼ(1-kⱼt)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalForm<S> {
    pub leading: S,
    pub roots: RootCycle<S>,
    pub homography: Homography<S>,
    /// `k₂, …, k_{N-2}`
    pub k: Vec<S>,
    pub c: S,
    pub epsilon: i8,
    /// `|a_N (x_{N-1}-x₁)^{N-3} ∏_{j=2}^{N-2} (x_N-x_j)|`
    pub prefactor_sq: S,
    pub m: usize,
}

impl<S: Scalar> CanonicalForm<S> {
    /// `1/√prefactor_sq`
    pub fn prefactor(&self) -> f64 {
        1.0 / self.prefactor_sq.to_f64().sqrt()
    }

    /// `P(x) = a_N ∏ (x - x_i)`
    pub fn polynomial(&self) -> Polynomial<S> {
        Polynomial::from_roots(self.leading.clone(), &self.roots.roots)
    }

    /// `C·t(1-t)∏(1-kⱼt)`
    pub fn reduced(&self) -> Polynomial<S> {
        let lin = |a: S, b: S| Polynomial::with_var(vec![b, a], Variable::T);
        let mut acc = &lin(S::one(), S::zero()) * &lin(-S::one(), S::one());
        for k in &self.k {
            acc = &acc * &lin(-k.clone(), S::one());
        }
        acc.scale(&self.c).set_var(Variable::T)
    }

    /// `r_N(A)P`
    pub fn transformed(&self) -> Result<Polynomial<S>> {
        r_operator(&self.homography, 2 * self.m, &self.polynomial())
    }

    /// `r_N(A)P - C·t(1-t)∏(1-kⱼt)`; zero for exact scalars.
    pub fn identity_residual(&self) -> Result<Polynomial<S>> {
        Ok(&self.transformed()? - &self.reduced())
    }

    /// `1 > k₂ > … > k_{N-2} > 0`
    pub fn moduli_ordered(&self) -> bool {
        let mut prev = S::one();
        for k in &self.k {
            if *k >= prev {
                return false;
            }
            prev = k.clone();
        }
        prev > S::zero()
    }

    /// `t = (x_{N-1}, x_N; x_1, x)`
    pub fn t_of(&self, x: &ProjPoint<S>) -> Result<ProjPoint<S>> {
        let n = self.roots.len();
        let r = |i: usize| ProjPoint::Finite(self.roots.x(i).clone());
        cross_ratio(&r(n - 1), &r(n), &r(1), x)
    }
}

impl<S: Scalar + fmt::Display> Serialize for CanonicalForm<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        let strs = |v: &[S]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let mut m = s.serialize_map(Some(9))?;
        m.serialize_entry("roots", &strs(&self.roots.roots))?;
        m.serialize_entry("leading", &self.leading.to_string())?;
        m.serialize_entry("m", &self.m)?;
        m.serialize_entry("k", &strs(&self.k))?;
        m.serialize_entry("C", &self.c.to_string())?;
        m.serialize_entry("epsilon", &self.epsilon)?;
        m.serialize_entry("prefactor_sq", &self.prefactor_sq.to_string())?;
        m.serialize_entry("prefactor", &self.prefactor())?;
        m.serialize_entry("homography", &self.homography)?;
        m.end()
    }
}

/// Canonical form for a cyclically monotonous root sequence of even length.
pub fn canonical_form<S: Scalar>(leading: &S, roots: &RootCycle<S>) -> Result<CanonicalForm<S>> {
    let n = roots.len();
    if n < 4 || n % 2 == 1 {
        return Err(Error::BadRootCount(n));
    }
    if leading.is_zero() {
        return Err(Error::DegeneratePolynomial(
            "leading coefficient is zero".into(),
        ));
    }
    let x = |i: usize| roots.x(i).clone();
    let homography = canonical_matrix(&x(n - 1), &x(n), &x(1))?;
    let fin = |i: usize| ProjPoint::Finite(x(i));
    let mut k = Vec::with_capacity(n - 3);
    for j in 2..=n - 2 {
        let t = cross_ratio(&fin(n - 1), &fin(n), &fin(1), &fin(j))?.expect_finite("t_j")?;
        k.push(S::one() / t);
    }
    let d1 = x(n) - x(1);
    let d2 = x(n) - x(n - 1);
    let d3 = x(n - 1) - x(1);
    let tail = (2..=n - 2).fold(S::one(), |acc, j| acc * (x(n) - x(j)));
    let c = leading.clone() * d1.powu(2) * d2.powu(2) * d3.powu(n as u32 - 1) * tail.clone();
    let prefactor_sq = (leading.clone() * d3.powu(n as u32 - 3) * tail).abs();
    let epsilon = homography.det().signum();
    Ok(CanonicalForm {
        leading: leading.clone(),
        roots: roots.clone(),
        homography,
        k,
        c,
        epsilon,
        prefactor_sq,
        m: n / 2,
    })
}

/// `R = numerator / denominator` in `x`.
#[derive(Debug, Clone)]
pub struct RationalFunction<S> {
    pub numerator: Polynomial<S>,
    pub denominator: Polynomial<S>,
}

impl<S: Scalar> RationalFunction<S> {
    pub fn new(numerator: Polynomial<S>, denominator: Polynomial<S>) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(RationalFunction {
            numerator,
            denominator,
        })
    }

    pub fn one() -> Self {
        RationalFunction {
            numerator: Polynomial::constant(S::one()),
            denominator: Polynomial::constant(S::one()),
        }
    }

    pub fn eval(&self, x: &S) -> S {
        self.numerator.eval(x) / self.denominator.eval(x)
    }
}

/// `ψ*ω = det A · (ψ*R)(t) · |D(t)|^{m-2} dt / √|(r_{2m}(A)P)(t)|`.
#[derive(Debug, Clone)]
pub struct PullbackForm<S> {
    pub det: S,
    /// `ψ*R = r_d(num) / r_d(den)` with `d = max(deg num, deg den)`
    pub pulled_numerator: Polynomial<S>,
    pub pulled_denominator: Polynomial<S>,
    /// `D_A(t)`
    pub d_factor: Polynomial<S>,
    /// `m - 2`
    pub d_exponent: i64,
    /// `r_{2m}(A)P`
    pub radicand: Polynomial<S>,
}

impl<S: Scalar> PullbackForm<S> {
    /// Density of the pulled-back form at `t`.
    pub fn eval(&self, t: f64) -> f64 {
        let f = |p: &Polynomial<S>| p.to_f64().eval(&t);
        let r = f(&self.pulled_numerator) / f(&self.pulled_denominator);
        let d = f(&self.d_factor).abs().powi(self.d_exponent as i32);
        self.det.to_f64() * r * d / f(&self.radicand).abs().sqrt()
    }
}

impl<S: Scalar + fmt::Display> Serialize for PullbackForm<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        let mut m = s.serialize_map(Some(6))?;
        m.serialize_entry("det", &self.det.to_string())?;
        m.serialize_entry("pulled_numerator", &self.pulled_numerator.to_string())?;
        m.serialize_entry("pulled_denominator", &self.pulled_denominator.to_string())?;
        m.serialize_entry("d_factor", &self.d_factor.to_string())?;
        m.serialize_entry("d_exponent", &self.d_exponent)?;
        m.serialize_entry("radicand", &self.radicand.to_string())?;
        m.end()
    }
}

/// Pullback of `R(x) dx / √|P(x)|` along `ψ_A`, `deg P = 2m`.
pub fn pullback_form<S: Scalar>(
    h: &Homography<S>,
    r: &RationalFunction<S>,
    p: &Polynomial<S>,
    m: usize,
) -> Result<PullbackForm<S>> {
    if p.degree() != Some(2 * m) {
        return Err(Error::InvalidArgument(format!(
            "deg P = {:?}, expected 2m = {}",
            p.degree(),
            2 * m
        )));
    }
    let d = r
        .numerator
        .degree()
        .unwrap_or(0)
        .max(r.denominator.degree().unwrap_or(0));
    Ok(PullbackForm {
        det: h.det(),
        pulled_numerator: r_operator(h, d, &r.numerator)?,
        pulled_denominator: r_operator(h, d, &r.denominator)?,
        d_factor: h.denominator(),
        d_exponent: m as i64 - 2,
        radicand: r_operator(h, 2 * m, p)?,
    })
}
