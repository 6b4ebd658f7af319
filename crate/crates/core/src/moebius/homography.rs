use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::projective::{cross_ratio, ProjPoint};
use crate::error::{Error, Result};
use crate::ratpoly::{Polynomial, Variable};
use crate::scalar::Scalar;

/// `ψ(t) = (at + b) / (ct + d)` with `ad - bc ≠ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Homography<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

/// `ψ(t) = ψ(∞) + (ψ(0) - ψ(∞)) / (1 - t/ψ⁻¹(∞))`.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalSplit<S> {
    pub phi_inf: S,
    pub phi_0: S,
    /// `ψ⁻¹(∞) = -d/c`
    pub pole: S,
}

impl<S: Scalar> CanonicalSplit<S> {
    pub fn eval(&self, t: &S) -> ProjPoint<S> {
        let den = S::one() - t.clone() / self.pole.clone();
        if den.is_zero() {
            return ProjPoint::Infinity;
        }
        ProjPoint::Finite(self.phi_inf.clone() + (self.phi_0.clone() - self.phi_inf.clone()) / den)
    }
}

/// Partial-fraction form of `1/(ψ(t) - p)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Reciprocal<S> {
    /// `scale·(const_part + numer / (1 - t/pole_param))`, `pole_param = ψ⁻¹(p)`.
    Generic {
        scale: S,
        const_part: S,
        numer: S,
        pole_param: S,
    },
    /// `p = ψ(0)`: `scale·(1 - pole_param/t)`, `pole_param = ψ⁻¹(∞)`.
    AtZero { scale: S, pole_param: S },
    /// `p = ψ(∞)`: `scale·(t/pole_param - 1)`, `pole_param = ψ⁻¹(∞)`.
    AtInfinity { scale: S, pole_param: S },
}

impl<S: Scalar> Reciprocal<S> {
    pub fn eval(&self, t: &S) -> ProjPoint<S> {
        match self {
            Reciprocal::Generic {
                scale,
                const_part,
                numer,
                pole_param,
            } => {
                let den = S::one() - t.clone() / pole_param.clone();
                if den.is_zero() {
                    return ProjPoint::Infinity;
                }
                ProjPoint::Finite(scale.clone() * (const_part.clone() + numer.clone() / den))
            }
            Reciprocal::AtZero { scale, pole_param } => {
                if t.is_zero() {
                    return ProjPoint::Infinity;
                }
                ProjPoint::Finite(scale.clone() * (S::one() - pole_param.clone() / t.clone()))
            }
            Reciprocal::AtInfinity { scale, pole_param } => {
                ProjPoint::Finite(scale.clone() * (t.clone() / pole_param.clone() - S::one()))
            }
        }
    }
}

impl<S: Scalar> Homography<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Result<Self> {
        let h = Homography { a, b, c, d };
        if h.det().is_zero() {
            return Err(Error::SingularHomography);
        }
        Ok(h)
    }

    pub fn identity() -> Self {
        Homography {
            a: S::one(),
            b: S::zero(),
            c: S::zero(),
            d: S::one(),
        }
    }

    pub fn det(&self) -> S {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    /// `N_A(t) = at + b`
    pub fn numerator(&self) -> Polynomial<S> {
        Polynomial::with_var(vec![self.b.clone(), self.a.clone()], Variable::T)
    }

    /// `D_A(t) = ct + d`
    pub fn denominator(&self) -> Polynomial<S> {
        Polynomial::with_var(vec![self.d.clone(), self.c.clone()], Variable::T)
    }

    pub fn apply(&self, t: &ProjPoint<S>) -> ProjPoint<S> {
        match t {
            ProjPoint::Infinity => ProjPoint::ratio(self.a.clone(), self.c.clone()),
            ProjPoint::Finite(t) => ProjPoint::ratio(
                self.a.clone() * t.clone() + self.b.clone(),
                self.c.clone() * t.clone() + self.d.clone(),
            ),
        }
    }

    pub fn apply_finite(&self, t: &S) -> ProjPoint<S> {
        self.apply(&ProjPoint::Finite(t.clone()))
    }

    /// `dψ/dt = det / (ct + d)²`
    pub fn derivative_at(&self, t: &S) -> S {
        let den = self.c.clone() * t.clone() + self.d.clone();
        self.det() / (den.clone() * den)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&other.a, &other.b, &other.c, &other.d);
        Homography {
            a: a.clone() * e.clone() + b.clone() * g.clone(),
            b: a.clone() * f.clone() + b.clone() * h.clone(),
            c: c.clone() * e.clone() + d.clone() * g.clone(),
            d: c.clone() * f.clone() + d.clone() * h.clone(),
        }
    }

    /// Adjugate matrix, which acts as the inverse map.
    pub fn inverse(&self) -> Self {
        Homography {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }

    pub fn inverse_point(&self, x: &ProjPoint<S>) -> ProjPoint<S> {
        self.inverse().apply(x)
    }

    /// `ψ⁻¹(x) = (ψ(∞), ψ(0); ψ(1), x)`, used as a cross-check of [`Self::inverse_point`].
    pub fn inverse_point_cross_ratio(&self, x: &ProjPoint<S>) -> Result<ProjPoint<S>> {
        let one = ProjPoint::Finite(S::one());
        let zero = ProjPoint::Finite(S::zero());
        cross_ratio(
            &self.apply(&ProjPoint::Infinity),
            &self.apply(&zero),
            &self.apply(&one),
            x,
        )
    }

    pub fn canonical_split(&self) -> Result<CanonicalSplit<S>> {
        if self.c.is_zero() {
            return Err(Error::NoSplit("c = 0, so ψ(∞) = ∞"));
        }
        if self.d.is_zero() {
            return Err(Error::NoSplit("d = 0, so ψ(0) = ∞"));
        }
        Ok(CanonicalSplit {
            phi_inf: self.a.clone() / self.c.clone(),
            phi_0: self.b.clone() / self.d.clone(),
            pole: -self.d.clone() / self.c.clone(),
        })
    }

    /// Decomposes `1/(ψ(t) - p)` into a constant plus a simple fraction in `t`.
    pub fn reciprocal_decompose(&self, p: &S) -> Result<Reciprocal<S>> {
        let split = self.canonical_split()?;
        let (pi, p0, s) = (split.phi_inf, split.phi_0, split.pole);
        if *p == p0 {
            return Ok(Reciprocal::AtZero {
                scale: S::one() / (pi - p0),
                pole_param: s,
            });
        }
        if *p == pi {
            return Ok(Reciprocal::AtInfinity {
                scale: S::one() / (pi - p0),
                pole_param: s,
            });
        }
        let d0 = p0.clone() - p.clone();
        let di = pi.clone() - p.clone();
        Ok(Reciprocal::Generic {
            scale: S::one() / (d0.clone() * di.clone()),
            const_part: d0.clone(),
            numer: pi - p0,
            pole_param: s * d0 / di,
        })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Homography<T> {
        Homography {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
        }
    }
}

impl<S: fmt::Display> Serialize for Homography<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        let mut st = s.serialize_struct("Homography", 4)?;
        st.serialize_field("a", &self.a.to_string())?;
        st.serialize_field("b", &self.b.to_string())?;
        st.serialize_field("c", &self.c.to_string())?;
        st.serialize_field("d", &self.d.to_string())?;
        st.end()
    }
}

/// `(r_k(A) f)(t) = D_A(t)^k · f(ψ_A(t)) = Σ_j f_j N_A(t)^j D_A(t)^{k-j}`.
pub fn r_operator<S: Scalar>(
    h: &Homography<S>,
    k: usize,
    f: &Polynomial<S>,
) -> Result<Polynomial<S>> {
    let deg = f.degree().unwrap_or(0);
    if deg > k {
        return Err(Error::DegreeTooHigh {
            degree: deg,
            order: k,
        });
    }
    let num = h.numerator();
    let den = h.denominator();
    let mut acc = Polynomial::with_var(vec![], Variable::T);
    let mut n_pow = Polynomial::with_var(vec![S::one()], Variable::T);
    let den_pows: Vec<Polynomial<S>> = {
        let mut v = vec![Polynomial::with_var(vec![S::one()], Variable::T)];
        for i in 1..=k {
            v.push(&v[i - 1] * &den);
        }
        v
    };
    for (j, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &(&n_pow * &den_pows[k - j]).scale(c);
        }
        n_pow = &n_pow * &num;
    }
    Ok(acc.set_var(Variable::T))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{rat, Rational};

    fn fin(r: Rational) -> ProjPoint<Rational> {
        ProjPoint::Finite(r)
    }

    #[test]
    fn apply_poles_and_infinity() {
        let h = Homography::new(rat(1, 1), rat(2, 1), rat(1, 1), rat(1, 1)).unwrap();
        assert_eq!(h.apply(&fin(rat(-1, 1))), ProjPoint::Infinity);
        assert_eq!(h.apply(&ProjPoint::Infinity), fin(rat(1, 1)));
        let id = Homography::<Rational>::identity();
        assert_eq!(id.apply(&fin(rat(7, 3))), fin(rat(7, 3)));
        assert!(Homography::new(rat(1, 1), rat(2, 1), rat(2, 1), rat(4, 1)).is_err());
    }

    #[test]
    fn split_reproduces() {
        let h = Homography::new(rat(1, 1), rat(2, 1), rat(1, 1), rat(1, 1)).unwrap();
        let s = h.canonical_split().unwrap();
        assert_eq!(
            (s.phi_inf.clone(), s.phi_0.clone(), s.pole.clone()),
            (rat(1, 1), rat(2, 1), rat(-1, 1))
        );
        for t in [rat(0, 1), rat(1, 1), rat(2, 1)] {
            assert_eq!(s.eval(&t), h.apply(&fin(t)));
        }
        let affine = Homography::new(rat(2, 1), rat(1, 1), rat(0, 1), rat(1, 1)).unwrap();
        assert!(matches!(affine.canonical_split(), Err(Error::NoSplit(_))));
    }

    #[test]
    fn reciprocal_branches() {
        let h = Homography::new(rat(3, 1), rat(-8, 1), rat(-3, 1), rat(2, 1)).unwrap();
        let s = h.canonical_split().unwrap();
        let samples = [rat(1, 3), rat(2, 1), rat(-5, 7), rat(11, 2), rat(3, 1)];
        for p in [rat(5, 2), s.phi_0.clone(), s.phi_inf.clone()] {
            let r = h.reciprocal_decompose(&p).unwrap();
            for t in &samples {
                let direct = match h.apply(&fin(t.clone())) {
                    ProjPoint::Finite(x) => ProjPoint::ratio(Rational::one(), x - p.clone()),
                    ProjPoint::Infinity => fin(Rational::zero()),
                };
                assert_eq!(r.eval(t), direct, "p = {p}, t = {t}");
            }
        }
        assert!(matches!(
            h.reciprocal_decompose(&s.phi_0).unwrap(),
            Reciprocal::AtZero { .. }
        ));
    }

    #[test]
    fn r_operator_examples() {
        let h = Homography::new(rat(2, 1), rat(-8, 1), rat(-3, 1), rat(2, 1)).unwrap();
        let one = Polynomial::constant(Rational::one());
        assert_eq!(r_operator(&h, 1, &one).unwrap(), h.denominator());
        let x0 = rat(5, 3);
        let lin = Polynomial::linear(Rational::one(), -x0.clone());
        assert_eq!(
            r_operator(&h, 1, &lin).unwrap(),
            &h.numerator() - &h.denominator().scale(&x0)
        );
        let quad = Polynomial::monomial(2, Rational::one());
        assert!(matches!(
            r_operator(&h, 1, &quad),
            Err(Error::DegreeTooHigh {
                degree: 2,
                order: 1
            })
        ));
    }
}
