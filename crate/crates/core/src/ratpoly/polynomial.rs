use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which variable the coefficients are written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variable {
    #[default]
    X,
    /// `u = x - p`
    U,
    /// canonical coordinate after a homographic substitution
    T,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variable::X => "x",
            Variable::U => "u",
            Variable::T => "t",
        })
    }
}

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector. Equality compares coefficients only, not the variable tag.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound(
    serialize = "S: Serialize",
    deserialize = "S: Deserialize<'de> + Scalar"
))]
#[serde(from = "RawPolynomial<S>")]
pub struct Polynomial<S> {
    var: Variable,
    coeffs: Vec<S>,
}

#[derive(Deserialize)]
struct RawPolynomial<S> {
    #[serde(default)]
    var: Variable,
    coeffs: Vec<S>,
}

impl<S: Scalar> From<RawPolynomial<S>> for Polynomial<S> {
    fn from(raw: RawPolynomial<S>) -> Self {
        Polynomial::with_var(raw.coeffs, raw.var)
    }
}

impl<S: Scalar> PartialEq for Polynomial<S> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<S: Scalar> Polynomial<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        Self::with_var(coeffs, Variable::X)
    }

    pub fn with_var(mut coeffs: Vec<S>, var: Variable) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { var, coeffs }
    }

    pub fn zero() -> Self {
        Polynomial {
            var: Variable::X,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(deg: usize, c: S) -> Self {
        let mut v = vec![S::zero(); deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    /// `a*x + b`
    pub fn linear(a: S, b: S) -> Self {
        Self::new(vec![b, a])
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn set_var(mut self, var: Variable) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> S {
        self.coeffs.last().cloned().unwrap_or_else(S::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| S::from_i64(j as i64) * c.clone())
            .collect();
        Self::with_var(coeffs, self.var)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::with_var(
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            self.var,
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(S::one()).set_var(self.var);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients `b_j` with `sum b_j (x-p)^j = self(x)`, via repeated
    /// synthetic division by `x - p`.
    pub fn shift(&self, p: &S) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n.saturating_sub(1) {
            for j in (i..n - 1).rev() {
                let carry = p.clone() * a[j + 1].clone();
                a[j] = a[j].clone() + carry;
            }
        }
        let var = if self.var == Variable::X {
            Variable::U
        } else {
            self.var
        };
        Self::with_var(a, var)
    }

    /// `leading * prod (x - r)`
    pub fn from_roots(leading: S, roots: &[S]) -> Self {
        let mut acc = Self::constant(leading);
        for r in roots {
            acc = &acc * &Self::linear(S::one(), -r.clone());
        }
        acc
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Polynomial<T> {
        Polynomial::with_var(self.coeffs.iter().map(f).collect(), self.var)
    }

    pub fn to_f64(&self) -> Polynomial<f64> {
        self.map(|c| c.to_f64())
    }
}

/// Formal derivative.
pub fn poly_derivative<S: Scalar>(q: &Polynomial<S>) -> Polynomial<S> {
    q.derivative()
}

/// Taylor shift: coefficients of `q` in powers of `x - p`.
pub fn poly_shift<S: Scalar>(q: &Polynomial<S>, p: &S) -> Polynomial<S> {
    q.shift(p)
}

pub fn poly_eval<S: Scalar>(q: &Polynomial<S>, x: &S) -> S {
    q.eval(x)
}

pub fn poly_from_roots<S: Scalar>(leading: S, roots: &[S]) -> Polynomial<S> {
    Polynomial::from_roots(leading, roots)
}

/// `sigma_i(values)`, with `sigma_0 = 1`.
pub fn elementary_symmetric<S: Scalar>(values: &[S], i: usize) -> Result<S> {
    if i > values.len() {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            len: values.len(),
        });
    }
    let mut e = vec![S::zero(); i + 1];
    e[0] = S::one();
    for v in values {
        for j in (1..=i).rev() {
            e[j] = e[j].clone() + e[j - 1].clone() * v.clone();
        }
    }
    Ok(e[i].clone())
}

impl<'a, S: Scalar> Add<&'a Polynomial<S>> for &'a Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: &'a Polynomial<S>) -> Polynomial<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::with_var(v, self.var)
    }
}

impl<'a, S: Scalar> Sub<&'a Polynomial<S>> for &'a Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: &'a Polynomial<S>) -> Polynomial<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::with_var(v, self.var)
    }
}

impl<'a, S: Scalar> Mul<&'a Polynomial<S>> for &'a Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: &'a Polynomial<S>) -> Polynomial<S> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero().set_var(self.var);
        }
        let mut v = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::with_var(v, self.var)
    }
}

impl<S: Scalar> Add for Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Self {
        self.scale(&-S::one())
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c}){}", self.var)?,
                _ => write!(f, "({c}){}^{j}", self.var)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{rat, Rational};

    fn q74() -> Polynomial<Rational> {
        Polynomial::new(vec![
            rat(0, 1),
            rat(1, 1),
            rat(-25, 12),
            rat(35, 24),
            rat(-5, 12),
            rat(1, 24),
        ])
    }

    #[test]
    fn shift_matches_worked_example() {
        let b = q74().shift(&rat(3, 2));
        let expect = [
            rat(-15, 256),
            rat(3, 128),
            // printed as -25/98 in the source example; expansion gives 25/96
            rat(25, 96),
            rat(-5, 48),
            rat(-5, 48),
            rat(1, 24),
        ];
        assert_eq!(b.coeffs(), &expect);
        assert_eq!(b.var(), Variable::U);
    }

    #[test]
    fn shift_by_zero_is_identity() {
        assert_eq!(q74().shift(&Rational::zero()), q74());
    }

    #[test]
    fn eval_examples() {
        let q = Polynomial::from_roots(
            rat(1, 24),
            &[rat(0, 1), rat(1, 1), rat(4, 1), rat(3, 1), rat(2, 1)],
        );
        // t(1-t)(1-t/4)(1-t/3)(1-t/2) = (1/24) t(t-1)(t-2)(t-3)(t-4)
        assert_eq!(q, q74());
        assert_eq!(q.eval(&rat(3, 2)), rat(-15, 256));
        assert_eq!(
            Polynomial::<Rational>::zero().eval(&rat(7, 3)),
            Rational::zero()
        );
        assert_eq!(
            Polynomial::monomial(2, Rational::one()).eval(&rat(7, 2)),
            rat(49, 4)
        );
    }

    #[test]
    fn derivative_examples() {
        let x3 = Polynomial::monomial(3, Rational::one());
        assert_eq!(x3.derivative(), Polynomial::monomial(2, rat(3, 1)));
        assert!(Polynomial::constant(rat(5, 1)).derivative().is_zero());
    }

    #[test]
    fn from_roots_examples() {
        let p = Polynomial::from_roots(Rational::one(), &[rat(1, 1), rat(2, 1)]);
        assert_eq!(p.coeffs(), &[rat(2, 1), rat(-3, 1), rat(1, 1)]);
        let p = Polynomial::from_roots(rat(5, 1), &[Rational::zero()]);
        assert_eq!(p, Polynomial::monomial(1, rat(5, 1)));
        let p = Polynomial::from_roots(
            Rational::one(),
            &[rat(1, 1), rat(2, 1), rat(3, 1), rat(4, 1)],
        );
        let expect: Vec<Rational> = [24, -50, 35, -10, 1].iter().map(|&v| rat(v, 1)).collect();
        assert_eq!(p.coeffs(), expect.as_slice());
    }

    #[test]
    fn elementary_symmetric_examples() {
        let v = [rat(1, 1), rat(1, 2), rat(1, 3)];
        assert_eq!(elementary_symmetric(&v, 0).unwrap(), Rational::one());
        assert_eq!(elementary_symmetric(&v, 2).unwrap(), Rational::one());
        assert_eq!(elementary_symmetric(&v, 3).unwrap(), rat(1, 6));
        assert!(elementary_symmetric(&v, 4).is_err());
    }

    #[test]
    fn trailing_zeros_trimmed_and_json() {
        let p = Polynomial::new(vec![rat(1, 1), Rational::zero()]);
        assert_eq!(p.degree(), Some(0));
        let json = serde_json::to_string(&q74()).unwrap();
        assert_eq!(
            json,
            r#"{"var":"x","coeffs":["0","1","-25/12","35/24","-5/12","1/24"]}"#
        );
        let back: Polynomial<Rational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q74());
    }
}
