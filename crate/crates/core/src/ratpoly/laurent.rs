use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Polynomial, Rational};

/// Sparse Laurent polynomial in `u = x - center`.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LaurentPolynomial {
    center: Rational,
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    pub fn zero(center: Rational) -> Self {
        LaurentPolynomial {
            center,
            terms: BTreeMap::new(),
        }
    }

    /// `c * (x - center)^e`
    pub fn monomial(center: Rational, e: i64, c: Rational) -> Self {
        let mut l = Self::zero(center);
        l.add_term(e, c);
        l
    }

    /// Reads a polynomial written in `u = x - center`.
    pub fn from_shifted(center: Rational, q: &Polynomial<Rational>) -> Self {
        let mut l = Self::zero(center);
        for (j, c) in q.coeffs().iter().enumerate() {
            l.add_term(j as i64, c.clone());
        }
        l
    }

    /// Re-expands a polynomial in `x` around `center`.
    pub fn from_x_poly(center: Rational, q: &Polynomial<Rational>) -> Self {
        let shifted = q.shift(&center);
        Self::from_shifted(center, &shifted)
    }

    pub fn center(&self) -> &Rational {
        &self.center
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.center, other.center);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.center.clone());
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(*e, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.center, other.center);
        let mut out = Self::zero(self.center.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// d/du, which equals d/dx.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.center.clone());
        for (e, c) in &self.terms {
            if *e != 0 {
                out.add_term(e - 1, c * &Rational::from_integer(*e));
            }
        }
        out
    }

    /// Exact value at `x`. Panics if `x == center` and a negative power is present.
    pub fn eval(&self, x: &Rational) -> Rational {
        let u = x - &self.center;
        self.terms.iter().map(|(e, c)| c * &u.pow(*e as i32)).sum()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let u = x - self.center.to_f64();
        self.terms
            .iter()
            .map(|(e, c)| c.to_f64() * u.powi(*e as i32))
            .sum()
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("({c})(x - {})^{e}", self.center))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
