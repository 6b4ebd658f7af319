use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::band::{b_column, u_column};
use super::{BasisElement, ReductionResult};
use crate::error::{Error, Result};
use crate::ratpoly::{LaurentPolynomial, Polynomial, Rational};

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::from(1u32);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Coefficients of `I_{n,p} = Σ_k (-1)^k C(n,k) p^k I_{n-k}`, keyed by `k`.
/// Zero terms are omitted.
pub fn binomial_rebase(n: u32, p: &Rational) -> BTreeMap<u32, Rational> {
    let mut out = BTreeMap::new();
    let neg_p = -p;
    for k in 0..=n {
        let c = Rational::from(binomial(n, k)) * neg_p.pow(k as i32);
        if !c.is_zero() {
            out.insert(k, c);
        }
    }
    out
}

pub(crate) fn check_degree(q: &Polynomial<Rational>) -> Result<usize> {
    match q.degree() {
        Some(m) if m >= 3 => Ok(m),
        d => Err(Error::DegeneratePolynomial(format!(
            "need deg Q >= 3, got {}",
            d.map_or("-inf".to_string(), |d| d.to_string())
        ))),
    }
}

fn add_to(map: &mut BTreeMap<BasisElement, Rational>, key: BasisElement, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key).or_default();
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// Re-expands `Σ_l c_l I_{l,p}` (`l >= -1`) on `{I_{-1,p}, I_0, I_1, …}`.
pub(crate) fn rebase_shifted(
    shifted: &BTreeMap<i64, Rational>,
    p: &Rational,
) -> BTreeMap<BasisElement, Rational> {
    let mut basic = BTreeMap::new();
    for (&l, c) in shifted {
        if l == -1 {
            add_to(&mut basic, BasisElement::Pole, c.clone());
            continue;
        }
        let l = l as u32;
        for (k, w) in binomial_rebase(l, p) {
            add_to(&mut basic, BasisElement::Power(l - k), c * &w);
        }
    }
    basic
}

/// Reduces `I_{n,p}` to `{I_{-1,p}, I_0, …, I_{M-2}}` plus an elementary part.
///
/// Non-negative `n` solves one column of `B` for `Q` written in `x - p`;
/// `n <= -2` solves one column of `U`. Positive shifted integrals are then
/// re-expanded on the monomial integrals `I_l`.
pub fn reduce(q: &Polynomial<Rational>, p: &Rational, n: i64) -> Result<ReductionResult> {
    let m = check_degree(q)?;
    let b = q.shift(p);
    let mut shifted = BTreeMap::new();
    let mut elementary = LaurentPolynomial::zero(p.clone());
    let two = Rational::from_integer(2);

    if n < 0 && b.coeff(0).is_zero() {
        return Err(Error::PoleOnRoot(p.to_string()));
    }
    match n {
        -1 => {
            shifted.insert(-1, Rational::one());
        }
        n if n >= 0 => {
            let col = b_column(b.coeffs(), n);
            for (l, c) in col.entries {
                if l <= m as i64 - 2 {
                    if !c.is_zero() {
                        shifted.insert(l, c);
                    }
                } else {
                    elementary.add_term(l + 1 - m as i64, &two * &c);
                }
            }
        }
        n => {
            let col = u_column(b.coeffs(), n);
            for (l, c) in col.entries {
                if l >= -1 {
                    if !c.is_zero() {
                        shifted.insert(l, c);
                    }
                } else {
                    elementary.add_term(l + 1, &two * &c);
                }
            }
        }
    }
    let basic = rebase_shifted(&shifted, p);
    Ok(ReductionResult {
        degree: m,
        p: p.clone(),
        n,
        basic,
        shifted,
        elementary,
    })
}

/// Root case: `p` a simple root of `Q`, so `b_0 = 0` and `I_{-1,p}` is
/// expressed through `I_{1,p}, …, I_{M-2,p}` and `(x-p)^{-1}√Q`.
pub fn reduce_root_pole(q: &Polynomial<Rational>, p: &Rational) -> Result<ReductionResult> {
    let m = check_degree(q)?;
    let b = q.shift(p);
    if !b.coeff(0).is_zero() {
        return Err(Error::NotARoot(p.to_string()));
    }
    let b1 = b.coeff(1);
    if b1.is_zero() {
        return Err(Error::MultipleRoot(p.to_string()));
    }
    let mut shifted = BTreeMap::new();
    let mut basic = BTreeMap::new();
    for j in 3..=m {
        let c = &Rational::from_integer(j as i64 - 2) * &b.coeff(j) / &b1;
        if c.is_zero() {
            continue;
        }
        let l = (j - 2) as u32;
        let key = if p.is_zero() {
            BasisElement::Power(l)
        } else {
            BasisElement::Shifted(l)
        };
        shifted.insert(l as i64, c.clone());
        basic.insert(key, c);
    }
    let elementary =
        LaurentPolynomial::monomial(p.clone(), -1, -&(Rational::from_integer(2) / &b1));
    Ok(ReductionResult {
        degree: m,
        p: p.clone(),
        n: -1,
        basic,
        shifted,
        elementary,
    })
}
