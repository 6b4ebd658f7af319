use std::collections::BTreeMap;

use super::reduce::{check_degree, rebase_shifted};
use super::{BasisElement, ReductionResult};
use crate::error::{Error, Result};
use crate::ratpoly::{LaurentPolynomial, Polynomial, Rational};

fn take(work: &mut BTreeMap<i64, Rational>, j: i64) -> Rational {
    work.remove(&j).unwrap_or_default()
}

fn push(work: &mut BTreeMap<i64, Rational>, j: i64, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = work.entry(j).or_default();
    *slot += c;
    if slot.is_zero() {
        work.remove(&j);
    }
}

/// Independent reduction by stepping the `(M+1)`-term recurrence
///
/// `Σ_j [2(n+1)+j] b_j I_{n+j,p} = 2(x-p)^{n+1}√Q`
///
/// one index at a time. Indices below `-1` are eliminated from the bottom,
/// indices above `M-2` from the top. When `p` is a root of `Q` and `n = -1`
/// the `b_0 = 0` form is used instead, as in [`reduce_root_pole`](super::reduce_root_pole).
pub fn recurrence_oracle(
    q: &Polynomial<Rational>,
    p: &Rational,
    n: i64,
) -> Result<ReductionResult> {
    let m = check_degree(q)? as i64;
    let b = q.shift(p);
    let bc = |i: i64| b.coeff(i as usize);
    let two = Rational::from_integer(2);
    let mut work = BTreeMap::from([(n, Rational::one())]);
    let mut elementary = LaurentPolynomial::zero(p.clone());

    if bc(0).is_zero() && n < 0 {
        if n != -1 {
            return Err(Error::PoleOnRoot(p.to_string()));
        }
        if bc(1).is_zero() {
            return Err(Error::MultipleRoot(p.to_string()));
        }
        // recurrence at index -2 with b_0 = 0: the I_{-1} term carries -b_1
        let c = take(&mut work, -1);
        let lead = -bc(1);
        elementary.add_term(-1, &(&two * &c) / &lead);
        for i in 2..=m {
            let w = &Rational::from_integer(i - 2) * &bc(i);
            push(&mut work, i - 2, -&(&(&c * &w) / &lead));
        }
        let basic = work
            .iter()
            .map(|(&l, c)| {
                let key = if p.is_zero() {
                    BasisElement::Power(l as u32)
                } else {
                    BasisElement::Shifted(l as u32)
                };
                (key, c.clone())
            })
            .collect();
        return Ok(ReductionResult {
            degree: m as usize,
            p: p.clone(),
            n,
            basic,
            shifted: work,
            elementary,
        });
    }

    while let Some((&j, _)) = work.iter().next().filter(|(&j, _)| j <= -2) {
        let c = take(&mut work, j);
        let lead = &Rational::from_integer(2 * (j + 1)) * &bc(0);
        elementary.add_term(j + 1, &(&two * &c) / &lead);
        for i in 1..=m {
            let w = &Rational::from_integer(2 * (j + 1) + i) * &bc(i);
            if !w.is_zero() {
                push(&mut work, j + i, -&(&(&c * &w) / &lead));
            }
        }
    }
    while let Some((&j, _)) = work.iter().next_back().filter(|(&j, _)| j >= m - 1) {
        let c = take(&mut work, j);
        let s = j - m;
        let lead = &Rational::from_integer(2 * j - m + 2) * &bc(m);
        elementary.add_term(s + 1, &(&two * &c) / &lead);
        for i in 0..m {
            let w = &Rational::from_integer(2 * (s + 1) + i) * &bc(i);
            if !w.is_zero() {
                push(&mut work, s + i, -&(&(&c * &w) / &lead));
            }
        }
    }
    let basic = rebase_shifted(&work, p);
    Ok(ReductionResult {
        degree: m as usize,
        p: p.clone(),
        n,
        basic,
        shifted: work,
        elementary,
    })
}
