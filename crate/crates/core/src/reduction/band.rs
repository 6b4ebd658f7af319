use std::collections::BTreeMap;

use super::BandColumn;
use crate::error::{Error, Result};
use crate::ratpoly::{Polynomial, Rational};

pub(crate) fn degree_of(q: &Polynomial<Rational>) -> Result<usize> {
    match q.degree() {
        Some(m) if m >= 1 => Ok(m),
        _ => Err(Error::DegeneratePolynomial(format!(
            "degree {:?} is too small",
            q.degree()
        ))),
    }
}

/// `A_{l,n}` from the coefficients `a_0..a_M`.
pub(crate) fn a_entry(a: &[Rational], l: i64, n: i64) -> Rational {
    let m = a.len() as i64 - 1;
    if n <= m - 2 {
        return if l == n {
            Rational::one()
        } else {
            Rational::zero()
        };
    }
    if l > n || l < n - m || l < 0 {
        return Rational::zero();
    }
    let idx = (l + m - n) as usize;
    &Rational::from_integer(l + n - m + 2) * &a[idx]
}

/// `T_{l,n}` from the shifted coefficients `b_0..b_M`.
pub(crate) fn t_entry(b: &[Rational], l: i64, n: i64) -> Rational {
    let m = b.len() as i64 - 1;
    if n >= -1 {
        return if l == n {
            Rational::one()
        } else {
            Rational::zero()
        };
    }
    if l < n || l > n + m {
        return Rational::zero();
    }
    &Rational::from_integer(l + n + 2) * &b[(l - n) as usize]
}

/// Entry `A_{l,n}` of the transition matrix from `x^n` to `φ_n`.
pub fn matrix_a_entry(q: &Polynomial<Rational>, l: i64, n: i64) -> Result<Rational> {
    degree_of(q)?;
    if l < 0 || n < 0 {
        return Err(Error::InvalidArgument(format!(
            "A is indexed by l, n >= 0 (got l={l}, n={n})"
        )));
    }
    Ok(a_entry(q.coeffs(), l, n))
}

/// Entry `T_{l,n}` of the transition matrix from `(x-p)^n` to `ψ_n`.
pub fn matrix_t_entry(q: &Polynomial<Rational>, p: &Rational, l: i64, n: i64) -> Result<Rational> {
    let m = degree_of(q)? as i64;
    if l > m - 2 || n > m - 2 {
        return Err(Error::InvalidArgument(format!(
            "T is indexed by l, n <= M-2 = {} (got l={l}, n={n})",
            m - 2
        )));
    }
    let b = q.shift(p);
    if b.coeff(0).is_zero() {
        return Err(Error::PoleOnRoot(p.to_string()));
    }
    Ok(t_entry(b.coeffs(), l, n))
}

/// Column `n` of `B` by back-substitution in `a`'s coefficients.
pub(crate) fn b_column(a: &[Rational], n: i64) -> BandColumn {
    let m = a.len() as i64 - 1;
    if n <= m - 2 {
        return BandColumn::unit(n);
    }
    let mut col: BTreeMap<i64, Rational> = BTreeMap::new();
    // D block: rows n down to M-1.
    for l in (m - 1..=n).rev() {
        let mut acc = if l == n {
            Rational::one()
        } else {
            Rational::zero()
        };
        for k in (l + 1)..=n.min(l + m) {
            let entry = a_entry(a, l, k);
            if !entry.is_zero() {
                acc -= &entry * &col[&k];
            }
        }
        let diag = a_entry(a, l, l);
        col.insert(l, acc / diag);
    }
    // Top block: -C times the D part.
    for l in 0..=(m - 2) {
        let mut acc = Rational::zero();
        for k in (m - 1)..=n.min(l + m) {
            let entry = a_entry(a, l, k);
            if !entry.is_zero() {
                acc -= &entry * &col[&k];
            }
        }
        col.insert(l, acc);
    }
    BandColumn { n, entries: col }
}

/// Column `n` of `U` by back-substitution in the shifted coefficients `b`.
pub(crate) fn u_column(b: &[Rational], n: i64) -> BandColumn {
    let m = b.len() as i64 - 1;
    if n >= -1 {
        return BandColumn::unit(n);
    }
    let mut col: BTreeMap<i64, Rational> = BTreeMap::new();
    // W block: rows n up to -2.
    for l in n..=-2 {
        let mut acc = if l == n {
            Rational::one()
        } else {
            Rational::zero()
        };
        for k in n.max(l - m)..l {
            let entry = t_entry(b, l, k);
            if !entry.is_zero() {
                acc -= &entry * &col[&k];
            }
        }
        let diag = t_entry(b, l, l);
        col.insert(l, acc / diag);
    }
    // Top block: -Y times the W part.
    for l in -1..=(m - 2) {
        let mut acc = Rational::zero();
        for k in n.max(l - m)..=-2 {
            let entry = t_entry(b, l, k);
            if !entry.is_zero() {
                acc -= &entry * &col[&k];
            }
        }
        col.insert(l, acc);
    }
    BandColumn { n, entries: col }
}

/// Column `n >= 0` of `B = A⁻¹`, so that `x^n = Σ_l B_{l,n} φ_l(x)`.
pub fn solve_b_column(q: &Polynomial<Rational>, n: i64) -> Result<BandColumn> {
    degree_of(q)?;
    if n < 0 {
        return Err(Error::InvalidArgument(format!(
            "B column needs n >= 0, got {n}"
        )));
    }
    Ok(b_column(q.coeffs(), n))
}

/// Column `n <= M-2` of `U = T⁻¹`, so that `(x-p)^n = Σ_l U_{l,n} ψ_l(x)`.
pub fn solve_u_column(q: &Polynomial<Rational>, p: &Rational, n: i64) -> Result<BandColumn> {
    let m = degree_of(q)? as i64;
    if n > m - 2 {
        return Err(Error::InvalidArgument(format!(
            "U column needs n <= M-2 = {}, got {n}",
            m - 2
        )));
    }
    let b = q.shift(p);
    if b.coeff(0).is_zero() {
        return Err(Error::PoleOnRoot(p.to_string()));
    }
    Ok(u_column(b.coeffs(), n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

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

    fn generic7() -> Polynomial<Rational> {
        Polynomial::new((0..=7).map(|j| rat(2 * j + 1, j + 2)).collect())
    }

    #[test]
    fn a_entries() {
        let q = generic7();
        let a7 = q.coeff(7);
        assert_eq!(matrix_a_entry(&q, 9, 9).unwrap(), &rat(13, 1) * &a7);
        assert_eq!(matrix_a_entry(&q, 3, 3).unwrap(), Rational::one());
        assert_eq!(matrix_a_entry(&q, 1, 9).unwrap(), Rational::zero());
        // below the diagonal is zero
        assert_eq!(matrix_a_entry(&q, 10, 9).unwrap(), Rational::zero());
        // n = M-1: the l = -1 slot would carry a zero factor anyway
        assert_eq!(matrix_a_entry(&q, 0, 6).unwrap(), q.coeff(1));
    }

    #[test]
    fn t_entries_from_worked_example() {
        let q = q74();
        let p = rat(3, 2);
        assert_eq!(matrix_t_entry(&q, &p, -3, -3).unwrap(), rat(15, 64));
        assert_eq!(matrix_t_entry(&q, &p, 0, 0).unwrap(), Rational::one());
        assert_eq!(matrix_t_entry(&q, &p, 2, -3).unwrap(), rat(1, 24));
        assert!(matches!(
            matrix_t_entry(&q, &Rational::one(), -3, -3),
            Err(Error::PoleOnRoot(_))
        ));
    }

    #[test]
    fn b_column_leading_entries() {
        let q = generic7();
        let a7 = q.coeff(7);
        let a6 = q.coeff(6);
        let col = solve_b_column(&q, 9).unwrap();
        assert_eq!(col.get(9), (&rat(13, 1) * &a7).recip());
        let b89 = -(&rat(12, 1) * &a6) / (&rat(11 * 13, 1) * &a7.pow(2));
        assert_eq!(col.get(8), b89);
        assert_eq!(solve_b_column(&q, 0).unwrap(), BandColumn::unit(0));
        assert_eq!(solve_b_column(&q, 5).unwrap(), BandColumn::unit(5));
    }

    #[test]
    fn u_column_worked_example() {
        let col = solve_u_column(&q74(), &rat(3, 2), -3).unwrap();
        let expect = [
            (-3, rat(64, 15)),
            (-2, rat(64, 25)),
            (-1, rat(1027, 450)),
            (0, rat(-4, 9)),
            (1, rat(4, 15)),
            (2, rat(16, 45)),
            (3, rat(-8, 25)),
        ];
        for (l, v) in expect {
            assert_eq!(col.get(l), v, "U_{{{l},-3}}");
        }
        assert_eq!(col.entries.len(), 7);
    }

    #[test]
    fn u_column_identity_block() {
        for n in -1..=3 {
            assert_eq!(
                solve_u_column(&q74(), &rat(3, 2), n).unwrap(),
                BandColumn::unit(n)
            );
        }
        assert!(solve_u_column(&q74(), &rat(3, 2), 4).is_err());
    }
}
