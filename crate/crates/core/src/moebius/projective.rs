use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point of the real projective line `ℝ ∪ {∞}`.
#[derive(Debug, Clone, PartialEq)]
pub enum ProjPoint<S> {
    Finite(S),
    Infinity,
}

impl<S: Scalar> ProjPoint<S> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    pub fn finite(&self) -> Option<&S> {
        match self {
            ProjPoint::Finite(v) => Some(v),
            ProjPoint::Infinity => None,
        }
    }

    /// The finite value, or an error naming `what`.
    pub fn expect_finite(&self, what: &str) -> Result<S> {
        self.finite()
            .cloned()
            .ok_or_else(|| Error::InvalidArgument(format!("{what} is the point at infinity")))
    }

    pub fn to_f64(&self) -> ProjPoint<f64> {
        match self {
            ProjPoint::Finite(v) => ProjPoint::Finite(v.to_f64()),
            ProjPoint::Infinity => ProjPoint::Infinity,
        }
    }

    /// `num / den` with `x/0 = ∞` for `x ≠ 0`.
    pub fn ratio(num: S, den: S) -> Self {
        if den.is_zero() {
            ProjPoint::Infinity
        } else {
            ProjPoint::Finite(num / den)
        }
    }
}

impl<S> From<S> for ProjPoint<S> {
    fn from(v: S) -> Self {
        ProjPoint::Finite(v)
    }
}

impl<S: fmt::Display> fmt::Display for ProjPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(v) => write!(f, "{v}"),
            ProjPoint::Infinity => f.write_str("inf"),
        }
    }
}

impl<S: fmt::Display> Serialize for ProjPoint<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        s.collect_str(self)
    }
}

fn diff<S: Scalar>(a: &ProjPoint<S>, b: &ProjPoint<S>) -> Option<S> {
    match (a, b) {
        (ProjPoint::Finite(x), ProjPoint::Finite(y)) => Some(x.clone() - y.clone()),
        _ => None,
    }
}

/// `(d1,d2;d3,d4) = ((d3-d1)(d4-d2)) / ((d3-d2)(d4-d1))`.
///
/// One coincident pair gives the limit value `0`, `1` or `∞`; factors
/// containing a single `∞` cancel in pairs.
pub fn cross_ratio<S: Scalar>(
    d1: &ProjPoint<S>,
    d2: &ProjPoint<S>,
    d3: &ProjPoint<S>,
    d4: &ProjPoint<S>,
) -> Result<ProjPoint<S>> {
    let pts = [d1, d2, d3, d4];
    let mut distinct: Vec<&ProjPoint<S>> = Vec::new();
    for p in pts {
        if !distinct.contains(&p) {
            distinct.push(p);
        }
    }
    if distinct.len() < 3 {
        return Err(Error::DegenerateCrossRatio);
    }
    if d1 == d3 || d2 == d4 {
        return Ok(ProjPoint::Finite(S::zero()));
    }
    if d2 == d3 || d1 == d4 {
        return Ok(ProjPoint::Infinity);
    }
    if d1 == d2 || d3 == d4 {
        return Ok(ProjPoint::Finite(S::one()));
    }
    let prod = |a: Option<S>, b: Option<S>| match (a, b) {
        (Some(x), Some(y)) => x * y,
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => S::one(),
    };
    let num = prod(diff(d3, d1), diff(d4, d2));
    let den = prod(diff(d3, d2), diff(d4, d1));
    Ok(ProjPoint::ratio(num, den))
}

/// Membership of `x` in the open arc `L(a, b)` traversed in the positive
/// direction of `ℝP¹` (increasing, through `∞` back to `-∞`).
///
/// Errors if `x` coincides with an endpoint.
pub fn arc_contains<S: Scalar>(a: &S, b: &S, x: &ProjPoint<S>) -> Result<bool> {
    match x {
        ProjPoint::Infinity => Ok(a > b),
        ProjPoint::Finite(x) => {
            if x == a || x == b {
                return Err(Error::PointOnRoot(format!("{:?}", x)));
            }
            Ok(if a < b {
                a < x && x < b
            } else {
                x > a || x < b
            })
        }
    }
}
