//! Quadrature oracle for `∫ R(x) dx / √|P(x)|` with endpoint singularities.

use std::cell::Cell;

use super::gauss::{adaptive_gl, Estimate};
use crate::error::{Error, Result};
use crate::ratpoly::Polynomial;

/// The polynomial under the square root.
#[derive(Debug, Clone, PartialEq)]
pub enum Radicand {
    Poly(Polynomial<f64>),
    /// `leading · ∏ (x - r)`; endpoint roots are then evaluated without cancellation.
    Factored {
        leading: f64,
        roots: Vec<f64>,
    },
}

impl Radicand {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Radicand::Poly(p) => p.eval(&x),
            Radicand::Factored { leading, roots } => {
                roots.iter().fold(*leading, |acc, r| acc * (x - r))
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Radicand::Poly(p) => p.degree().unwrap_or(0),
            Radicand::Factored { roots, .. } => roots.len(),
        }
    }
}

/// `numerator(x) / (denominator(x) · √|radicand(x)|)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Integrand {
    pub numerator: Polynomial<f64>,
    pub denominator: Polynomial<f64>,
    pub radicand: Radicand,
}

impl Integrand {
    /// `1 / √|P|`
    pub fn inverse_sqrt(radicand: Radicand) -> Self {
        Integrand {
            numerator: Polynomial::constant(1.0),
            denominator: Polynomial::constant(1.0),
            radicand,
        }
    }

    pub fn with_numerator(mut self, numerator: Polynomial<f64>) -> Self {
        self.numerator = numerator;
        self
    }

    pub fn with_denominator(mut self, denominator: Polynomial<f64>) -> Self {
        self.denominator = denominator;
        self
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.numerator.eval(&x) / (self.denominator.eval(&x) * self.radicand.eval(x).abs().sqrt())
    }
}

/// A definite integral for [`quad_sqrt`].
///
/// If `a < b` the path is the segment `[a, b]`; if `a > b` it is the arc from
/// `a` through `∞` to `b`. Endpoints may be infinite.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    pub integrand: Integrand,
    pub a: f64,
    pub b: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
    /// Simple pole of the rational factor inside the path, integrated as a
    /// Cauchy principal value.
    pub principal_value: Option<f64>,
}

impl QuadratureSpec {
    pub fn new(integrand: Integrand, a: f64, b: f64) -> Self {
        QuadratureSpec {
            integrand,
            a,
            b,
            rel_tol: 1e-12,
            max_depth: 24,
            principal_value: None,
        }
    }

    pub fn with_tolerance(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_principal_value(mut self, pole: f64) -> Self {
        self.principal_value = Some(pole);
        self
    }
}

/// Taylor coefficients of the radicand about a finite endpoint, with the
/// constant term snapped to zero when the endpoint is (numerically) a root.
#[derive(Debug, Clone)]
struct Anchor {
    point: f64,
    taylor: Option<Vec<f64>>,
}

impl Anchor {
    fn new(radicand: &Radicand, point: f64, span: f64) -> Self {
        let taylor = match radicand {
            Radicand::Factored { .. } => None,
            Radicand::Poly(p) => {
                let mut c = p.shift(&point).coeffs().to_vec();
                let scale = c
                    .iter()
                    .enumerate()
                    .map(|(j, v)| v.abs() * span.abs().powi(j as i32))
                    .fold(0.0, f64::max);
                if let Some(c0) = c.first_mut() {
                    if c0.abs() <= 1e-13 * scale {
                        *c0 = 0.0;
                    }
                }
                Some(c)
            }
        };
        Anchor { point, taylor }
    }

    /// Radicand at `point + offset`.
    fn eval(&self, radicand: &Radicand, offset: f64) -> f64 {
        match (&self.taylor, radicand) {
            (Some(c), _) => c.iter().rev().fold(0.0, |acc, v| acc * offset + v),
            (None, Radicand::Factored { leading, roots }) => {
                let x = self.point + offset;
                roots.iter().fold(*leading, |acc, r| {
                    acc * if *r == self.point { offset } else { x - r }
                })
            }
            (None, Radicand::Poly(p)) => p.eval(&(self.point + offset)),
        }
    }
}

struct SignGuard {
    sign: Cell<i8>,
    broken: Cell<bool>,
}

impl SignGuard {
    fn new() -> Self {
        SignGuard {
            sign: Cell::new(0),
            broken: Cell::new(false),
        }
    }

    fn observe(&self, v: f64) {
        let s = if v > 0.0 {
            1
        } else if v < 0.0 {
            -1
        } else {
            self.broken.set(true);
            return;
        };
        match self.sign.get() {
            0 => self.sign.set(s),
            prev if prev != s => self.broken.set(true),
            _ => {}
        }
    }
}

/// One finite sub-path, integrated after `x = lo + (hi - lo) sin²θ`.
fn finite_piece(
    integrand: &Integrand,
    guard: &SignGuard,
    lo: f64,
    hi: f64,
    rel_tol: f64,
    max_depth: u32,
) -> Result<Estimate> {
    let span = hi - lo;
    let alo = Anchor::new(&integrand.radicand, lo, span);
    let ahi = Anchor::new(&integrand.radicand, hi, span);
    let g = |theta: f64| {
        let (s, c) = theta.sin_cos();
        let dlo = span * s * s;
        let dhi = span * c * c;
        let (x, q) = if dlo <= dhi {
            (lo + dlo, alo.eval(&integrand.radicand, dlo))
        } else {
            (hi - dhi, ahi.eval(&integrand.radicand, -dhi))
        };
        guard.observe(q);
        let jac = 2.0 * span * s * c;
        integrand.numerator.eval(&x) / (integrand.denominator.eval(&x) * q.abs().sqrt()) * jac
    };
    adaptive_gl(g, 0.0, std::f64::consts::FRAC_PI_2, rel_tol, 0.0, max_depth)
}

/// `∫_c^{±∞}` through `x = 1/s`, `s` between `1/c` and `0`.
fn infinite_piece(
    integrand: &Integrand,
    guard: &SignGuard,
    c: f64,
    rel_tol: f64,
    max_depth: u32,
) -> Result<Estimate> {
    let sc = 1.0 / c;
    let (lo, hi) = if sc > 0.0 { (0.0, sc) } else { (sc, 0.0) };
    let span = hi - lo;
    let g = |theta: f64| {
        let (sn, cs) = theta.sin_cos();
        let s = lo + span * sn * sn;
        if s == 0.0 {
            return 0.0;
        }
        let x = 1.0 / s;
        let q = integrand.radicand.eval(x);
        guard.observe(q);
        let f = integrand.numerator.eval(&x) / (integrand.denominator.eval(&x) * q.abs().sqrt());
        f / (s * s) * 2.0 * span * sn * cs
    };
    // ∫_c^∞ f dx = ∫_0^{1/c} f(1/s)/s² ds, ∫_{-∞}^c f dx = ∫_{1/c}^0 f(1/s)/s² ds
    adaptive_gl(g, 0.0, std::f64::consts::FRAC_PI_2, rel_tol, 0.0, max_depth)
}

/// `∫ f` over `lo < hi`, either possibly infinite.
fn segment(
    integrand: &Integrand,
    guard: &SignGuard,
    lo: f64,
    hi: f64,
    rel_tol: f64,
    max_depth: u32,
) -> Result<Estimate> {
    let add = |a: Estimate, b: Estimate| Estimate {
        value: a.value + b.value,
        error: a.error + b.error,
    };
    match (lo.is_finite(), hi.is_finite()) {
        (true, true) => finite_piece(integrand, guard, lo, hi, rel_tol, max_depth),
        (true, false) => {
            let c = lo + 1.0 + lo.abs();
            Ok(add(
                finite_piece(integrand, guard, lo, c, rel_tol, max_depth)?,
                infinite_piece(integrand, guard, c, rel_tol, max_depth)?,
            ))
        }
        (false, true) => {
            let c = hi - 1.0 - hi.abs();
            Ok(add(
                infinite_piece(integrand, guard, c, rel_tol, max_depth)?,
                finite_piece(integrand, guard, c, hi, rel_tol, max_depth)?,
            ))
        }
        (false, false) => Ok(add(
            segment(integrand, guard, lo, 0.0, rel_tol, max_depth)?,
            segment(integrand, guard, 0.0, hi, rel_tol, max_depth)?,
        )),
    }
}

/// Ordered list of segments making up the path from `a` to `b`.
fn path_segments(a: f64, b: f64) -> Vec<(f64, f64)> {
    if a < b {
        vec![(a, b)]
    } else if a > b {
        vec![(a, f64::INFINITY), (f64::NEG_INFINITY, b)]
    } else {
        vec![]
    }
}

/// `∫ R(x) dx / √|P(x)|` along the path of `spec`.
///
/// Endpoint inverse-square-root singularities are removed by
/// `x = a + (b-a) sin²θ`; infinite ends are mapped by `x = 1/s`. Errors if
/// the radicand changes sign on the path or the budget is exhausted.
pub fn quad_sqrt(spec: &QuadratureSpec) -> Result<f64> {
    Ok(quad_sqrt_estimate(spec)?.value)
}

/// Like [`quad_sqrt`], also returning the accumulated error estimate.
pub fn quad_sqrt_estimate(spec: &QuadratureSpec) -> Result<Estimate> {
    let (a, b) = (spec.a, spec.b);
    if a.is_nan() || b.is_nan() {
        return Err(Error::domain("quad_sqrt", "NaN endpoint"));
    }
    if let Radicand::Factored { roots, .. } = &spec.integrand.radicand {
        for &r in roots {
            let inside = path_segments(a, b).iter().any(|&(lo, hi)| lo < r && r < hi);
            if inside {
                return Err(Error::domain(
                    "quad_sqrt",
                    format!("radicand root {r} inside the path"),
                ));
            }
        }
    }
    let guard = SignGuard::new();
    let mut total = Estimate {
        value: 0.0,
        error: 0.0,
    };
    let mut push = |e: Estimate| {
        total.value += e.value;
        total.error += e.error;
    };
    let segs = path_segments(a, b);
    let (tol, depth) = (spec.rel_tol, spec.max_depth);
    match spec.principal_value {
        None => {
            for (lo, hi) in segs {
                push(segment(&spec.integrand, &guard, lo, hi, tol, depth)?);
            }
        }
        Some(x0) => {
            let (window, deflated) = pv_setup(spec, x0, &segs)?;
            for (lo, hi) in segs {
                if lo < x0 && x0 < hi {
                    push(segment(
                        &spec.integrand,
                        &guard,
                        lo,
                        x0 - window,
                        tol,
                        depth,
                    )?);
                    push(pv_window(spec, &deflated, &guard, x0, window)?);
                    push(segment(
                        &spec.integrand,
                        &guard,
                        x0 + window,
                        hi,
                        tol,
                        depth,
                    )?);
                } else {
                    push(segment(&spec.integrand, &guard, lo, hi, tol, depth)?);
                }
            }
        }
    }
    if guard.broken.get() {
        return Err(Error::domain(
            "quad_sqrt",
            "radicand changes sign on the path",
        ));
    }
    Ok(total)
}

fn pv_setup(spec: &QuadratureSpec, x0: f64, segs: &[(f64, f64)]) -> Result<(f64, Polynomial<f64>)> {
    if !x0.is_finite() {
        return Err(Error::domain("quad_sqrt", "principal value at infinity"));
    }
    let host = segs
        .iter()
        .find(|&&(lo, hi)| lo < x0 && x0 < hi)
        .ok_or_else(|| Error::domain("quad_sqrt", "principal-value pole is not inside the path"))?;
    let den = &spec.integrand.denominator;
    let coeffs = den.coeffs();
    let scale = coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| c.abs() * x0.abs().max(1.0).powi(j as i32))
        .fold(0.0, f64::max);
    if den.eval(&x0).abs() > 1e-10 * scale {
        return Err(Error::domain(
            "quad_sqrt",
            "principal-value point is not a pole",
        ));
    }
    // synthetic division by (x - x0)
    let n = coeffs.len();
    let mut q = vec![0.0; n.saturating_sub(1)];
    let mut carry = 0.0;
    for j in (1..n).rev() {
        carry = coeffs[j] + carry * x0;
        q[j - 1] = carry;
    }
    let dist = |e: f64| {
        if e.is_finite() {
            (x0 - e).abs()
        } else {
            f64::INFINITY
        }
    };
    let mut window = 0.5 * dist(host.0).min(dist(host.1));
    if !window.is_finite() {
        window = 0.5 * (1.0 + x0.abs());
    }
    Ok((window, Polynomial::new(q)))
}

/// `PV ∫_{x0-w}^{x0+w} g(x)/(x-x0) dx = ∫_0^w (g(x0+s) - g(x0-s))/s ds`.
fn pv_window(
    spec: &QuadratureSpec,
    deflated: &Polynomial<f64>,
    guard: &SignGuard,
    x0: f64,
    w: f64,
) -> Result<Estimate> {
    let it = &spec.integrand;
    let g = |x: f64| {
        let q = it.radicand.eval(x);
        guard.observe(q);
        it.numerator.eval(&x) / (deflated.eval(&x) * q.abs().sqrt())
    };
    let scale = (g(x0 + 0.5 * w).abs() + g(x0 - 0.5 * w).abs()) * (1.0 + w);
    adaptive_gl(
        |s: f64| (g(x0 + s) - g(x0 - s)) / s,
        0.0,
        w,
        spec.rel_tol,
        spec.rel_tol * scale,
        spec.max_depth,
    )
}
