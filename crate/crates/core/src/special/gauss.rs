//! Adaptive Gauss-Legendre and tanh-sinh rules on finite intervals.

use std::sync::OnceLock;

use crate::error::{Error, Result};

const ORDER: usize = 20;

fn rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = ORDER;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let k = k as f64;
                    let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
        }
        out
    })
}

/// `(Σ w f, Σ w |f|, max |f|)` over `[lo, hi]`.
fn gl<F: FnMut(f64) -> f64>(f: &mut F, lo: f64, hi: f64) -> (f64, f64, f64) {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let (mut s, mut a, mut m) = (0.0, 0.0, 0.0f64);
    for &(x, w) in rule() {
        let v = f(c + h * x);
        s += w * v;
        a += w * v.abs();
        m = m.max(v.abs());
    }
    (s * h, a * h.abs(), m)
}

/// Integral and accumulated error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// Adaptive bisection with a 20-point Gauss-Legendre rule.
///
/// Errors with [`Error::NoConvergence`] if the depth budget is exhausted
/// before the error estimate falls below `max(rel_tol · ∫|f|, abs_tol)`.
pub fn adaptive_gl<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_depth: u32,
) -> Result<Estimate> {
    if lo == hi {
        return Ok(Estimate {
            value: 0.0,
            error: 0.0,
        });
    }
    let (whole, abs, peak) = gl(&mut f, lo, hi);
    if !whole.is_finite() {
        return Err(Error::NoConvergence {
            estimate: whole,
            error: f64::INFINITY,
        });
    }
    let width = hi - lo;
    let eps = (rel_tol * abs)
        .max(abs_tol)
        .max(1e-14 * peak * width.abs())
        .max(f64::MIN_POSITIVE);
    let mut stack = vec![(lo, hi, whole, 0u32)];
    let (mut value, mut error) = (0.0, 0.0);
    let mut exhausted = false;
    while let Some((a, b, est, depth)) = stack.pop() {
        let m = 0.5 * (a + b);
        let (l, _, _) = gl(&mut f, a, m);
        let (r, _, _) = gl(&mut f, m, b);
        let diff = (l + r - est).abs();
        let local = eps * ((b - a) / width).abs();
        if diff <= local {
            value += l + r;
            error += diff;
        } else if depth >= max_depth {
            value += l + r;
            error += diff;
            exhausted = true;
        } else {
            stack.push((m, b, r, depth + 1));
            stack.push((a, m, l, depth + 1));
        }
    }
    if !value.is_finite() || exhausted && error > eps {
        return Err(Error::NoConvergence {
            estimate: value,
            error,
        });
    }
    Ok(Estimate { value, error })
}

/// Tanh-sinh rule on `[lo, hi]` for integrands with endpoint singularities.
///
/// `f` receives `(x, x - lo, hi - x)` so that the distances to the
/// endpoints are available without cancellation.
pub fn tanh_sinh<F: FnMut(f64, f64, f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    rel_tol: f64,
) -> Result<Estimate> {
    use std::f64::consts::FRAC_PI_2;
    let half = 0.5 * (hi - lo);
    let node = |t: f64| {
        let u = FRAC_PI_2 * t.sinh();
        // 1 - tanh(u) and 1 + tanh(u) without cancellation
        let e = (-2.0 * u.abs()).exp();
        let small = 2.0 * e / (1.0 + e);
        let big = 2.0 - small;
        let (dm, dp) = if u >= 0.0 { (big, small) } else { (small, big) };
        let ch = u.cosh();
        let w = FRAC_PI_2 * t.cosh() / (ch * ch);
        (dm * half, dp * half, w * half)
    };
    let mut sample = |t: f64| {
        let (dlo, dhi, w) = node(t);
        if dlo <= 0.0 || dhi <= 0.0 || w == 0.0 {
            return 0.0;
        }
        w * f(lo + dlo, dlo, dhi)
    };
    let tmax = 6.5;
    let mut h = 0.5;
    let mut sum = sample(0.0);
    let mut k = 1;
    while (k as f64) * h <= tmax {
        let t = k as f64 * h;
        sum += sample(t) + sample(-t);
        k += 1;
    }
    let mut prev = sum * h;
    for _ in 0..10 {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= tmax {
            let t = k as f64 * h;
            sum += sample(t) + sample(-t);
            k += 2;
        }
        let cur = sum * h;
        let err = (cur - prev).abs();
        if err <= rel_tol * cur.abs() {
            return Ok(Estimate {
                value: cur,
                error: err,
            });
        }
        prev = cur;
    }
    Err(Error::NoConvergence {
        estimate: prev,
        error: f64::NAN,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn polynomial_exactness() {
        let v = adaptive_gl(|x| x.powi(39), 0.0, 1.0, 1e-15, 0.0, 0).unwrap();
        assert_relative_eq!(v.value, 1.0 / 40.0, max_relative = 1e-14);
    }

    #[test]
    fn weights_sum_to_two() {
        let s: f64 = rule().iter().map(|(_, w)| w).sum();
        assert_relative_eq!(s, 2.0, max_relative = 1e-15);
    }

    #[test]
    fn tanh_sinh_endpoint_singularity() {
        // ∫₀¹ x^{-1/2} (1-x)^{-3/4} dx = B(1/2, 1/4)
        let v = tanh_sinh(|_, a, b| a.powf(-0.5) * b.powf(-0.75), 0.0, 1.0, 1e-12).unwrap();
        assert_relative_eq!(v.value, 5.244115108584239, max_relative = 1e-10);
    }
}
