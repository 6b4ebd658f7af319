//! Lauricella `F_D` by its Euler integral and by its power series.

use std::f64::consts::FRAC_PI_2;

use super::gauss::{adaptive_gl, tanh_sinh};
use crate::error::{Error, Result};

fn check_lengths(b: &[f64], x: &[f64]) -> Result<()> {
    if b.len() != x.len() {
        return Err(Error::InvalidArgument(format!(
            "F_D needs as many b as x ({} vs {})",
            b.len(),
            x.len()
        )));
    }
    if b.iter().chain(x).any(|v| !v.is_finite()) {
        return Err(Error::domain("F_D", "non-finite parameter"));
    }
    Ok(())
}

/// `F_D(a; b; c; x) = Γ(c)/(Γ(a)Γ(c-a)) ∫₀¹ t^{a-1}(1-t)^{c-a-1} ∏(1-x_j t)^{-b_j} dt`.
///
/// Requires `c > a > 0` and every `x_j < 1`.
pub fn lauricella_fd(a: f64, b: &[f64], c: f64, x: &[f64]) -> Result<f64> {
    check_lengths(b, x)?;
    if !(a > 0.0 && c > a) {
        return Err(Error::domain(
            "F_D",
            format!("need c > a > 0, got a = {a}, c = {c}"),
        ));
    }
    if x.iter().any(|&v| v >= 1.0) {
        return Err(Error::domain("F_D", "integral route needs every x_j < 1"));
    }
    let norm = (libm::lgamma(c) - libm::lgamma(a) - libm::lgamma(c - a)).exp();
    let (p, q) = (2.0 * a - 1.0, 2.0 * (c - a) - 1.0);
    // t = sin²θ, dt t^{a-1}(1-t)^{c-a-1} = 2 sin^{2a-1}θ cos^{2c-2a-1}θ dθ
    let weight = |sin: f64, cos: f64| {
        let t = sin * sin;
        let prod: f64 = b
            .iter()
            .zip(x)
            .map(|(bj, xj)| (1.0 - xj * t).powf(-bj))
            .product();
        2.0 * sin.powf(p) * cos.powf(q) * prod
    };
    let value = if p >= 0.0 && q >= 0.0 {
        adaptive_gl(
            |theta: f64| {
                let (s, c) = theta.sin_cos();
                weight(s, c)
            },
            0.0,
            FRAC_PI_2,
            1e-13,
            0.0,
            24,
        )?
        .value
    } else {
        tanh_sinh(
            |_, dlo, dhi| weight(dlo.sin(), dhi.sin()),
            0.0,
            FRAC_PI_2,
            1e-12,
        )?
        .value
    };
    Ok(norm * value)
}

/// `Σ_s (a)_s/(c)_s e_s` where `Σ e_s z^s = ∏(1-x_j z)^{-b_j}`; needs `|x_j| < 1`.
///
/// Stops once 20 consecutive terms are below `1e-16` of the partial sum.
pub fn lauricella_fd_series(a: f64, b: &[f64], c: f64, x: &[f64]) -> Result<f64> {
    check_lengths(b, x)?;
    if x.iter().any(|v| v.abs() >= 1.0) {
        return Err(Error::domain("F_D", "series needs every |x_j| < 1"));
    }
    if c <= 0.0 && c.fract() == 0.0 {
        return Err(Error::domain("F_D", "c is a non-positive integer"));
    }
    let n = x.len();
    // D(z) = ∏(1 - x_j z), N(z) = Σ_j b_j x_j ∏_{i≠j}(1 - x_i z)
    let mut d = vec![1.0];
    for &xj in x {
        let mut next = vec![0.0; d.len() + 1];
        for (i, v) in d.iter().enumerate() {
            next[i] += v;
            next[i + 1] -= xj * v;
        }
        d = next;
    }
    let mut nu = vec![0.0; n.max(1)];
    for j in 0..n {
        let mut part = vec![1.0];
        for (i, &xi) in x.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![0.0; part.len() + 1];
            for (k, v) in part.iter().enumerate() {
                next[k] += v;
                next[k + 1] -= xi * v;
            }
            part = next;
        }
        for (k, v) in part.iter().enumerate() {
            nu[k] += b[j] * x[j] * v;
        }
    }
    let mut e: Vec<f64> = vec![1.0];
    let mut ratio = 1.0;
    let mut sum = 1.0;
    let mut quiet = 0;
    for s in 0..2_000_000usize {
        let mut acc = 0.0;
        for (i, v) in nu.iter().enumerate().take(s + 1) {
            acc += v * e[s - i];
        }
        for i in 1..=n.min(s) {
            acc -= d[i] * (s + 1 - i) as f64 * e[s + 1 - i];
        }
        e.push(acc / (s + 1) as f64);
        ratio *= (a + s as f64) / (c + s as f64);
        let term = ratio * e[s + 1];
        sum += term;
        if term.abs() <= 1e-16 * sum.abs() {
            quiet += 1;
            if quiet >= 20 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
        if !sum.is_finite() {
            break;
        }
    }
    Err(Error::NoConvergence {
        estimate: sum,
        error: f64::NAN,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gauss_reduction() {
        let want = 2.0 * 2f64.ln();
        assert_relative_eq!(
            lauricella_fd(1.0, &[1.0], 2.0, &[0.5]).unwrap(),
            want,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            lauricella_fd_series(1.0, &[1.0], 2.0, &[0.5]).unwrap(),
            want,
            max_relative = 1e-14
        );
    }

    #[test]
    fn zero_arguments() {
        let b = [3.0, 0.5, 0.5];
        assert_relative_eq!(
            lauricella_fd(0.5, &b, 1.0, &[0.0; 3]).unwrap(),
            1.0,
            max_relative = 1e-12
        );
        assert_eq!(lauricella_fd_series(0.5, &b, 1.0, &[0.0; 3]).unwrap(), 1.0);
    }

    #[test]
    fn routes_agree() {
        let b = [3.0, 0.5, 0.5, 0.5];
        let x = [0.5, 0.25, 1.0 / 3.0, -0.5];
        let i = lauricella_fd(0.5, &b, 1.0, &x).unwrap();
        let s = lauricella_fd_series(0.5, &b, 1.0, &x).unwrap();
        assert_relative_eq!(i, s, max_relative = 1e-10);
        // singular endpoint weights take the tanh-sinh route
        let i = lauricella_fd(0.3, &[1.5, -2.0], 1.1, &[0.4, 0.2]).unwrap();
        let s = lauricella_fd_series(0.3, &[1.5, -2.0], 1.1, &[0.4, 0.2]).unwrap();
        assert_relative_eq!(i, s, max_relative = 1e-9);
    }

    #[test]
    fn domain() {
        assert!(lauricella_fd(1.0, &[1.0], 1.0, &[0.5]).is_err());
        assert!(lauricella_fd(1.0, &[1.0], 2.0, &[1.5]).is_err());
        assert!(lauricella_fd_series(1.0, &[1.0], 2.0, &[1.0]).is_err());
        assert!(lauricella_fd(1.0, &[1.0, 2.0], 2.0, &[0.5]).is_err());
    }
}
