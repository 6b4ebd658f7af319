//! Incomplete Legendre integrals `F`, `Π` and the canonical integrals `I₀`, `P`.

use std::f64::consts::FRAC_PI_2;

use super::carlson::{carlson_rc, carlson_rf, carlson_rj};
use crate::error::{Error, Result};

/// Distance from the characteristic singularity below which `Π` is rejected.
pub const SINGULAR_GAP: f64 = 1e-12;

fn angle(phi: f64) -> Result<(f64, f64)> {
    if !phi.is_finite() || phi.abs() > FRAC_PI_2 * (1.0 + 1e-15) {
        return Err(Error::domain(
            "ellip",
            format!("phi = {phi} outside [-pi/2, pi/2]"),
        ));
    }
    let s = phi.sin();
    let c = phi.cos();
    Ok((s, (c * c).max(0.0)))
}

/// `∫₀^φ dα/√(1-m sin²α)` from `sin φ` and `cos² φ`.
fn first_kind(s: f64, c2: f64, m: f64) -> Result<f64> {
    if s == 0.0 {
        return Ok(0.0);
    }
    let delta2 = 1.0 - m * s * s;
    if delta2 <= 0.0 {
        return Err(Error::domain(
            "F",
            format!("m sin^2(phi) = {} >= 1", m * s * s),
        ));
    }
    Ok(s * carlson_rf(c2, delta2, 1.0)?)
}

/// `∫₀^φ dα/((1-n sin²α)√(1-m sin²α))` for a path free of the singularity.
fn third_kind(s: f64, c2: f64, n: f64, m: f64) -> Result<f64> {
    let f = first_kind(s, c2, m)?;
    if s == 0.0 || n == 0.0 {
        return Ok(f);
    }
    let p = 1.0 - n * s * s;
    if p < SINGULAR_GAP {
        return Err(Error::domain(
            "Pi",
            format!(
                "1 - h sin^2 vanishes on the path (n sin^2(phi) = {})",
                n * s * s
            ),
        ));
    }
    Ok(f + n / 3.0 * s * s * s * carlson_rj(c2, 1.0 - m * s * s, 1.0, p)?)
}

/// Principal value of [`third_kind`] when `n sin²φ > 1`.
fn third_kind_pv(s: f64, c2: f64, n: f64, m: f64) -> Result<f64> {
    let p = 1.0 - n * s * s;
    if p >= SINGULAR_GAP {
        return third_kind(s, c2, n, m);
    }
    if p > -SINGULAR_GAP {
        return Err(Error::domain(
            "Pi",
            "singularity at the endpoint of the path",
        ));
    }
    // n > 1 here, so m/n < 1 and the companion integral is regular.
    let sa = s.abs();
    let csc2 = 1.0 / (sa * sa);
    let f = first_kind(sa, c2, m)?;
    let companion = third_kind(sa, c2, m / n, m)?;
    let x = (csc2 - 1.0).max(0.0) * (csc2 - m);
    let y = (csc2 - n) * (csc2 - m / n);
    let rc = if x == 0.0 { 0.0 } else { carlson_rc(x, y)? };
    Ok(s.signum() * (f - companion + csc2.sqrt() * rc))
}

fn check_modulus(func: &'static str, l: f64) -> Result<f64> {
    if !l.is_finite() {
        return Err(Error::domain(func, "non-finite modulus"));
    }
    Ok(l * l)
}

/// Incomplete integral of the first kind `F(φ, l) = ∫₀^φ dα/√(1 - l² sin²α)`.
pub fn ellip_f(phi: f64, l: f64) -> Result<f64> {
    let m = check_modulus("F", l)?;
    let (s, c2) = angle(phi)?;
    first_kind(s, c2, m)
}

/// Incomplete integral of the third kind
/// `Π(φ, h, l) = ∫₀^φ dα/((1 - h sin²α)√(1 - l² sin²α))`.
///
/// Rejects paths on which `1 - h sin²α` vanishes; see [`ellip_pi_pv`].
pub fn ellip_pi(phi: f64, h: f64, l: f64) -> Result<f64> {
    let m = check_modulus("Pi", l)?;
    let (s, c2) = angle(phi)?;
    if !h.is_finite() {
        return Err(Error::domain("Pi", "non-finite characteristic"));
    }
    third_kind(s, c2, h, m)
}

/// Cauchy principal value of `Π(φ, h, l)`; equals [`ellip_pi`] on regular paths.
pub fn ellip_pi_pv(phi: f64, h: f64, l: f64) -> Result<f64> {
    let m = check_modulus("Pi", l)?;
    let (s, c2) = angle(phi)?;
    if !h.is_finite() {
        return Err(Error::domain("Pi", "non-finite characteristic"));
    }
    third_kind_pv(s, c2, h, m)
}

fn canonical_args(func: &'static str, t: f64, k: f64) -> Result<(f64, f64)> {
    if !(0.0..=1.0).contains(&t) || !k.is_finite() {
        return Err(Error::domain(func, format!("t = {t} outside [0, 1]")));
    }
    if k * t >= 1.0 {
        return Err(Error::domain(func, format!("k t = {} >= 1", k * t)));
    }
    Ok((t.sqrt(), 1.0 - t))
}

/// `I₀(t, k) = ∫₀ᵗ ds/√(s(1-s)(1-ks)) = 2F(arcsin√t, √k)`, for `0 ≤ t ≤ 1`.
pub fn canonical_i0(t: f64, k: f64) -> Result<f64> {
    let (s, c2) = canonical_args("I0", t, k)?;
    Ok(2.0 * first_kind(s, c2, k)?)
}

/// `P(t, h, k) = ∫₀ᵗ ds/((1-hs)√(s(1-s)(1-ks))) = 2Π(arcsin√t, h, √k)`.
pub fn canonical_p(t: f64, h: f64, k: f64) -> Result<f64> {
    let (s, c2) = canonical_args("P", t, k)?;
    Ok(2.0 * third_kind(s, c2, h, k)?)
}

/// Principal value of [`canonical_p`] when `1/h` lies inside `(0, t)`.
pub fn canonical_p_pv(t: f64, h: f64, k: f64) -> Result<f64> {
    let (s, c2) = canonical_args("P", t, k)?;
    Ok(2.0 * third_kind_pv(s, c2, h, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn agm_k(l: f64) -> f64 {
        let (mut a, mut b) = (1.0f64, (1.0 - l * l).sqrt());
        for _ in 0..64 {
            if (a - b).abs() <= 4.0 * f64::EPSILON * a {
                break;
            }
            let an = (a + b) / 2.0;
            b = (a * b).sqrt();
            a = an;
        }
        PI / (2.0 * a)
    }

    #[test]
    fn trivial_values() {
        assert_eq!(ellip_f(0.0, 0.5).unwrap(), 0.0);
        assert_relative_eq!(ellip_f(0.7, 0.0).unwrap(), 0.7, max_relative = 1e-15);
        assert_eq!(ellip_pi(0.0, 0.3, 0.5).unwrap(), 0.0);
        assert_relative_eq!(
            ellip_pi(1.1, 0.0, 0.6).unwrap(),
            ellip_f(1.1, 0.6).unwrap(),
            max_relative = 1e-15
        );
        assert_relative_eq!(canonical_i0(1.0, 0.0).unwrap(), PI, max_relative = 1e-15);
        assert_relative_eq!(
            canonical_i0(0.3, 0.0).unwrap(),
            2.0 * f64::sqrt(0.3).asin(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn complete_first_kind_against_agm() {
        for i in 1..10 {
            let l = i as f64 / 10.0;
            assert_relative_eq!(
                ellip_f(FRAC_PI_2, l).unwrap(),
                agm_k(l),
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn reference_values() {
        // mpmath.ellipf(phi, l^2), mpmath.ellippi(h, phi, l^2)
        assert_relative_eq!(
            ellip_f(1.0, 0.8).unwrap(),
            1.1142677146671898,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            ellip_pi(PI / 3.0, 0.25, 0.5).unwrap(),
            1.1832792530542089,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            ellip_pi(1.2, -2.5, 0.9).unwrap(),
            0.8513327904172534,
            max_relative = 1e-14
        );
        // principal value, n sin^2 = 4/3 > 1
        let phi = (2.0f64 / 3.0).asin();
        assert_relative_eq!(
            ellip_pi_pv(phi, 3.0, f64::sqrt(0.75)).unwrap(),
            0.750476763213678,
            max_relative = 1e-13
        );
    }

    #[test]
    fn singular_paths_are_rejected() {
        let phi = (2.0f64 / 3.0).asin();
        assert!(ellip_pi(phi, 3.0, 0.5).is_err());
        assert!(ellip_pi(FRAC_PI_2, 1.0, 0.5).is_err());
        assert!(ellip_pi_pv(FRAC_PI_2, 1.0, 0.5).is_err());
        assert!(ellip_f(FRAC_PI_2, 1.0).is_err());
        assert!(ellip_f(2.0, 0.5).is_err());
        assert!(canonical_i0(1.5, 0.5).is_err());
    }

    #[test]
    fn monotone_in_phi_and_l() {
        let mut prev_row: Option<Vec<f64>> = None;
        for i in 0..=8 {
            let l = i as f64 / 10.0;
            let row: Vec<f64> = (1..=9)
                .map(|j| ellip_f(j as f64 / 9.0 * FRAC_PI_2, l).unwrap())
                .collect();
            assert!(row.windows(2).all(|w| w[0] < w[1]));
            if let Some(p) = &prev_row {
                assert!(row.iter().zip(p).all(|(a, b)| a > b));
            }
            prev_row = Some(row);
        }
    }
}
