//! Carlson symmetric integrals `R_F`, `R_J`, `R_C` by the duplication theorem.

use crate::error::{Error, Result};

const RF_TOL: f64 = 1e-16;

fn check_finite(func: &'static str, args: &[f64]) -> Result<()> {
    if args.iter().any(|v| !v.is_finite()) {
        return Err(Error::domain(
            func,
            format!("non-finite argument in {args:?}"),
        ));
    }
    Ok(())
}

/// `R_F(x,y,z) = ½∫₀^∞ dt/√((t+x)(t+y)(t+z))`.
///
/// Requires `x, y, z ≥ 0` with at most one of them zero.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> Result<f64> {
    check_finite("R_F", &[x, y, z])?;
    if x < 0.0 || y < 0.0 || z < 0.0 {
        return Err(Error::domain("R_F", "negative argument"));
    }
    if [x, y, z].iter().filter(|v| **v == 0.0).count() > 1 {
        return Err(Error::domain("R_F", "more than one zero argument"));
    }
    let (x0, y0) = (x, y);
    let (mut x, mut y, mut z) = (x, y, z);
    let a0 = (x + y + z) / 3.0;
    let q =
        (3.0 * RF_TOL).powf(-1.0 / 6.0) * (a0 - x).abs().max((a0 - y).abs()).max((a0 - z).abs());
    let mut a = a0;
    let mut pow4 = 1.0;
    while pow4 * q >= a.abs() {
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lam = sx * sy + sx * sz + sy * sz;
        x = (x + lam) * 0.25;
        y = (y + lam) * 0.25;
        z = (z + lam) * 0.25;
        a = (a + lam) * 0.25;
        pow4 *= 0.25;
    }
    let xx = (a0 - x0) * pow4 / a;
    let yy = (a0 - y0) * pow4 / a;
    let zz = -xx - yy;
    let e2 = xx * yy - zz * zz;
    let e3 = xx * yy * zz;
    Ok((1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / a.sqrt())
}

/// `R_C(x,y) = R_F(x,y,y)` for `x ≥ 0`, `y > 0`.
///
/// For `y < 0` this returns the Cauchy principal value
/// `√(x/(x-y)) · R_C(x-y, -y)`.
pub fn carlson_rc(x: f64, y: f64) -> Result<f64> {
    check_finite("R_C", &[x, y])?;
    if x < 0.0 {
        return Err(Error::domain("R_C", "x < 0"));
    }
    if y == 0.0 {
        return Err(Error::domain("R_C", "y = 0"));
    }
    if y < 0.0 {
        return Ok((x / (x - y)).sqrt() * rc_positive(x - y, -y));
    }
    Ok(rc_positive(x, y))
}

fn rc_positive(x: f64, y: f64) -> f64 {
    let y0 = y;
    let (mut x, mut y) = (x, y);
    let a0 = (x + 2.0 * y) / 3.0;
    let q = (3.0 * RF_TOL).powf(-1.0 / 8.0) * (a0 - x).abs();
    let mut a = a0;
    let mut pow4 = 1.0;
    while pow4 * q >= a.abs() {
        let lam = 2.0 * x.sqrt() * y.sqrt() + y;
        x = (x + lam) * 0.25;
        y = (y + lam) * 0.25;
        a = (a + lam) * 0.25;
        pow4 *= 0.25;
    }
    let s = (y0 - a0) * pow4 / a;
    let poly = 1.0
        + s * s * (3.0 / 10.0)
        + s * s * s / 7.0
        + s.powi(4) * (3.0 / 8.0)
        + s.powi(5) * (9.0 / 22.0)
        + s.powi(6) * (159.0 / 208.0)
        + s.powi(7) * (9.0 / 8.0);
    poly / a.sqrt()
}

/// `R_J(x,y,z,p) = (3/2)∫₀^∞ dt/((t+p)√((t+x)(t+y)(t+z)))` for `p > 0`.
pub fn carlson_rj(x: f64, y: f64, z: f64, p: f64) -> Result<f64> {
    check_finite("R_J", &[x, y, z, p])?;
    if x < 0.0 || y < 0.0 || z < 0.0 {
        return Err(Error::domain("R_J", "negative argument"));
    }
    if [x, y, z].iter().filter(|v| **v == 0.0).count() > 1 {
        return Err(Error::domain("R_J", "more than one zero argument"));
    }
    if p <= 0.0 {
        return Err(Error::domain("R_J", "p <= 0"));
    }
    let (x0, y0, z0) = (x, y, z);
    let (mut x, mut y, mut z, mut p) = (x, y, z, p);
    let a0 = (x + y + z + 2.0 * p) / 5.0;
    let delta = (p - x) * (p - y) * (p - z);
    let q = (0.25 * RF_TOL).powf(-1.0 / 6.0)
        * (a0 - x)
            .abs()
            .max((a0 - y).abs())
            .max((a0 - z).abs())
            .max((a0 - p).abs());
    let mut a = a0;
    let mut pow4 = 1.0;
    let mut sum = 0.0;
    while pow4 * q >= a.abs() {
        let (sx, sy, sz, sp) = (x.sqrt(), y.sqrt(), z.sqrt(), p.sqrt());
        let lam = sx * sy + sx * sz + sy * sz;
        let d = (sp + sx) * (sp + sy) * (sp + sz);
        let e = delta * pow4 * pow4 * pow4 / (d * d);
        sum += pow4 * rc_positive(1.0, 1.0 + e) / d;
        x = (x + lam) * 0.25;
        y = (y + lam) * 0.25;
        z = (z + lam) * 0.25;
        p = (p + lam) * 0.25;
        a = (a + lam) * 0.25;
        pow4 *= 0.25;
    }
    let xx = (a0 - x0) * pow4 / a;
    let yy = (a0 - y0) * pow4 / a;
    let zz = (a0 - z0) * pow4 / a;
    let pp = -(xx + yy + zz) / 2.0;
    let e2 = xx * yy + xx * zz + yy * zz - 3.0 * pp * pp;
    let e3 = xx * yy * zz + 2.0 * e2 * pp + 4.0 * pp * pp * pp;
    let e4 = (2.0 * xx * yy * zz + e2 * pp + 3.0 * pp * pp * pp) * pp;
    let e5 = xx * yy * zz * pp * pp;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    Ok(pow4 * series / (a * a.sqrt()) + 6.0 * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn reference_values() {
        // mpmath.elliprf / elliprj / elliprc at 30 digits
        assert_relative_eq!(
            carlson_rf(1.0, 2.0, 0.0).unwrap(),
            1.3110287771460599052,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            carlson_rf(0.5, 1.0, 3.0).unwrap(),
            0.88569392320354833071,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            carlson_rj(0.0, 1.0, 2.0, 3.0).unwrap(),
            0.77688623778582332014,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            carlson_rj(2.0, 3.0, 4.0, 5.0).unwrap(),
            0.14297579667156753833,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            carlson_rc(0.0, 0.25).unwrap(),
            std::f64::consts::PI,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            carlson_rc(2.25, 2.0).unwrap(),
            2f64.ln(),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            carlson_rc(0.25, -2.0).unwrap(),
            2f64.ln() / 3.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn kernel_and_homogeneity() {
        for x in [0.1, 1.0, 7.5] {
            assert_relative_eq!(
                carlson_rf(x, x, x).unwrap(),
                1.0 / f64::sqrt(x),
                max_relative = 1e-15
            );
        }
        let (x, y, z) = (0.3, 1.7, 4.2);
        for lam in [0.01, 2.0, 900.0] {
            assert_relative_eq!(
                carlson_rf(lam * x, lam * y, lam * z).unwrap(),
                carlson_rf(x, y, z).unwrap() / f64::sqrt(lam),
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn domain_errors() {
        assert!(carlson_rf(-1.0, 1.0, 1.0).is_err());
        assert!(carlson_rf(0.0, 0.0, 1.0).is_err());
        assert!(carlson_rj(1.0, 1.0, 1.0, -1.0).is_err());
        assert!(carlson_rc(1.0, 0.0).is_err());
    }
}
