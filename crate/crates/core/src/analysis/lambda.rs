//! The transcendental equation behind λ and the tangent analysis of
//! quasihyperbolic circles in the punctured plane.

use std::f64::consts::PI;

use super::roots::{bisect, secant};
use crate::error::{Error, Result};

/// Smallest tolerance accepted by the solvers.
pub const MIN_TOL: f64 = 1e-14;

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol >= MIN_TOL && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("tolerance {tol} must be at least {MIN_TOL}")))
    }
}

/// `f(z) = cos √(z²−1) + √(z²−1) sin √(z²−1)` for z ≥ 1.
pub fn lambda_f(z: f64) -> Result<f64> {
    if !(z >= 1.0) {
        return Err(Error::OutOfRange(format!("lambda_f needs z >= 1, got {z}")));
    }
    let w = (z * z - 1.0).sqrt();
    Ok(w.cos() + w * w.sin())
}

/// `f'(z) = z cos √(z²−1)`.
pub fn lambda_f_derivative(z: f64) -> Result<f64> {
    if !(z >= 1.0) {
        return Err(Error::OutOfRange(format!("needs z >= 1, got {z}")));
    }
    Ok(z * (z * z - 1.0).sqrt().cos())
}

fn f_unchecked(z: f64) -> f64 {
    let w = (z * z - 1.0).sqrt();
    w.cos() + w * w.sin()
}

/// λ: the unique zero of [`lambda_f`] on (2, π), by bisection to width `tol`.
///
/// The bracket is valid since `f(2) > 0 > f(π)` and `f' < 0` on the interval.
pub fn solve_lambda(tol: f64) -> Result<f64> {
    check_tol(tol)?;
    Ok(bisect(f_unchecked, 2.0, PI, tol)?.midpoint())
}

/// λ by the secant method from (2.9, 3.0); a cross-check of [`solve_lambda`].
pub fn solve_lambda_secant(tol: f64) -> Result<f64> {
    check_tol(tol)?;
    secant(f_unchecked, 2.9, 3.0, tol, 100)
}

/// Tangent direction `(a(s), b(s))` of the upper boundary half
/// `y(s) = e^s(cos φ, sin φ)`, `φ = √(r² − s²)`; `y'(s) = e^s (a, b) / φ`.
pub fn tangent_components(r: f64, s: f64) -> Result<(f64, f64)> {
    if !(r > 1.0) || !r.is_finite() {
        return Err(Error::OutOfRange(format!("tangent analysis needs r > 1, got {r}")));
    }
    if !(s.abs() < r) {
        return Err(Error::OutOfRange(format!("need |s| < r, got s = {s}, r = {r}")));
    }
    let phi = (r * r - s * s).sqrt();
    let (sin, cos) = phi.sin_cos();
    Ok((phi * cos + s * sin, phi * sin - s * cos))
}

/// `b'(s) = −(1 + s) a(s) / φ(s)`.
pub fn tangent_b_derivative(r: f64, s: f64) -> Result<f64> {
    let (a, _) = tangent_components(r, s)?;
    let phi = (r * r - s * s).sqrt();
    Ok(-(1.0 + s) * a / phi)
}
