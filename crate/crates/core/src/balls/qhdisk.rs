//! Boundary of the quasihyperbolic disk in the punctured plane.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, Polyline, Vec2, Window};

/// Sampled boundary of `B_k(x, r)` in ℝ² ∖ {puncture}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QhDiskBoundary {
    pub puncture: Vec2,
    pub center: Vec2,
    pub r: f64,
    /// Uniform parameter grid on [−r, r] used for the upper half.
    pub s_grid: Vec<f64>,
    pub polyline: Polyline,
}

/// Parameterization of the upper half in the normal form x = e₁:
/// `y(s) = e^s (cos φ(s), sin φ(s))` with `φ(s) = √(r² − s²)`.
pub fn qh_boundary_point(r: f64, s: f64) -> Vec2 {
    let phi = (r * r - s * s).max(0.0).sqrt();
    Vec2::new(phi.cos(), phi.sin()) * s.exp()
}

/// [`qh_disk_boundary_at`] with the puncture at the origin.
pub fn qh_disk_boundary(x: &Point, r: f64, samples: usize) -> Result<QhDiskBoundary> {
    qh_disk_boundary_at(Vec2::ZERO, x, r, samples)
}

/// Closed polyline through `samples` points of the upper half followed by
/// the mirror image of the interior ones, mapped from the e₁ normal form
/// to `x` by a similarity centered at the puncture.
///
/// For r > π the quasihyperbolic circle wraps past the negative axis and
/// the disk is no longer simply connected; that case is refused.
pub fn qh_disk_boundary_at(puncture: Vec2, x: &Point, r: f64, samples: usize) -> Result<QhDiskBoundary> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidRadius(r));
    }
    if r > PI {
        return Err(Error::OutOfRange(format!(
            "r = {r} > π: not simply connected region; boundary parameterization invalid"
        )));
    }
    if samples < 8 {
        return Err(Error::OutOfRange(format!("need at least 8 samples, got {samples}")));
    }
    let xv = x.to_vec2()?;
    let u = xv - puncture;
    let scale = u.norm();
    if scale == 0.0 {
        return Err(Error::OnBoundary);
    }
    let dir = u * (1.0 / scale);
    let to_world = |v: Vec2| puncture + v.rotate_by(dir) * scale;

    let last = samples - 1;
    let s_grid: Vec<f64> = (0..samples)
        .map(|k| match k {
            0 => -r,
            k if k == last => r,
            k => -r + 2.0 * r * k as f64 / last as f64,
        })
        .collect();
    let upper: Vec<Vec2> = s_grid.iter().map(|&s| qh_boundary_point(r, s)).collect();
    let mut vertices: Vec<Vec2> = upper.iter().map(|&v| to_world(v)).collect();
    vertices.extend(
        upper[1..last]
            .iter()
            .rev()
            .map(|v| to_world(Vec2::new(v.x, -v.y))),
    );
    Ok(QhDiskBoundary {
        puncture,
        center: xv,
        r,
        s_grid,
        polyline: Polyline::new(vertices, true)?,
    })
}

/// Bounding box of `B_k(x, r)` in ℝ² ∖ {puncture}, valid for every `r`.
///
/// The disk is the union over `s ∈ (−r, r)` of the arcs of radius `|x|e^s`
/// spanning angles `±min(√(r² − s²), π)` around the direction of `x`.
pub fn qh_disk_bounds(puncture: Vec2, x: Vec2, r: f64) -> Result<Window> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidRadius(r));
    }
    let u = x - puncture;
    let scale = u.norm();
    if scale == 0.0 {
        return Err(Error::OnBoundary);
    }
    let beta = u.y.atan2(u.x);
    let (mut lo, mut hi) = (Vec2::new(f64::INFINITY, f64::INFINITY), Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
    let mut include = |p: Vec2| {
        lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
    };
    let n = 4096;
    for k in 0..=n {
        let s = -r + 2.0 * r * k as f64 / n as f64;
        let rho = scale * s.exp();
        let half = (r * r - s * s).max(0.0).sqrt().min(PI);
        let (a, b) = (beta - half, beta + half);
        let mut angles = vec![a, b];
        let first = (a / FRAC_PI_2).ceil() as i64;
        let last = (b / FRAC_PI_2).floor() as i64;
        angles.extend((first..=last).map(|q| q as f64 * FRAC_PI_2));
        for t in angles {
            include(puncture + Vec2::new(t.cos(), t.sin()) * rho);
        }
    }
    Window::new(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::qh_distance_punctured;

    #[test]
    fn named_vertices() {
        let b = qh_disk_boundary(&Point::xy(1.0, 0.0), 1.0, 9).unwrap();
        let v = b.polyline.vertices();
        assert_eq!(v.len(), 16);
        assert!((v[0] - Vec2::new((-1f64).exp(), 0.0)).norm() < 1e-15);
        assert!((v[8] - Vec2::new(1f64.exp(), 0.0)).norm() < 1e-15);
        // s = 0 at the middle of the 9-point grid
        assert!((v[4] - Vec2::new(1f64.cos(), 1f64.sin())).norm() < 1e-15);
    }

    #[test]
    fn vertices_on_the_qh_circle() {
        let x = Point::xy(-0.7, 1.9);
        let b = qh_disk_boundary(&x, 2.5, 300).unwrap();
        for v in b.polyline.vertices() {
            let d = qh_distance_punctured(&x, &Point::xy(v.x, v.y)).unwrap();
            assert!((d - 2.5).abs() < 1e-9, "{d}");
        }
    }

    #[test]
    fn refuses_large_radius_and_bad_input() {
        let e1 = Point::xy(1.0, 0.0);
        assert!(matches!(qh_disk_boundary(&e1, 3.2, 64), Err(Error::OutOfRange(_))));
        assert!(qh_disk_boundary(&e1, PI, 64).is_ok());
        assert!(qh_disk_boundary(&e1, 1.0, 4).is_err());
        assert_eq!(qh_disk_boundary(&Point::xy(0.0, 0.0), 1.0, 64).unwrap_err(), Error::OnBoundary);
    }

    #[test]
    fn bounds_cover_the_boundary() {
        let x = Point::xy(0.6, -0.8);
        let b = qh_disk_boundary(&x, 2.9, 2000).unwrap();
        let w = qh_disk_bounds(Vec2::ZERO, Vec2::new(0.6, -0.8), 2.9).unwrap();
        let eps = 1e-3;
        for v in b.polyline.vertices() {
            assert!(v.x >= w.min.x - eps && v.x <= w.max.x + eps && v.y >= w.min.y - eps && v.y <= w.max.y + eps);
        }
        let big = qh_disk_bounds(Vec2::ZERO, Vec2::new(1.0, 0.0), 3.3).unwrap();
        assert!((big.max.x - 3.3f64.exp()).abs() < 1e-9);
        assert!(big.min.x < -7.0 && big.min.x > -7.5 && big.max.y > 20.0 && big.max.y < 20.5);
    }
}
