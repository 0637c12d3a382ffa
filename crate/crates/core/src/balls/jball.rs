//! Exact disk-algebra form of j-metric balls.

use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Constraint, Disk, HalfPlane, Point, Region, Vec2, Window};
use crate::metrics::{boundary_samples, distance_to_boundary, Domain};

/// Half-width of the band around `log 2` treated as the half-plane case.
pub const LOG2_BAND: f64 = 1e-12;

/// The second constraint cutting a punctured-space j-ball out of its outer disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JBallShape {
    /// r < log 2: intersect with an open disk.
    Intersect { disk: Disk },
    /// r = log 2: intersect with an open half-plane.
    HalfPlaneCut { half_plane: HalfPlane },
    /// r > log 2: remove a closed disk.
    Subtract { disk: Disk },
}

/// `B_j(x, r)` in the plane punctured at one point, as outer disk plus one cut.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JBallDecomposition {
    pub outer: Disk,
    pub shape: JBallShape,
}

impl JBallDecomposition {
    pub fn to_region(&self) -> Region {
        let region = Region::disk(self.outer);
        match self.shape {
            JBallShape::Intersect { disk } => region.intersect(Constraint::Disk(disk)),
            JBallShape::HalfPlaneCut { half_plane } => region.intersect(Constraint::HalfPlane(half_plane)),
            JBallShape::Subtract { disk } => region.subtract(disk),
        }
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidRadius(r))
    }
}

/// Decomposition of the j-ball of ℝ² ∖ {puncture} centered at `x`.
///
/// Computed in the normal form x = e₁, puncture 0, with `t = e^r − 1`:
/// outer disk B(e₁, t) and, by the Apollonius circle of `|y − e₁| = t|y|`,
/// either B(e₁/(1−t²), t/(1−t²)), the half-plane y₁ > 1/2, or the closed disk
/// with center `e₁/(e^r(2−e^r))` and radius `(e^r−1)/(e^r(e^r−2))`. The result
/// is mapped back by the similarity taking e₁ to `x − puncture`.
pub fn j_ball_decomposition(puncture: Vec2, x: Vec2, r: f64) -> Result<JBallDecomposition> {
    check_radius(r)?;
    let u = x - puncture;
    let scale = u.norm();
    if scale == 0.0 {
        return Err(Error::OnBoundary);
    }
    let dir = u * (1.0 / scale);
    let to_world = |v: Vec2| puncture + v.rotate_by(dir) * scale;
    let t = r.exp_m1();
    let outer = Disk::new(x, t * scale)?;
    let shape = if (r - LN_2).abs() <= LOG2_BAND {
        JBallShape::HalfPlaneCut {
            half_plane: HalfPlane::new(dir, dir.dot(puncture) + 0.5 * scale)?,
        }
    } else if r < LN_2 {
        let k = 1.0 / (1.0 - t * t);
        JBallShape::Intersect {
            disk: Disk::new(to_world(Vec2::new(k, 0.0)), t * k * scale)?,
        }
    } else {
        let er = t + 1.0;
        // e^r − 2 = t − 1 keeps precision next to log 2
        let center = 1.0 / (er * (1.0 - t));
        let radius = t / (er * (t - 1.0));
        JBallShape::Subtract {
            disk: Disk::new(to_world(Vec2::new(center, 0.0)), radius * scale)?,
        }
    };
    Ok(JBallDecomposition { outer, shape })
}

/// `B_j(x, r)` in ℝ² ∖ {0}.
pub fn j_ball_punctured(x: &Point, r: f64) -> Result<Region> {
    j_ball_punctured_at(Vec2::ZERO, x, r)
}

/// `B_j(x, r)` in ℝ² ∖ {puncture}.
pub fn j_ball_punctured_at(puncture: Vec2, x: &Point, r: f64) -> Result<Region> {
    Ok(j_ball_decomposition(puncture, x.to_vec2()?, r)?.to_region().pruned())
}

/// `B_j(x, r)` in a general planar domain as the intersection of the
/// punctured-plane balls over (sampled) boundary points.
///
/// The outer disk is B(x, d(x)(e^r − 1)); every boundary sample contributes
/// its punctured-plane cut. Cuts that cannot change the set are pruned.
/// `m` and `window` only matter for slit domains (see [`boundary_samples`]).
pub fn j_ball_general(domain: &Domain, x: &Point, r: f64, m: usize, window: &Window) -> Result<Region> {
    check_radius(r)?;
    let xv = x.to_vec2()?;
    if domain.dimension() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: domain.dimension(),
        });
    }
    let d = distance_to_boundary(domain, x)?;
    let mut region = Region::disk(Disk::new(xv, d * r.exp_m1())?);
    for z in boundary_samples(domain, m, window) {
        let cut = j_ball_decomposition(z.to_vec2()?, xv, r)?;
        region = match cut.shape {
            JBallShape::Intersect { disk } => region.intersect(Constraint::Disk(disk)),
            JBallShape::HalfPlaneCut { half_plane } => region.intersect(Constraint::HalfPlane(half_plane)),
            JBallShape::Subtract { disk } => region.subtract(disk),
        };
    }
    Ok(region.pruned())
}
