//! A disconnected j-ball in the twice-punctured plane `ℂ ∖ {−1, 1}`, centered at `√3 i`.

use serde::{Deserialize, Serialize};

use crate::balls::ball_raster;
use crate::error::{Error, Result};
use crate::geometry::{count_components, Point, Vec2, Window};
use crate::metrics::{j_distance, Domain, MetricKind};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// `(4 + 2√3 + h²) / (h² − 2h + 2)`, the squared ratio `|x − y|² / d(y)²` for
/// `x = √3 i`, `y = h − i`.
pub fn line_ratio(h: f64) -> f64 {
    (4.0 + 2.0 * SQRT3 + h * h) / (h * h - 2.0 * h + 2.0)
}

/// Stationary point `2√(2+√3) − 1 − √3` of [`line_ratio`], a local maximum.
pub fn line_ratio_stationary() -> f64 {
    2.0 * (2.0 + SQRT3).sqrt() - 1.0 - SQRT3
}

/// Open interval of radii for which the ball splits.
pub fn disconnection_interval() -> (f64, f64) {
    ((1.0 + SQRT3).ln(), 2.9f64.ln())
}

pub fn twice_punctured_plane() -> Domain {
    Domain::point_complement(vec![Point::xy(-1.0, 0.0), Point::xy(1.0, 0.0)]).expect("two distinct points")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MembershipCheck {
    /// `j(√3 i, −√3 i)`
    pub j_far_point: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparationCheck {
    pub h_samples: usize,
    /// Minimum of `log(1 + √f(h))` over the h-grid on `[0, 1+√3]`.
    pub grid_min: f64,
    /// `log(1 + √f(0)) = log(1 + (√3+1)/√2)`.
    pub f0_bound: f64,
    /// Value of the increasing tail `h > 1+√3` at its left end.
    pub tail_start: f64,
    /// Largest gap between [`line_ratio`] and a direct j-distance on the grid.
    pub direct_max_error: f64,
    pub log_29_10: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DisconnectionReport {
    pub r: f64,
    pub resolution: usize,
    pub window: Window,
    pub membership: MembershipCheck,
    pub separation: SeparationCheck,
    pub components: usize,
    pub disconnected: bool,
}

/// Checks that `B_j(√3 i, r)` in `ℂ ∖ {−1, 1}` contains `−√3 i` but misses the
/// line `Im y = −1`, and counts its raster components.
pub fn verify_disconnection_example(r: f64, resolution: usize) -> Result<DisconnectionReport> {
    let (lo, hi) = disconnection_interval();
    if !(r > lo && r < hi) {
        return Err(Error::OutOfRange(format!("r = {r} must lie in ({lo}, {hi})")));
    }
    if resolution < 300 {
        return Err(Error::OutOfRange(format!("resolution {resolution} must be at least 300")));
    }
    let domain = twice_punctured_plane();
    let x = Point::xy(0.0, SQRT3);
    let j_far_point = j_distance(&domain, &x, &Point::xy(0.0, -SQRT3))?;
    let membership = MembershipCheck {
        j_far_point,
        holds: j_far_point < r,
    };

    let h_max = 1.0 + SQRT3;
    let n = 4 * resolution;
    let mut grid_min = f64::INFINITY;
    let mut direct_max_error: f64 = 0.0;
    for k in 0..=n {
        let h = h_max * k as f64 / n as f64;
        let v = line_ratio(h).sqrt().ln_1p();
        grid_min = grid_min.min(v);
        let direct = j_distance(&domain, &x, &Point::xy(h, -1.0))?;
        direct_max_error = direct_max_error.max((direct - v).abs());
    }
    let f0_bound = line_ratio(0.0).sqrt().ln_1p();
    let tail_start = ((h_max * h_max + 4.0 + 2.0 * SQRT3).sqrt() / 2.0).ln_1p();
    let log_29_10 = hi;
    let separation = SeparationCheck {
        h_samples: n + 1,
        grid_min,
        f0_bound,
        tail_start,
        direct_max_error,
        log_29_10,
        holds: grid_min.min(tail_start) >= log_29_10 && log_29_10 > r,
    };

    let big_r = 2.0 * r.exp_m1();
    let window = Window::square(Vec2::new(0.0, SQRT3), 1.1 * big_r)?;
    let raster = ball_raster(MetricKind::DistanceRatio, &domain, &x, r, window, resolution, resolution)?;
    let components = count_components(&raster);
    Ok(DisconnectionReport {
        r,
        resolution,
        window,
        membership,
        separation,
        components,
        disconnected: components >= 2,
    })
}
