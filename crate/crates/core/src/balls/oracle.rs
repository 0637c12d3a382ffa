//! Direct-membership rasters `{y : m(x, y) < r}`, independent of the exact constructors.

use crate::error::{Error, Result};
use crate::geometry::{rasterize, GridRaster, Point, Region, Vec2, Window};
use crate::metrics::{distance_to_boundary, j_distance_xy, qh_distance_xy, Domain, MetricKind};

/// Membership predicate of a metric ball.
pub type BallPredicate = Box<dyn Fn(Vec2) -> bool + Send + Sync>;

/// `y ↦ m(x, y) < r` for a planar domain. The quasihyperbolic metric is only
/// available in punctured space, where its closed form is known.
pub fn ball_predicate(metric: MetricKind, domain: &Domain, x: &Point, r: f64) -> Result<BallPredicate> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidRadius(r));
    }
    let xv = x.to_vec2()?;
    distance_to_boundary(domain, x)?;
    match (metric, domain) {
        (MetricKind::QuasiHyperbolic, Domain::PuncturedSpace { puncture }) => {
            let p = puncture.to_vec2()?;
            Ok(Box::new(move |y| qh_distance_xy(p, xv, y) < r))
        }
        (MetricKind::QuasiHyperbolic, _) => Err(Error::Unsupported(
            "quasihyperbolic balls need a punctured domain (closed form)".into(),
        )),
        (MetricKind::DistanceRatio, _) => {
            let domain = domain.clone();
            Ok(Box::new(move |y| j_distance_xy(&domain, xv, y) < r))
        }
    }
}

/// Brute-force raster of `B_m(x, r)`.
pub fn ball_raster(
    metric: MetricKind,
    domain: &Domain,
    x: &Point,
    r: f64,
    window: Window,
    nx: usize,
    ny: usize,
) -> Result<GridRaster> {
    let pred = ball_predicate(metric, domain, x, r)?;
    rasterize(pred, window, nx, ny)
}

/// Raster of an exact region.
pub fn region_raster(region: &Region, window: Window, nx: usize, ny: usize) -> Result<GridRaster> {
    rasterize(|p| region.contains_xy(p), window, nx, ny)
}

/// Euclidean radius around `x` containing `B_m(x, r)`: `d(x)(e^r − 1)`.
///
/// For the j-metric this is the outer disk; for the quasihyperbolic metric in
/// punctured space the farthest point lies on the ray through `x`.
pub fn ball_extent(domain: &Domain, x: &Point, r: f64) -> Result<f64> {
    Ok(distance_to_boundary(domain, x)? * r.exp_m1())
}

/// Square window centered at `x` with side 4× [`ball_extent`].
pub fn default_ball_window(domain: &Domain, x: &Point, r: f64) -> Result<Window> {
    Window::square(x.to_vec2()?, 2.0 * ball_extent(domain, x, r)?)
}
