use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{segment_point_distance, segment_point_distance_nd, HalfLine, Point, Vec2, Window};

/// Proper subdomain G ⊊ ℝⁿ with an evaluable `d(x) = dist(x, ∂G)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Domain {
    /// ℝⁿ ∖ {puncture}; n is the puncture's dimension.
    PuncturedSpace { puncture: Point },
    /// ℝⁿ ∖ {p₁, …, p_k}.
    FinitePointComplement { points: Vec<Point> },
    /// ℝ² minus a closed ray.
    SlitPlane { slit: HalfLine },
}

/// Which hyperbolic-type metric a ball or distance refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricKind {
    QuasiHyperbolic,
    DistanceRatio,
}

impl Domain {
    pub fn punctured(dim: usize) -> Self {
        Domain::PuncturedSpace {
            puncture: Point::origin(dim),
        }
    }

    pub fn punctured_at(puncture: Point) -> Self {
        Domain::PuncturedSpace { puncture }
    }

    pub fn point_complement(points: Vec<Point>) -> Result<Self> {
        let first = points
            .first()
            .ok_or_else(|| Error::InvalidDomain("need at least one removed point".into()))?;
        let dim = first.dim();
        for (i, p) in points.iter().enumerate() {
            p.check_dim(dim)?;
            if points[..i].contains(p) {
                return Err(Error::InvalidDomain(format!("removed point {i} is repeated")));
            }
        }
        Ok(Domain::FinitePointComplement { points })
    }

    /// The plane slit along `{origin + t·direction : t ≥ 0}`.
    pub fn slit(origin: Vec2, direction: Vec2) -> Result<Self> {
        Ok(Domain::SlitPlane {
            slit: HalfLine::new(origin, direction, true)?,
        })
    }

    /// The plane slit along the non-positive real axis.
    pub fn negative_real_slit() -> Self {
        Domain::slit(Vec2::ZERO, Vec2::new(-1.0, 0.0)).expect("valid slit")
    }

    pub fn dimension(&self) -> usize {
        match self {
            Domain::PuncturedSpace { puncture } => puncture.dim(),
            Domain::FinitePointComplement { points } => points[0].dim(),
            Domain::SlitPlane { .. } => 2,
        }
    }

    /// Point used to center default windows: puncture, centroid of the removed points, or slit tip.
    pub fn anchor(&self) -> Vec<f64> {
        match self {
            Domain::PuncturedSpace { puncture } => puncture.coords().to_vec(),
            Domain::FinitePointComplement { points } => {
                let n = points.len() as f64;
                (0..points[0].dim())
                    .map(|k| points.iter().map(|p| p.coords()[k]).sum::<f64>() / n)
                    .collect()
            }
            Domain::SlitPlane { slit } => vec![slit.origin.x, slit.origin.y],
        }
    }

    /// Removed points, when the boundary is finite.
    pub fn removed_points(&self) -> Option<&[Point]> {
        match self {
            Domain::PuncturedSpace { puncture } => Some(std::slice::from_ref(puncture)),
            Domain::FinitePointComplement { points } => Some(points),
            Domain::SlitPlane { .. } => None,
        }
    }

    /// `d(x)` without the boundary check; 0 on the boundary.
    pub fn raw_distance(&self, x: &Point) -> Result<f64> {
        x.check_dim(self.dimension())?;
        Ok(match self {
            Domain::PuncturedSpace { puncture } => x.distance(puncture)?,
            Domain::FinitePointComplement { points } => points
                .iter()
                .map(|p| x.distance(p).expect("dimension checked"))
                .fold(f64::INFINITY, f64::min),
            Domain::SlitPlane { slit } => slit.distance(x.to_vec2()?),
        })
    }

    /// Planar `d(x)`; the domain must be two-dimensional.
    pub(crate) fn raw_distance_xy(&self, x: Vec2) -> f64 {
        let planar = |p: &Point| Vec2::new(p.coords()[0], p.coords()[1]);
        match self {
            Domain::PuncturedSpace { puncture } => x.distance(planar(puncture)),
            Domain::FinitePointComplement { points } => points
                .iter()
                .map(|p| x.distance(planar(p)))
                .fold(f64::INFINITY, f64::min),
            Domain::SlitPlane { slit } => slit.distance(x),
        }
    }

    pub(crate) fn check_planar(&self) -> Result<()> {
        if self.dimension() == 2 {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: 2,
                got: self.dimension(),
            })
        }
    }

    /// Whether `x` lies in G.
    pub fn contains(&self, x: &Point) -> Result<bool> {
        Ok(self.raw_distance(x)? > 0.0)
    }

    /// Distance from the closed segment `[a, b]` to ∂G.
    pub fn segment_clearance(&self, a: &Point, b: &Point) -> Result<f64> {
        let dim = self.dimension();
        a.check_dim(dim)?;
        b.check_dim(dim)?;
        Ok(match self {
            Domain::SlitPlane { slit } => slit.segment_distance(a.to_vec2()?, b.to_vec2()?),
            _ => self
                .removed_points()
                .expect("finite boundary")
                .iter()
                .map(|p| segment_point_distance_nd(a.coords(), b.coords(), p.coords()))
                .fold(f64::INFINITY, f64::min),
        })
    }

    pub(crate) fn segment_clearance_xy(&self, a: Vec2, b: Vec2) -> f64 {
        match self {
            Domain::SlitPlane { slit } => slit.segment_distance(a, b),
            _ => self
                .removed_points()
                .expect("finite boundary")
                .iter()
                .map(|p| segment_point_distance(a, b, Vec2::new(p.coords()[0], p.coords()[1])))
                .fold(f64::INFINITY, f64::min),
        }
    }
}

/// `d(x)`, the Euclidean distance from `x` to ∂G. Errors on the boundary.
pub fn distance_to_boundary(domain: &Domain, x: &Point) -> Result<f64> {
    let d = domain.raw_distance(x)?;
    if d > 0.0 {
        Ok(d)
    } else {
        Err(Error::OnBoundary)
    }
}

/// Boundary points used by the intersection construction of j-balls.
///
/// Finite boundaries are returned exactly (`m` is ignored). A slit yields its
/// tip followed by `m − 1` uniformly spaced points out to where the ray leaves
/// the window inflated by a factor of 2.
pub fn boundary_samples(domain: &Domain, m: usize, window: &Window) -> Vec<Point> {
    match domain {
        Domain::SlitPlane { slit } => {
            let big = window.inflated(2.0);
            let length = big.ray_exit(slit.origin, slit.direction).unwrap_or(0.0);
            if m <= 1 || length == 0.0 {
                return vec![slit.origin.into()];
            }
            let step = length / (m - 1) as f64;
            (0..m).map(|k| slit.point_at(k as f64 * step).into()).collect()
        }
        _ => domain.removed_points().expect("finite boundary").to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_examples() {
        let pd = Domain::punctured(2);
        assert_eq!(distance_to_boundary(&pd, &Point::xy(1.0, 0.0)).unwrap(), 1.0);

        let two = Domain::point_complement(vec![Point::xy(-1.0, 0.0), Point::xy(1.0, 0.0)]).unwrap();
        let d = distance_to_boundary(&two, &Point::xy(0.0, 3f64.sqrt())).unwrap();
        assert!((d - 2.0).abs() < 1e-15);

        let slit = Domain::negative_real_slit();
        assert_eq!(distance_to_boundary(&slit, &Point::xy(0.0, 3.0)).unwrap(), 3.0);
    }

    #[test]
    fn boundary_points_are_rejected() {
        let pd = Domain::punctured(3);
        assert_eq!(distance_to_boundary(&pd, &Point::origin(3)), Err(Error::OnBoundary));
        let slit = Domain::negative_real_slit();
        assert_eq!(distance_to_boundary(&slit, &Point::xy(-2.0, 0.0)), Err(Error::OnBoundary));
        assert!(matches!(
            distance_to_boundary(&pd, &Point::xy(1.0, 0.0)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn domain_validation() {
        assert!(Domain::point_complement(vec![]).is_err());
        assert!(Domain::point_complement(vec![Point::xy(0.0, 0.0), Point::xy(0.0, 0.0)]).is_err());
        assert!(Domain::slit(Vec2::ZERO, Vec2::ZERO).is_err());
    }

    #[test]
    fn sample_examples() {
        let w = Window::square(Vec2::ZERO, 4.0).unwrap();
        let two = Domain::point_complement(vec![Point::xy(-1.0, 0.0), Point::xy(1.0, 0.0)]).unwrap();
        assert_eq!(boundary_samples(&two, 100, &w), vec![Point::xy(-1.0, 0.0), Point::xy(1.0, 0.0)]);
        assert_eq!(boundary_samples(&Domain::punctured(2), 5, &w), vec![Point::xy(0.0, 0.0)]);

        let s = boundary_samples(&Domain::negative_real_slit(), 64, &w);
        assert_eq!(s.len(), 64);
        assert_eq!(s[0], Point::xy(0.0, 0.0));
        let last = s[63].to_vec2().unwrap();
        assert!((last.x + 8.0).abs() < 1e-12 && last.y == 0.0);
        let gaps: Vec<f64> = s.windows(2).map(|p| p[0].distance(&p[1]).unwrap()).collect();
        assert!(gaps.iter().all(|g| (g - gaps[0]).abs() < 1e-12));
    }
}
