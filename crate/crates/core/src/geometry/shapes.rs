use serde::{Deserialize, Serialize};

use super::point::Vec2;
use crate::error::{Error, Result};

/// Euclidean disk B²(center, radius).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: Vec2,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Vec2, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidRadius(radius));
        }
        if !center.is_finite() {
            return Err(Error::InvalidPoint("non-finite disk center".into()));
        }
        Ok(Self { center, radius })
    }

    /// Open-disk membership.
    pub fn contains_open(&self, p: Vec2) -> bool {
        (p - self.center).norm_sq() < self.radius * self.radius
    }

    /// Closed-disk membership.
    pub fn contains_closed(&self, p: Vec2) -> bool {
        (p - self.center).norm_sq() <= self.radius * self.radius
    }

    pub fn area(&self) -> f64 {
        std::f64::consts::PI * self.radius * self.radius
    }

    /// True when the closures of the two disks share a point.
    pub fn meets(&self, other: &Disk) -> bool {
        self.center.distance(other.center) <= self.radius + other.radius
    }

    /// True when `other` is contained in the closure of `self`.
    pub fn covers(&self, other: &Disk) -> bool {
        self.center.distance(other.center) + other.radius <= self.radius
    }
}

/// Open half-plane { y : ⟨normal, y⟩ > offset } with unit normal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfPlane {
    pub normal: Vec2,
    pub offset: f64,
}

impl HalfPlane {
    pub fn new(normal: Vec2, offset: f64) -> Result<Self> {
        let n = normal.norm();
        if !(n > 0.0 && n.is_finite() && offset.is_finite()) {
            return Err(Error::InvalidGeometry("degenerate half-plane".into()));
        }
        Ok(Self {
            normal: normal * (1.0 / n),
            offset: offset / n,
        })
    }

    pub fn contains(&self, p: Vec2) -> bool {
        self.normal.dot(p) > self.offset
    }

    /// Signed distance of `p` to the bounding line, positive inside.
    pub fn signed_distance(&self, p: Vec2) -> f64 {
        self.normal.dot(p) - self.offset
    }
}

/// { origin + t·direction : t > 0 } or t ≥ 0 when `includes_origin`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfLine {
    pub origin: Vec2,
    pub direction: Vec2,
    pub includes_origin: bool,
}

impl HalfLine {
    pub fn new(origin: Vec2, direction: Vec2, includes_origin: bool) -> Result<Self> {
        let n = direction.norm();
        if !(n > 0.0 && n.is_finite() && origin.is_finite()) {
            return Err(Error::InvalidGeometry("degenerate half-line".into()));
        }
        Ok(Self {
            origin,
            direction: direction * (1.0 / n),
            includes_origin,
        })
    }

    /// Euclidean distance from `p` to the closed half-line.
    pub fn distance(&self, p: Vec2) -> f64 {
        let t = (p - self.origin).dot(self.direction).max(0.0);
        p.distance(self.origin + self.direction * t)
    }

    pub fn point_at(&self, t: f64) -> Vec2 {
        self.origin + self.direction * t
    }

    /// Distance from the closed segment `[a, b]` to the closed half-line.
    pub fn segment_distance(&self, a: Vec2, b: Vec2) -> f64 {
        let d = b - a;
        let u = self.direction;
        let denom = d.cross(u);
        if denom != 0.0 {
            // a + s·d = o + t·u
            let w = self.origin - a;
            let s = w.cross(u) / denom;
            let t = w.cross(d) / denom;
            if (0.0..=1.0).contains(&s) && t >= 0.0 {
                return 0.0;
            }
        }
        let from_ends = self.distance(a).min(self.distance(b));
        let from_tip = super::point::segment_point_distance(a, b, self.origin);
        from_ends.min(from_tip)
    }
}

/// Axis-aligned rectangle [min.x, max.x] × [min.y, max.y].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub min: Vec2,
    pub max: Vec2,
}

impl Window {
    pub fn new(min: Vec2, max: Vec2) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && max.x > min.x && max.y > min.y) {
            return Err(Error::InvalidGeometry(format!(
                "window must have positive area: {min:?} .. {max:?}"
            )));
        }
        Ok(Self { min, max })
    }

    pub fn square(center: Vec2, half_side: f64) -> Result<Self> {
        let h = Vec2::new(half_side, half_side);
        Self::new(center - h, center + h)
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn center(&self) -> Vec2 {
        (self.min + self.max) * 0.5
    }

    pub fn contains(&self, p: Vec2) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    /// Window scaled by `factor` about its center.
    pub fn inflated(&self, factor: f64) -> Window {
        let c = self.center();
        let h = (self.max - self.min) * (0.5 * factor);
        Window {
            min: c - h,
            max: c + h,
        }
    }

    /// Largest `t ≥ 0` with `origin + t·dir` inside the window, if the ray
    /// meets it at all.
    pub fn ray_exit(&self, origin: Vec2, dir: Vec2) -> Option<f64> {
        let mut t0 = 0.0f64;
        let mut t1 = f64::INFINITY;
        for (o, d, lo, hi) in [
            (origin.x, dir.x, self.min.x, self.max.x),
            (origin.y, dir.y, self.min.y, self.max.y),
        ] {
            if d == 0.0 {
                if o < lo || o > hi {
                    return None;
                }
            } else {
                let (a, b) = ((lo - o) / d, (hi - o) / d);
                let (a, b) = if a <= b { (a, b) } else { (b, a) };
                t0 = t0.max(a);
                t1 = t1.min(b);
            }
        }
        (t1 >= t0).then_some(t1)
    }
}

/// Ordered vertex list, optionally closed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polyline {
    vertices: Vec<Vec2>,
    closed: bool,
}

impl Polyline {
    pub fn new(vertices: Vec<Vec2>, closed: bool) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidGeometry("polyline needs at least 2 vertices".into()));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidGeometry("non-finite polyline vertex".into()));
        }
        if let Some(i) = vertices.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::InvalidGeometry(format!(
                "consecutive duplicate vertices at index {i}"
            )));
        }
        if closed && vertices.len() > 2 && vertices.first() == vertices.last() {
            return Err(Error::InvalidGeometry(
                "closed polyline must not repeat its first vertex".into(),
            ));
        }
        Ok(Self { vertices, closed })
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Segments in traversal order, including the closing one.
    pub fn segments(&self) -> impl Iterator<Item = (Vec2, Vec2)> + '_ {
        let n = self.vertices.len();
        let count = if self.closed { n } else { n - 1 };
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Shoelace signed area; positive for counter-clockwise closed polylines.
    pub fn signed_area(&self) -> f64 {
        let n = self.vertices.len();
        0.5 * (0..n)
            .map(|i| self.vertices[i].cross(self.vertices[(i + 1) % n]))
            .sum::<f64>()
    }

    /// Winding number of the closed polyline around `p`.
    pub fn winding_number(&self, p: Vec2) -> i32 {
        let mut wn = 0;
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let side = (b - a).cross(p - a);
            if a.y <= p.y {
                if b.y > p.y && side > 0.0 {
                    wn += 1;
                }
            } else if b.y <= p.y && side < 0.0 {
                wn -= 1;
            }
        }
        wn
    }

    /// Minimum distance from `p` to the polyline.
    pub fn distance_to(&self, p: Vec2) -> f64 {
        self.segments()
            .map(|(a, b)| super::point::segment_point_distance(a, b, p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn length(&self) -> f64 {
        self.segments().map(|(a, b)| a.distance(b)).sum()
    }

    pub fn reversed(&self) -> Polyline {
        let mut v = self.vertices.clone();
        v.reverse();
        Polyline {
            vertices: v,
            closed: self.closed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_plane_normalizes() {
        let h = HalfPlane::new(Vec2::new(2.0, 0.0), 1.0).unwrap();
        assert_eq!(h.normal, Vec2::new(1.0, 0.0));
        assert_eq!(h.offset, 0.5);
        assert!(h.contains(Vec2::new(0.6, 3.0)));
        assert!(!h.contains(Vec2::new(0.5, 3.0)));
    }

    #[test]
    fn half_line_distances() {
        let slit = HalfLine::new(Vec2::ZERO, Vec2::new(-1.0, 0.0), true).unwrap();
        assert_eq!(slit.distance(Vec2::new(0.0, 3.0)), 3.0);
        assert_eq!(slit.distance(Vec2::new(-5.0, 2.0)), 2.0);
        assert_eq!(slit.distance(Vec2::new(3.0, 4.0)), 5.0);
        // crossing segment
        assert_eq!(
            slit.segment_distance(Vec2::new(-1.0, -1.0), Vec2::new(-1.0, 1.0)),
            0.0
        );
        let d = slit.segment_distance(Vec2::new(1.0, -1.0), Vec2::new(1.0, 1.0));
        assert!((d - 1.0).abs() < 1e-15);
    }

    #[test]
    fn ray_exit_of_window() {
        let w = Window::square(Vec2::ZERO, 4.0).unwrap();
        let t = w.ray_exit(Vec2::ZERO, Vec2::new(-1.0, 0.0)).unwrap();
        assert_eq!(t, 4.0);
        assert!(w.ray_exit(Vec2::new(10.0, 0.0), Vec2::new(1.0, 0.0)).is_none());
    }

    #[test]
    fn polyline_rejects_duplicates() {
        let a = Vec2::new(0.0, 0.0);
        assert!(Polyline::new(vec![a, a, Vec2::new(1.0, 0.0)], false).is_err());
        assert!(Polyline::new(vec![a], false).is_err());
    }

    #[test]
    fn winding_of_square() {
        let sq = Polyline::new(
            vec![
                Vec2::new(0.0, 0.0),
                Vec2::new(1.0, 0.0),
                Vec2::new(1.0, 1.0),
                Vec2::new(0.0, 1.0),
            ],
            true,
        )
        .unwrap();
        assert_eq!(sq.winding_number(Vec2::new(0.5, 0.5)), 1);
        assert_eq!(sq.reversed().winding_number(Vec2::new(0.5, 0.5)), -1);
        assert_eq!(sq.winding_number(Vec2::new(1.5, 0.5)), 0);
        assert!((sq.signed_area() - 1.0).abs() < 1e-15);
    }
}
