use super::domain::{distance_to_boundary, Domain};
use crate::error::{Error, Result};
use crate::geometry::{dot, norm, Point, Polyline, Vec2};

/// Relative stopping tolerance of the adaptive midpoint rule.
pub const QUADRATURE_RTOL: f64 = 1e-8;
const MAX_SUBDIVISIONS: usize = 3usize.pow(13);

/// `j_G(x, y) = log(1 + |x − y| / min{d(x), d(y)})`.
pub fn j_distance(domain: &Domain, x: &Point, y: &Point) -> Result<f64> {
    let dx = distance_to_boundary(domain, x)?;
    let dy = distance_to_boundary(domain, y)?;
    Ok((x.distance(y)? / dx.min(dy)).ln_1p())
}

/// Planar j-distance with no boundary checks; `∞` on the boundary.
pub(crate) fn j_distance_xy(domain: &Domain, x: Vec2, y: Vec2) -> f64 {
    let m = domain.raw_distance_xy(x).min(domain.raw_distance_xy(y));
    if m > 0.0 {
        (x.distance(y) / m).ln_1p()
    } else {
        f64::INFINITY
    }
}

/// Quasihyperbolic distance in ℝⁿ ∖ {0}: `√(α² + log²(|x|/|y|))`, α the angle at the origin.
pub fn qh_distance_punctured(x: &Point, y: &Point) -> Result<f64> {
    x.check_dim(y.dim())?;
    qh_from_vectors(x.coords(), y.coords())
}

/// [`qh_distance_punctured`] for an arbitrary puncture.
pub fn qh_distance_punctured_at(puncture: &Point, x: &Point, y: &Point) -> Result<f64> {
    qh_from_vectors(&x.sub(puncture)?, &y.sub(puncture)?)
}

fn qh_from_vectors(u: &[f64], v: &[f64]) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            got: v.len(),
        });
    }
    let (nu, nv) = (norm(u), norm(v));
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::OnBoundary);
    }
    let cos = (dot(u, v) / (nu * nv)).clamp(-1.0, 1.0);
    Ok(cos.acos().hypot((nu / nv).ln()))
}

/// Planar closed form relative to `puncture`; `∞` at the puncture.
pub(crate) fn qh_distance_xy(puncture: Vec2, x: Vec2, y: Vec2) -> f64 {
    let (u, v) = (x - puncture, y - puncture);
    let (nu, nv) = (u.norm(), v.norm());
    if nu == 0.0 || nv == 0.0 {
        return f64::INFINITY;
    }
    let cos = (u.dot(v) / (nu * nv)).clamp(-1.0, 1.0);
    cos.acos().hypot((nu / nv).ln())
}

/// Quasihyperbolic length `∫ |dz| / d(z)` of a planar polyline.
///
/// Each segment is integrated with a composite midpoint rule, tripling the
/// subdivision until successive estimates agree to [`QUADRATURE_RTOL`].
pub fn qh_polyline_length(domain: &Domain, poly: &Polyline) -> Result<f64> {
    domain.check_planar()?;
    let mut total = 0.0;
    for (a, b) in poly.segments() {
        if domain.segment_clearance_xy(a, b) <= 0.0 {
            return Err(Error::OnBoundary);
        }
        total += segment_length(domain, a, b);
    }
    Ok(total)
}

fn segment_length(domain: &Domain, a: Vec2, b: Vec2) -> f64 {
    let len = a.distance(b);
    let f = |t: f64| 1.0 / domain.raw_distance_xy(a.lerp(b, t));
    // midpoints of n cells are a subset of those of 3n cells
    let mut n = 1usize;
    let mut sum = f(0.5);
    let mut estimate = len * sum;
    while n < MAX_SUBDIVISIONS {
        let m = 3 * n;
        let mut added = 0.0;
        for k in 0..n {
            let base = 3 * k;
            added += f((base as f64 + 0.5) / m as f64) + f((base as f64 + 2.5) / m as f64);
        }
        sum += added;
        n = m;
        let next = len * sum / n as f64;
        let converged = (next - estimate).abs() <= QUADRATURE_RTOL * next.abs();
        estimate = next;
        if converged {
            break;
        }
    }
    estimate
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{E, PI};

    use super::*;

    #[test]
    fn j_examples() {
        let pd = Domain::punctured(2);
        let v = j_distance(&pd, &Point::xy(1.0, 0.0), &Point::xy(3.0, 0.0)).unwrap();
        assert!((v - 3f64.ln()).abs() < 1e-15);

        let s3 = 3f64.sqrt();
        let two = Domain::point_complement(vec![Point::xy(-1.0, 0.0), Point::xy(1.0, 0.0)]).unwrap();
        let v = j_distance(&two, &Point::xy(0.0, s3), &Point::xy(0.0, -s3)).unwrap();
        assert!((v - (1.0 + s3).ln()).abs() < 1e-15);

        let x = Point::xy(0.3, -2.0);
        assert_eq!(j_distance(&two, &x, &x).unwrap(), 0.0);
        assert_eq!(j_distance(&pd, &x, &Point::xy(0.0, 0.0)), Err(Error::OnBoundary));
    }

    #[test]
    fn qh_examples() {
        let e1 = Point::xy(1.0, 0.0);
        assert!((qh_distance_punctured(&e1, &Point::xy(E, 0.0)).unwrap() - 1.0).abs() < 1e-15);
        assert!((qh_distance_punctured(&e1, &Point::xy(-1.0, 0.0)).unwrap() - PI).abs() < 1e-15);
        let v = qh_distance_punctured(&e1, &Point::xy(0.0, E)).unwrap();
        assert!((v - (PI * PI / 4.0 + 1.0).sqrt()).abs() < 1e-15);
        assert!((v - 1.8621).abs() < 1e-4);
        assert_eq!(qh_distance_punctured(&e1, &Point::xy(0.0, 0.0)), Err(Error::OnBoundary));
    }

    #[test]
    fn qh_in_three_dimensions_and_shifted_puncture() {
        let x = Point::new(vec![1.0, 0.0, 0.0]).unwrap();
        let y = Point::new(vec![0.0, 0.0, E]).unwrap();
        let v = qh_distance_punctured(&x, &y).unwrap();
        assert!((v - (PI * PI / 4.0 + 1.0).sqrt()).abs() < 1e-15);
        let p = Point::xy(2.0, 1.0);
        let v = qh_distance_punctured_at(&p, &Point::xy(3.0, 1.0), &Point::xy(1.0, 1.0)).unwrap();
        assert!((v - PI).abs() < 1e-15);
    }

    #[test]
    fn radial_segment_has_length_one() {
        let pd = Domain::punctured(2);
        let seg = Polyline::new(vec![Vec2::new(1.0, 0.0), Vec2::new(E, 0.0)], false).unwrap();
        let l = qh_polyline_length(&pd, &seg).unwrap();
        assert!((l - 1.0).abs() < 1e-7, "{l}");
    }

    #[test]
    fn half_circle_has_length_pi() {
        let pd = Domain::punctured(2);
        let n = 4000;
        let pts: Vec<Vec2> = (0..=n)
            .map(|k| {
                let t = PI * k as f64 / n as f64;
                Vec2::new(t.cos(), t.sin())
            })
            .collect();
        let arc = Polyline::new(pts, false).unwrap();
        let l = qh_polyline_length(&pd, &arc).unwrap();
        assert!((l - PI).abs() < 1e-5, "{l}");
    }

    #[test]
    fn segment_through_puncture_is_rejected() {
        let pd = Domain::punctured(2);
        let seg = Polyline::new(vec![Vec2::new(-1.0, 0.0), Vec2::new(1.0, 0.0)], false).unwrap();
        assert_eq!(qh_polyline_length(&pd, &seg), Err(Error::OnBoundary));
        let slit = Domain::negative_real_slit();
        let seg = Polyline::new(vec![Vec2::new(-1.0, -1.0), Vec2::new(-1.0, 1.0)], false).unwrap();
        assert_eq!(qh_polyline_length(&slit, &seg), Err(Error::OnBoundary));
    }
}
