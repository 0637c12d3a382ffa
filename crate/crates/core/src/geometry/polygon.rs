//! Convexity and starlikeness of simple closed polygons.

use super::point::Vec2;
use super::shapes::Polyline;
use super::verdict::{Verdict, Witness};
use crate::error::{Error, Result};

/// Relative tolerance under which a turn counts as collinear.
pub const COLLINEAR_TOL: f64 = 1e-12;

fn check_closed(poly: &Polyline) -> Result<()> {
    if !poly.is_closed() {
        return Err(Error::InvalidGeometry("polygon must be closed".into()));
    }
    if poly.len() < 3 {
        return Err(Error::InvalidGeometry(format!(
            "polygon needs at least 3 vertices, got {}",
            poly.len()
        )));
    }
    Ok(())
}

/// Convexity of a simple closed polygon: all non-collinear turns agree in sign.
///
/// The witness is the first vertex turning against the polygon's orientation.
pub fn polygon_is_convex(poly: &Polyline) -> Result<Verdict> {
    check_closed(poly)?;
    let v = poly.vertices();
    let n = v.len();
    let turns: Vec<(usize, f64)> = (0..n)
        .filter_map(|i| {
            let (a, b, c) = (v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
            let (e1, e2) = (b - a, c - b);
            let cross = e1.cross(e2);
            (cross.abs() > COLLINEAR_TOL * e1.norm() * e2.norm()).then_some((i, cross))
        })
        .collect();
    if turns.is_empty() {
        return Err(Error::InvalidGeometry("all vertices are collinear".into()));
    }
    let orientation = match poly.signed_area() {
        a if a != 0.0 => a.signum(),
        _ => turns[0].1.signum(),
    };
    let Some(&(_, reference_cross)) = turns.iter().find(|t| t.1.signum() == orientation) else {
        return Err(Error::InvalidGeometry("no turn agrees with the orientation".into()));
    };
    match turns.iter().find(|t| t.1.signum() != orientation) {
        Some(&(index, cross)) => Ok(Verdict::fails(Witness::TurnFlip {
            index,
            cross,
            reference_cross,
        })),
        None => Ok(Verdict::holds()),
    }
}

/// Starlikeness of a simple closed polygon with respect to an interior point.
///
/// Every boundary point is visible from `x` exactly when `x` lies in the
/// kernel: on the inner side (or the supporting line) of every edge. This is
/// the O(n) form of the vertex visibility scan.
pub fn polygon_is_starlike(poly: &Polyline, x: Vec2) -> Result<Verdict> {
    check_closed(poly)?;
    if poly.winding_number(x) == 0 || poly.distance_to(x) == 0.0 {
        return Err(Error::InvalidGeometry(
            "reference point must lie strictly inside the polygon".into(),
        ));
    }
    let orientation = poly.signed_area().signum();
    for (i, (a, b)) in poly.segments().enumerate() {
        let side = orientation * (b - a).cross(x - a);
        if side < -COLLINEAR_TOL * (b - a).norm() * (x - a).norm() {
            return Ok(Verdict::fails(Witness::HiddenEdge { index: i, side }));
        }
    }
    Ok(Verdict::holds())
}
