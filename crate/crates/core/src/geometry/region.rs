use serde::{Deserialize, Serialize};

use super::point::{Point, Vec2};
use super::shapes::{Disk, HalfPlane};
use super::verdict::{Verdict, Witness};
use crate::error::{Error, Result};

/// A convex constraint intersected into a [`Region`]. Disks are open.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Constraint {
    Disk(Disk),
    HalfPlane(HalfPlane),
}

impl Constraint {
    pub fn contains(&self, p: Vec2) -> bool {
        match self {
            Constraint::Disk(d) => d.contains_open(p),
            Constraint::HalfPlane(h) => h.contains(p),
        }
    }

    /// True when the constraint contains the whole closed disk `d`.
    pub fn covers(&self, d: &Disk) -> bool {
        match self {
            Constraint::Disk(c) => c.covers(d),
            Constraint::HalfPlane(h) => h.signed_distance(d.center) >= d.radius,
        }
    }
}

/// Open outer disk, minus closed disks, intersected with open constraints.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub outer: Disk,
    pub subtracted: Vec<Disk>,
    pub intersected: Vec<Constraint>,
}

impl Region {
    pub fn disk(outer: Disk) -> Self {
        Self {
            outer,
            subtracted: Vec::new(),
            intersected: Vec::new(),
        }
    }

    pub fn subtract(mut self, d: Disk) -> Self {
        self.subtracted.push(d);
        self
    }

    pub fn intersect(mut self, c: Constraint) -> Self {
        self.intersected.push(c);
        self
    }

    /// Membership of a planar point.
    pub fn contains_xy(&self, p: Vec2) -> bool {
        self.outer.contains_open(p)
            && self.subtracted.iter().all(|d| !d.contains_closed(p))
            && self.intersected.iter().all(|c| c.contains(p))
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        Ok(self.contains_xy(p.to_vec2()?))
    }

    /// Drops constraints that cannot change the set.
    pub fn pruned(mut self) -> Self {
        let outer = self.outer;
        self.subtracted.retain(|d| d.center.distance(outer.center) < d.radius + outer.radius);
        self.intersected.retain(|c| !c.covers(&outer));
        self
    }

    /// Subtracted disks that actually cut the open outer disk.
    pub fn effective_holes(&self) -> impl Iterator<Item = &Disk> {
        let outer = self.outer;
        self.subtracted
            .iter()
            .filter(move |d| d.center.distance(outer.center) < d.radius + outer.radius)
    }
}

/// `region_contains` as a free function.
pub fn region_contains(region: &Region, p: &Point) -> Result<bool> {
    region.contains(p)
}

/// Starlikeness of a disk-minus-disks region with respect to the outer center.
///
/// A closed hole of radius `s` at distance `D` from `x` hides nothing of the
/// outer disk B(x, R) exactly when its tangent points lie outside B(x, R),
/// i.e. `D² ≥ R² + s²`. Regions made only of convex constraints are convex.
/// With several holes the per-hole criterion is sufficient but not necessary,
/// so a failure there is conservative.
pub fn region_is_starlike(region: &Region, x: Vec2) -> Result<Verdict> {
    if !region.contains_xy(x) {
        return Err(Error::InvalidGeometry("reference point is not inside the region".into()));
    }
    let holes: Vec<&Disk> = region.effective_holes().collect();
    if holes.is_empty() {
        return Ok(Verdict::holds());
    }
    let outer = region.outer;
    if !region.intersected.is_empty() {
        return Err(Error::Unsupported(
            "starlikeness of holes combined with intersected constraints".into(),
        ));
    }
    if x.distance(outer.center) > 1e-12 * outer.radius {
        return Err(Error::Unsupported(
            "exact starlikeness check needs the reference point at the outer center".into(),
        ));
    }
    let r_sq = outer.radius * outer.radius;
    let mut tightest: Option<(f64, f64)> = None;
    for h in holes {
        let lhs = (h.center - x).norm_sq();
        let rhs = r_sq + h.radius * h.radius;
        if lhs < rhs * (1.0 - 1e-12) {
            return Ok(Verdict::fails(Witness::Inequality {
                name: "|x-c|^2 >= R^2 + s^2".into(),
                lhs,
                rhs,
            }));
        }
        if tightest.map_or(true, |(l, r)| lhs - rhs < l - r) {
            tightest = Some((lhs, rhs));
        }
    }
    let (lhs, rhs) = tightest.expect("at least one hole");
    Ok(Verdict::holds_with(Witness::Inequality {
        name: "|x-c|^2 >= R^2 + s^2".into(),
        lhs,
        rhs,
    }))
}
