//! Shortest paths on a weighted grid graph as an independent estimate of the
//! quasihyperbolic distance.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use super::domain::Domain;
use crate::error::{Error, Result};
use crate::geometry::{Point, Vec2, Window};

/// Neighbour stencil of the grid graph. `Neighbors32` reaches every primitive
/// offset with max-norm ≤ 3, `Neighbors16` ≤ 2, `Neighbors8` ≤ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stencil {
    Neighbors8,
    Neighbors16,
    Neighbors32,
}

impl Stencil {
    fn reach(self) -> i64 {
        match self {
            Stencil::Neighbors8 => 1,
            Stencil::Neighbors16 => 2,
            Stencil::Neighbors32 => 3,
        }
    }

    pub fn offsets(self) -> Vec<(i64, i64)> {
        let k = self.reach();
        let mut out = Vec::new();
        for dj in -k..=k {
            for di in -k..=k {
                if (di, dj) != (0, 0) && gcd(di.unsigned_abs(), dj.unsigned_abs()) == 1 {
                    out.push((di, dj));
                }
            }
        }
        out
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Grid-oracle settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleGrid {
    /// Cells per side of the square window.
    pub resolution: usize,
    pub stencil: Stencil,
    /// Square window; `None` picks one around the domain anchor and both points.
    pub window: Option<Window>,
}

impl OracleGrid {
    pub fn new(resolution: usize) -> Self {
        Self {
            resolution,
            stencil: Stencil::Neighbors32,
            window: None,
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
struct State {
    cost: f64,
    node: usize,
}

impl Eq for State {}

impl Ord for State {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .cost
            .total_cmp(&self.cost)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for State {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Default square window: centered at the domain anchor, half-side 1.25× the
/// largest distance from the anchor to `x`, `y` or a finite boundary point.
pub fn default_oracle_window(domain: &Domain, x: Vec2, y: Vec2) -> Result<Window> {
    let a = domain.anchor();
    let c = Vec2::new(a[0], a[1]);
    let mut reach = x.distance(c).max(y.distance(c));
    if let Some(points) = domain.removed_points() {
        for p in points {
            reach = reach.max(p.to_vec2()?.distance(c));
        }
    }
    Window::square(c, 1.25 * reach)
}

/// Quasihyperbolic distance estimate with the default stencil and window.
pub fn qh_distance_grid_oracle(domain: &Domain, x: &Point, y: &Point, resolution: usize) -> Result<f64> {
    qh_distance_grid_oracle_with(domain, x, y, &OracleGrid::new(resolution))
}

/// Half-width, in cells, of the block that `x` and `y` connect to.
pub const CONNECT_REACH: i64 = 3;

/// Dijkstra over cell centers of a square grid.
///
/// Nodes are cell centers with `d > h/2`; an edge joins two nodes when its
/// segment keeps clearance `> h/2` from ∂G and weighs `|edge| / d(midpoint)`.
/// `x` and `y` are joined by straight edges to every valid node within
/// [`CONNECT_REACH`] cells of their own cell.
pub fn qh_distance_grid_oracle_with(domain: &Domain, x: &Point, y: &Point, grid: &OracleGrid) -> Result<f64> {
    domain.check_planar()?;
    let (xv, yv) = (x.to_vec2()?, y.to_vec2()?);
    let n = grid.resolution;
    if n < 8 {
        return Err(Error::OutOfRange(format!("oracle resolution {n} is below 8")));
    }
    let window = match grid.window {
        Some(w) => w,
        None => default_oracle_window(domain, xv, yv)?,
    };
    let h = window.width() / n as f64;
    if (window.height() / n as f64 - h).abs() > 1e-12 * h {
        return Err(Error::InvalidGeometry("oracle window must be square".into()));
    }
    let margin = Window::new(window.min + Vec2::new(2.0 * h, 2.0 * h), window.max - Vec2::new(2.0 * h, 2.0 * h))?;
    if !margin.contains(xv) || !margin.contains(yv) {
        return Err(Error::OutOfRange("points must be two cells inside the oracle window".into()));
    }
    let center = |k: usize| {
        Vec2::new(
            window.min.x + ((k % n) as f64 + 0.5) * h,
            window.min.y + ((k / n) as f64 + 0.5) * h,
        )
    };
    let clearance = 0.5 * h;
    let valid: Vec<bool> = (0..n * n).map(|k| domain.raw_distance_xy(center(k)) > clearance).collect();
    let cell_of = |p: Vec2| {
        let i = (((p.x - window.min.x) / h) as usize).min(n - 1);
        let j = (((p.y - window.min.y) / h) as usize).min(n - 1);
        j * n + i
    };
    let weight = |a: Vec2, b: Vec2, min_clearance: f64| -> Option<f64> {
        if a == b {
            return Some(0.0);
        }
        let d_mid = domain.raw_distance_xy(a.lerp(b, 0.5));
        (d_mid > 0.0 && domain.segment_clearance_xy(a, b) > min_clearance).then(|| a.distance(b) / d_mid)
    };
    let edge_weight = |a: Vec2, b: Vec2| weight(a, b, clearance);

    let (sx, sy) = (cell_of(xv), cell_of(yv));
    if !valid[sx] || !valid[sy] {
        return Err(Error::OnBoundary);
    }
    // x and y join every valid node of the surrounding block by a straight edge
    let block = |k: usize| {
        let (i, j) = ((k % n) as i64, (k / n) as i64);
        (-CONNECT_REACH..=CONNECT_REACH)
            .flat_map(move |dj| (-CONNECT_REACH..=CONNECT_REACH).map(move |di| (i + di, j + dj)))
            .filter(|&(p, q)| p >= 0 && q >= 0 && p < n as i64 && q < n as i64)
            .map(|(p, q)| q as usize * n + p as usize)
    };
    let mut dist = vec![f64::INFINITY; n * n];
    let mut heap = BinaryHeap::new();
    for k in block(sx).filter(|&k| valid[k]) {
        if let Some(w) = weight(xv, center(k), 0.0) {
            dist[k] = w;
            heap.push(State { cost: w, node: k });
        }
    }
    let mut exit_cost = vec![f64::INFINITY; n * n];
    for k in block(sy).filter(|&k| valid[k]) {
        if let Some(w) = weight(center(k), yv, 0.0) {
            exit_cost[k] = w;
        }
    }
    let near = (sx % n).abs_diff(sy % n) as i64 <= CONNECT_REACH && (sx / n).abs_diff(sy / n) as i64 <= CONNECT_REACH;
    let mut best = if near { weight(xv, yv, 0.0).unwrap_or(f64::INFINITY) } else { f64::INFINITY };
    if heap.is_empty() || exit_cost.iter().all(|c| c.is_infinite()) {
        return Err(Error::OnBoundary);
    }

    let offsets = grid.stencil.offsets();
    while let Some(State { cost, node }) = heap.pop() {
        if cost >= best {
            break;
        }
        if cost > dist[node] {
            continue;
        }
        best = best.min(cost + exit_cost[node]);
        let (i, j) = ((node % n) as i64, (node / n) as i64);
        let a = center(node);
        for &(di, dj) in &offsets {
            let (p, q) = (i + di, j + dj);
            if p < 0 || q < 0 || p >= n as i64 || q >= n as i64 {
                continue;
            }
            let next = q as usize * n + p as usize;
            if !valid[next] {
                continue;
            }
            let b = center(next);
            let Some(w) = edge_weight(a, b) else { continue };
            let c = cost + w;
            if c < dist[next] {
                dist[next] = c;
                heap.push(State { cost: c, node: next });
            }
        }
    }
    if best.is_finite() {
        return Ok(best);
    }
    Err(Error::InvalidGeometry("target cell unreachable on the oracle grid".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stencil_sizes() {
        assert_eq!(Stencil::Neighbors8.offsets().len(), 8);
        assert_eq!(Stencil::Neighbors16.offsets().len(), 16);
        assert_eq!(Stencil::Neighbors32.offsets().len(), 32);
    }

    #[test]
    fn radial_pair_within_three_percent() {
        let pd = Domain::punctured(2);
        let v = qh_distance_grid_oracle(&pd, &Point::xy(1.0, 0.0), &Point::xy(std::f64::consts::E, 0.0), 200).unwrap();
        assert!((v - 1.0).abs() < 0.03, "{v}");
    }

    #[test]
    fn rejects_puncture_cell_and_small_grids() {
        let pd = Domain::punctured(2);
        // odd resolution puts a cell center on the puncture
        let r = qh_distance_grid_oracle(&pd, &Point::xy(1e-4, 0.0), &Point::xy(1.0, 0.0), 101);
        assert_eq!(r, Err(Error::OnBoundary));
        assert!(qh_distance_grid_oracle(&pd, &Point::xy(1.0, 0.0), &Point::xy(2.0, 0.0), 4).is_err());
    }
}
