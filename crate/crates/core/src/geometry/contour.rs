//! Marching-squares boundary extraction for predicate-defined planar sets.

use rayon::prelude::*;

use super::point::Vec2;
use super::shapes::{Polyline, Window};
use crate::error::{Error, Result};

const BISECTION_STEPS: usize = 30;

/// Closed boundary loops of `{p : predicate(p)}` inside `window`.
///
/// The predicate is sampled on an `(nx+1) × (ny+1)` node lattice whose border
/// nodes are treated as outside, so every loop closes. Crossing points are
/// refined by bisection on the predicate. Loops are oriented with the set on
/// their left and returned in lattice scan order.
pub fn trace_boundaries<F>(predicate: F, window: Window, nx: usize, ny: usize) -> Result<Vec<Polyline>>
where
    F: Fn(Vec2) -> bool + Sync,
{
    if nx < 2 || ny < 2 {
        return Err(Error::OutOfRange("contour lattice needs nx, ny >= 2".into()));
    }
    let dx = window.width() / nx as f64;
    let dy = window.height() / ny as f64;
    let node = |i: usize, j: usize| {
        Vec2::new(window.min.x + i as f64 * dx, window.min.y + j as f64 * dy)
    };
    let stride = nx + 1;
    let mut inside = vec![false; stride * (ny + 1)];
    inside.par_chunks_mut(stride).enumerate().for_each(|(j, row)| {
        for (i, c) in row.iter_mut().enumerate() {
            *c = i > 0 && j > 0 && i < nx && j < ny && predicate(node(i, j));
        }
    });
    let at = |i: usize, j: usize| inside[j * stride + i];

    // Edge ids: horizontal (i,j)-(i+1,j) first, then vertical (i,j)-(i,j+1).
    let h_count = nx * (ny + 1);
    let h_edge = |i: usize, j: usize| j * nx + i;
    let v_edge = |i: usize, j: usize| h_count + j * (nx + 1) + i;
    let edge_count = h_count + (nx + 1) * ny;
    let mut next = vec![usize::MAX; edge_count];

    for j in 0..ny {
        for i in 0..nx {
            // corners and edges in counter-clockwise order
            let c = [at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)];
            if c.iter().all(|&b| b) || c.iter().all(|&b| !b) {
                continue;
            }
            let e = [h_edge(i, j), v_edge(i + 1, j), h_edge(i, j + 1), v_edge(i, j)];
            let saddle = c[0] == c[2] && c[1] == c[3];
            let joined = !saddle || {
                let center = Vec2::new(window.min.x + (i as f64 + 0.5) * dx, window.min.y + (j as f64 + 0.5) * dy);
                predicate(center)
            };
            for k in 0..4 {
                if !(c[k] && !c[(k + 1) % 4]) {
                    continue;
                }
                let is_entry = |m: usize| !c[m] && c[(m + 1) % 4];
                let partner = if joined {
                    (1..4).map(|o| (k + o) % 4).find(|&m| is_entry(m))
                } else {
                    (1..4).map(|o| (k + 4 - o) % 4).find(|&m| is_entry(m))
                };
                let m = partner.expect("marching squares crossings come in pairs");
                next[e[k]] = e[m];
            }
        }
    }

    let crossing = |edge: usize| -> Vec2 {
        let (a, b) = if edge < h_count {
            let (i, j) = (edge % nx, edge / nx);
            (node(i, j), node(i + 1, j))
        } else {
            let k = edge - h_count;
            let (i, j) = (k % (nx + 1), k / (nx + 1));
            (node(i, j), node(i, j + 1))
        };
        // orient so that `lo` is inside
        let (mut lo, mut hi) = if predicate(a) { (a, b) } else { (b, a) };
        for _ in 0..BISECTION_STEPS {
            let mid = lo.lerp(hi, 0.5);
            if predicate(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo.lerp(hi, 0.5)
    };

    let mut visited = vec![false; edge_count];
    let mut loops = Vec::new();
    for start in 0..edge_count {
        if next[start] == usize::MAX || visited[start] {
            continue;
        }
        let mut pts: Vec<Vec2> = Vec::new();
        let mut e = start;
        while !visited[e] {
            visited[e] = true;
            let p = crossing(e);
            if pts.last() != Some(&p) {
                pts.push(p);
            }
            e = next[e];
            if e == usize::MAX {
                return Err(Error::InvalidGeometry("open contour".into()));
            }
        }
        if pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
        if pts.len() >= 3 {
            loops.push(Polyline::new(pts, true)?);
        }
    }
    Ok(loops)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_gives_one_ccw_loop_on_the_circle() {
        let w = Window::square(Vec2::ZERO, 2.0).unwrap();
        let loops = trace_boundaries(|p| p.norm() < 1.0, w, 64, 64).unwrap();
        assert_eq!(loops.len(), 1);
        let l = &loops[0];
        assert!(l.signed_area() > 0.0);
        for v in l.vertices() {
            assert!((v.norm() - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn annulus_gives_two_loops() {
        let w = Window::square(Vec2::ZERO, 2.0).unwrap();
        let loops = trace_boundaries(|p| p.norm() < 1.0 && p.norm() > 0.5, w, 64, 64).unwrap();
        assert_eq!(loops.len(), 2);
        let areas: Vec<f64> = loops.iter().map(|l| l.signed_area()).collect();
        // outer loop counter-clockwise, hole clockwise
        assert!(areas.iter().any(|&a| a > 0.0) && areas.iter().any(|&a| a < 0.0));
    }

    #[test]
    fn checkerboard_saddles_close() {
        let w = Window::square(Vec2::ZERO, 2.0).unwrap();
        let pred = |p: Vec2| (p.x * 3.0).sin() * (p.y * 3.0).sin() > 0.0 && p.norm() < 1.8;
        let loops = trace_boundaries(pred, w, 40, 40).unwrap();
        assert!(!loops.is_empty());
    }
}
