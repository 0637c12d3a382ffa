//! Boolean membership grids: the brute-force representation of planar sets.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::point::Vec2;
use super::shapes::Window;
use super::verdict::{Verdict, Witness};
use crate::error::{Error, Result};

/// Pixel neighbourhood used by the flood fills.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    Four,
    Eight,
}

/// `nx × ny` cell-center samples of a predicate over a window; row-major, row 0 at `window.min.y`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridRaster {
    window: Window,
    nx: usize,
    ny: usize,
    cells: Vec<bool>,
}

impl GridRaster {
    pub fn from_cells(window: Window, nx: usize, ny: usize, cells: Vec<bool>) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(Error::OutOfRange(format!("raster needs nx, ny >= 2, got {nx}x{ny}")));
        }
        if cells.len() != nx * ny {
            return Err(Error::InvalidGeometry("cell count does not match nx*ny".into()));
        }
        Ok(Self { window, nx, ny, cells })
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn cell_size(&self) -> Vec2 {
        Vec2::new(
            self.window.width() / self.nx as f64,
            self.window.height() / self.ny as f64,
        )
    }

    pub fn cell_center(&self, i: usize, j: usize) -> Vec2 {
        cell_center(&self.window, self.nx, self.ny, i, j)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[j * self.nx + i]
    }

    /// Cell containing `p`, if inside the window.
    pub fn cell_of(&self, p: Vec2) -> Option<(usize, usize)> {
        if !self.window.contains(p) {
            return None;
        }
        let h = self.cell_size();
        let i = (((p.x - self.window.min.x) / h.x) as usize).min(self.nx - 1);
        let j = (((p.y - self.window.min.y) / h.y) as usize).min(self.ny - 1);
        Some((i, j))
    }

    pub fn count_true(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn filled_fraction(&self) -> f64 {
        self.count_true() as f64 / self.cells.len() as f64
    }

    /// Number of cells where the two rasters disagree.
    pub fn symmetric_difference(&self, other: &GridRaster) -> Result<usize> {
        if self.nx != other.nx || self.ny != other.ny || self.window != other.window {
            return Err(Error::InvalidGeometry("rasters are over different grids".into()));
        }
        Ok(self
            .cells
            .iter()
            .zip(&other.cells)
            .filter(|(a, b)| a != b)
            .count())
    }

    fn touches_border(&self) -> bool {
        let (nx, ny) = (self.nx, self.ny);
        (0..nx).any(|i| self.get(i, 0) || self.get(i, ny - 1))
            || (0..ny).any(|j| self.get(0, j) || self.get(nx - 1, j))
    }

    /// Labels components of cells equal to `value`; label 0 means "other value".
    pub fn label_components(&self, value: bool, conn: Connectivity) -> (Vec<u32>, usize) {
        let (nx, ny) = (self.nx, self.ny);
        let mut labels = vec![0u32; nx * ny];
        let mut count = 0usize;
        let mut queue = VecDeque::new();
        for start in 0..nx * ny {
            if self.cells[start] != value || labels[start] != 0 {
                continue;
            }
            count += 1;
            labels[start] = count as u32;
            queue.push_back(start);
            while let Some(k) = queue.pop_front() {
                let (i, j) = ((k % nx) as isize, (k / nx) as isize);
                for (di, dj) in neighbours(conn) {
                    let (a, b) = (i + di, j + dj);
                    if a < 0 || b < 0 || a >= nx as isize || b >= ny as isize {
                        continue;
                    }
                    let idx = b as usize * nx + a as usize;
                    if self.cells[idx] == value && labels[idx] == 0 {
                        labels[idx] = count as u32;
                        queue.push_back(idx);
                    }
                }
            }
        }
        (labels, count)
    }
}

fn neighbours(conn: Connectivity) -> &'static [(isize, isize)] {
    const FOUR: [(isize, isize); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
    const EIGHT: [(isize, isize); 8] = [
        (1, 0),
        (-1, 0),
        (0, 1),
        (0, -1),
        (1, 1),
        (1, -1),
        (-1, 1),
        (-1, -1),
    ];
    match conn {
        Connectivity::Four => &FOUR,
        Connectivity::Eight => &EIGHT,
    }
}

fn cell_center(window: &Window, nx: usize, ny: usize, i: usize, j: usize) -> Vec2 {
    Vec2::new(
        window.min.x + (i as f64 + 0.5) * window.width() / nx as f64,
        window.min.y + (j as f64 + 0.5) * window.height() / ny as f64,
    )
}

/// Samples `predicate` at every cell center. Rows are evaluated in parallel;
/// the result does not depend on scheduling.
pub fn rasterize<F>(predicate: F, window: Window, nx: usize, ny: usize) -> Result<GridRaster>
where
    F: Fn(Vec2) -> bool + Sync,
{
    if nx < 2 || ny < 2 {
        return Err(Error::OutOfRange(format!("raster needs nx, ny >= 2, got {nx}x{ny}")));
    }
    let window = Window::new(window.min, window.max)?;
    let mut cells = vec![false; nx * ny];
    cells.par_chunks_mut(nx).enumerate().for_each(|(j, row)| {
        for (i, c) in row.iter_mut().enumerate() {
            *c = predicate(cell_center(&window, nx, ny, i, j));
        }
    });
    GridRaster::from_cells(window, nx, ny, cells)
}

/// Number of 8-connected components of true cells.
pub fn count_components(raster: &GridRaster) -> usize {
    raster.label_components(true, Connectivity::Eight).1
}

/// Whether some 4-connected component of false cells avoids the window border.
///
/// A close-to-convex set never has such a component; `holds` here means a
/// bounded complement component exists.
pub fn complement_has_bounded_component(raster: &GridRaster) -> Result<Verdict> {
    if raster.touches_border() {
        return Err(Error::WindowTooSmall);
    }
    let (labels, count) = raster.label_components(false, Connectivity::Four);
    let (nx, ny) = (raster.nx, raster.ny);
    let mut unbounded = vec![false; count + 1];
    for i in 0..nx {
        unbounded[labels[i] as usize] = true;
        unbounded[labels[(ny - 1) * nx + i] as usize] = true;
    }
    for j in 0..ny {
        unbounded[labels[j * nx] as usize] = true;
        unbounded[labels[j * nx + nx - 1] as usize] = true;
    }
    let bounded = labels
        .iter()
        .position(|&l| l != 0 && !unbounded[l as usize]);
    Ok(match bounded {
        Some(k) => Verdict::holds_with(Witness::Point {
            point: raster.cell_center(k % nx, k / nx),
            note: "cell of a bounded complement component".into(),
        }),
        None => Verdict {
            holds: false,
            witness: None,
        },
    })
}

/// Sampled starlikeness of a rasterized set with respect to `x`.
///
/// For every true cell on the raster boundary of the set the segment from `x`
/// to the cell center is sampled at half-cell spacing against the exact
/// `predicate`. Interior cells are skipped: any shadow cast by a hole reaches
/// the hole's rim, where the cells are boundary cells.
pub fn raster_is_starlike<F>(raster: &GridRaster, x: Vec2, predicate: F) -> Result<Verdict>
where
    F: Fn(Vec2) -> bool + Sync,
{
    if !predicate(x) {
        return Err(Error::InvalidGeometry("reference point is not in the set".into()));
    }
    let (nx, ny) = (raster.nx, raster.ny);
    let h = raster.cell_size();
    let step = 0.5 * h.x.min(h.y);
    let failure = (0..nx * ny).into_par_iter().find_first(|&k| {
        let (i, j) = (k % nx, k / nx);
        if !raster.cells[k] {
            return false;
        }
        let at_rim = i == 0
            || j == 0
            || i == nx - 1
            || j == ny - 1
            || !raster.get(i - 1, j)
            || !raster.get(i + 1, j)
            || !raster.get(i, j - 1)
            || !raster.get(i, j + 1);
        if !at_rim {
            return false;
        }
        let q = raster.cell_center(i, j);
        if !predicate(q) {
            return false;
        }
        let n = ((q - x).norm() / step).ceil().max(1.0) as usize;
        (1..n).any(|m| !predicate(x.lerp(q, m as f64 / n as f64)))
    });
    Ok(match failure {
        None => Verdict::holds(),
        Some(k) => {
            let q = raster.cell_center(k % nx, k / nx);
            let n = ((q - x).norm() / step).ceil().max(1.0) as usize;
            let exit = (1..n)
                .map(|m| x.lerp(q, m as f64 / n as f64))
                .find(|p| !predicate(*p))
                .unwrap_or(q);
            Verdict::fails(Witness::BlockedSegment { target: q, exit })
        }
    })
}
