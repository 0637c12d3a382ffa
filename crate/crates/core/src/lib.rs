//! Quasihyperbolic and distance-ratio (j-) metric balls in punctured and
//! general planar domains.
//!
//! The crate builds the balls two ways, exactly (disk algebra, boundary
//! parameterizations) and by brute force (rasterized membership), and decides
//! convexity, starlikeness and close-to-convexity at the sharp radii
//! `log(1+√3)` for j-balls and `λ ≈ 2.97169` for quasihyperbolic disks.
//!
//! Modules:
//! - [`geometry`]: points, disks, regions, polygons, rasters and property checks
//! - [`metrics`]: domains, `d(x)`, the j-metric, the closed-form quasihyperbolic
//!   distance in punctured space, curve lengths and a grid shortest-path oracle
//! - [`balls`]: exact ball constructors and raster oracles
//! - [`analysis`]: sharp constants, root solvers and close-to-convexity deciders
//! - [`cli`]: the `metric-balls` command line, JSON reports and SVG figures

pub mod analysis;
pub mod balls;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod metrics;

pub use error::{Error, Result};
