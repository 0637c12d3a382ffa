//! Exact constructors for j-metric balls and quasihyperbolic disk boundaries,
//! plus direct-membership raster oracles for cross-validation.

mod jball;
mod oracle;
mod qhdisk;

pub use jball::{
    j_ball_decomposition, j_ball_general, j_ball_punctured, j_ball_punctured_at, JBallDecomposition, JBallShape,
    LOG2_BAND,
};
pub use oracle::{
    ball_extent, ball_predicate, ball_raster, default_ball_window, region_raster, BallPredicate,
};
pub use qhdisk::{qh_boundary_point, qh_disk_boundary, qh_disk_boundary_at, qh_disk_bounds, QhDiskBoundary};
