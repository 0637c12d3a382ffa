//! Distance-to-boundary, the j-metric, the quasihyperbolic metric in punctured
//! space, quasihyperbolic curve length and a grid shortest-path oracle.

mod distance;
mod domain;
mod oracle;

pub use distance::{
    j_distance, qh_distance_punctured, qh_distance_punctured_at, qh_polyline_length, QUADRATURE_RTOL,
};
pub(crate) use distance::{j_distance_xy, qh_distance_xy};
pub use domain::{boundary_samples, distance_to_boundary, Domain, MetricKind};
pub use oracle::{default_oracle_window, qh_distance_grid_oracle, qh_distance_grid_oracle_with, OracleGrid, Stencil, CONNECT_REACH};
