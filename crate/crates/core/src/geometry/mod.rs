//! Planar primitives, the disk region algebra, rasterization and the
//! definitional property checkers (convexity, starlikeness, connectivity).

mod contour;
mod point;
mod polygon;
mod raster;
mod region;
mod shapes;
mod verdict;

pub use contour::trace_boundaries;
pub use point::{segment_point_distance, Point, Vec2};
pub(crate) use point::{dot, norm, segment_point_distance_nd};
pub use polygon::{polygon_is_convex, polygon_is_starlike, COLLINEAR_TOL};
pub use raster::{
    complement_has_bounded_component, count_components, raster_is_starlike, rasterize,
    Connectivity, GridRaster,
};
pub use region::{region_contains, region_is_starlike, Constraint, Region};
pub use shapes::{Disk, HalfLine, HalfPlane, Polyline, Window};
pub use verdict::{Verdict, Witness};
