//! Quasihyperbolic disks in the punctured plane: boundary curves and their shape.

use metric_balls::balls::{ball_raster, qh_disk_boundary, qh_disk_bounds};
use metric_balls::geometry::{
    complement_has_bounded_component, polygon_is_convex, polygon_is_starlike, Point, Vec2,
};
use metric_balls::metrics::{Domain, MetricKind};

pub fn run_example() -> metric_balls::Result<()> {
    let x = Point::xy(1.0, 0.0);
    for r in [0.9, 1.1, 2.8, 2.9, 3.1] {
        let b = qh_disk_boundary(&x, r, 2048)?;
        let convex = polygon_is_convex(&b.polyline)?.holds;
        let starlike = polygon_is_starlike(&b.polyline, Vec2::new(1.0, 0.0))?.holds;
        println!("r = {r}: convex {convex}, starlike w.r.t. x {starlike}");
    }

    // past pi the disk wraps around the puncture
    let r = 3.3;
    println!("boundary at r = {r}: {}", qh_disk_boundary(&x, r, 64).unwrap_err());
    let w = qh_disk_bounds(Vec2::ZERO, Vec2::new(1.0, 0.0), r)?.inflated(1.05);
    let raster = ball_raster(MetricKind::QuasiHyperbolic, &Domain::punctured(2), &x, r, w, 500, 580)?;
    println!("bounded complement component: {}", complement_has_bounded_component(&raster)?.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("qh_disks example");
}
