//! j-balls in punctured and twice-punctured planes, checked against rasters.

use metric_balls::balls::{ball_raster, default_ball_window, j_ball_decomposition, j_ball_general, region_raster};
use metric_balls::geometry::{Point, Vec2, Window};
use metric_balls::metrics::{Domain, MetricKind};

pub fn run_example() -> metric_balls::Result<()> {
    let x = Point::xy(1.0, 0.0);
    let plane = Domain::punctured(2);
    for r in [0.5, 2f64.ln(), 1.0, 3f64.ln()] {
        let dec = j_ball_decomposition(Vec2::ZERO, Vec2::new(1.0, 0.0), r)?;
        let region = dec.to_region();
        let w = default_ball_window(&plane, &x, r)?;
        let exact = region_raster(&region, w, 200, 200)?;
        let brute = ball_raster(MetricKind::DistanceRatio, &plane, &x, r, w, 200, 200)?;
        let diff = exact.symmetric_difference(&brute)? as f64 / (200.0 * 200.0);
        println!("r = {r:.4}: {:?}, raster mismatch {:.3}%", dec.shape, 100.0 * diff);
    }

    let two = Domain::point_complement(vec![Point::xy(-1.0, 0.0), Point::xy(1.0, 0.0)])?;
    let c = Point::xy(0.0, 3f64.sqrt());
    let r = 3f64.sqrt().ln_1p();
    let region = j_ball_general(&two, &c, r, 1, &Window::square(Vec2::ZERO, 4.0)?)?;
    println!("ball around sqrt3 i in C minus {{-1, 1}}:");
    println!("  outer {:?}", region.outer);
    for h in &region.subtracted {
        println!("  hole  {h:?}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("j_balls example");
}
