//! Locating property flips by bisection over the radius.

use metric_balls::analysis::{annular_ctc_check, qh_ctc_verdict, sweep_critical_radius};
use metric_balls::balls::{j_ball_punctured, qh_disk_boundary};
use metric_balls::geometry::{polygon_is_convex, region_is_starlike, Point, Vec2};

pub fn run_example() -> metric_balls::Result<()> {
    let x = Point::xy(1.0, 0.0);
    let e1 = Vec2::new(1.0, 0.0);

    let qh_ctc = sweep_critical_radius(|r| Ok(qh_ctc_verdict(r)?.holds), 2.5, 3.1, 1e-8)?;
    println!("qh close-to-convex up to {qh_ctc:.7}");

    let j_ctc = sweep_critical_radius(|r| Ok(annular_ctc_check(&j_ball_punctured(&x, r)?, &x)?.holds), 0.9, 1.2, 1e-10)?;
    println!("j close-to-convex up to {j_ctc:.9}");

    let j_star = sweep_critical_radius(|r| Ok(region_is_starlike(&j_ball_punctured(&x, r)?, e1)?.holds), 0.7, 1.0, 1e-10)?;
    println!("j starlike up to {j_star:.9} (log(1+sqrt2) = {:.9})", 2f64.sqrt().ln_1p());

    let qh_convex = sweep_critical_radius(
        |r| Ok(polygon_is_convex(&qh_disk_boundary(&x, r, 1024)?.polyline)?.holds),
        0.8,
        1.4,
        1e-4,
    )?;
    println!("sampled qh boundary convex up to {qh_convex:.4}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("radius_sweeps example");
}
