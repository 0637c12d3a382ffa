//! A j-ball that falls apart: center √3 i in the plane minus {−1, 1}.

use metric_balls::analysis::{disconnection_interval, line_ratio, line_ratio_stationary, verify_disconnection_example};

pub fn run_example() -> metric_balls::Result<()> {
    let (lo, hi) = disconnection_interval();
    println!("radii in ({lo:.6}, {hi:.6}) split the ball");
    let h = line_ratio_stationary();
    println!("f(0) = {:.6}, f({h:.4}) = {:.6}", line_ratio(0.0), line_ratio(h));

    let rep = verify_disconnection_example(1.035, 600)?;
    println!("j(x, -x) = {:.6} < r: {}", rep.membership.j_far_point, rep.membership.holds);
    println!(
        "line Im y = -1 stays at j >= {:.6} >= log 2.9: {}",
        rep.separation.grid_min, rep.separation.holds
    );
    println!("components: {}", rep.components);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("disconnected_ball example");
}
