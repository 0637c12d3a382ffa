//! Close-to-convexity verdicts on both sides of the sharp radii.

use metric_balls::analysis::{annular_ctc_check, qh_ctc_verdict, solve_lambda};
use metric_balls::balls::j_ball_punctured;
use metric_balls::geometry::Point;

pub fn run_example() -> metric_balls::Result<()> {
    let l = solve_lambda(1e-14)?;
    for r in [1.5, l - 0.05, l, l + 0.05, 3.3] {
        let v = qh_ctc_verdict(r)?;
        println!("qh r = {r:.5}: holds {} via {:?}", v.holds, v.regime);
    }
    let x = Point::xy(1.0, 0.0);
    let r0 = 3f64.sqrt().ln_1p();
    for r in [0.5, r0, r0 + 0.05, 3f64.ln() + 0.1] {
        let v = annular_ctc_check(&j_ball_punctured(&x, r)?, &x)?;
        println!("j  r = {r:.5}: holds {} via {:?} {:?}", v.holds, v.regime, v.witnesses.first());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("close_to_convexity example");
}
