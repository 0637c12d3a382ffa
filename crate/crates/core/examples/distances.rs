//! j-metric and quasihyperbolic distances, with the grid oracle and curve lengths.

use metric_balls::geometry::{Point, Polyline, Vec2};
use metric_balls::metrics::{
    distance_to_boundary, j_distance, qh_distance_grid_oracle, qh_distance_punctured, qh_polyline_length, Domain,
};

pub fn run_example() -> metric_balls::Result<()> {
    let plane = Domain::punctured(2);
    let (x, y) = (Point::xy(1.0, 0.0), Point::xy(0.0, std::f64::consts::E));

    println!("d(x) = {}", distance_to_boundary(&plane, &x)?);
    println!("j(x, y) = {:.6}", j_distance(&plane, &x, &y)?);
    let k = qh_distance_punctured(&x, &y)?;
    println!("k(x, y) = {k:.6}");

    let oracle = qh_distance_grid_oracle(&plane, &x, &y, 200)?;
    println!("grid oracle at 200 cells: {oracle:.6} ({:.2}% off)", 100.0 * (oracle - k).abs() / k);

    // the straight segment is longer than the geodesic
    let segment = Polyline::new(vec![Vec2::new(1.0, 0.0), Vec2::new(0.0, std::f64::consts::E)], false)?;
    println!("k-length of the segment: {:.6}", qh_polyline_length(&plane, &segment)?);

    let slit = Domain::negative_real_slit();
    println!("j in the slit plane: {:.6}", j_distance(&slit, &Point::xy(1.0, 1.0), &Point::xy(1.0, -1.0))?);

    let three = Domain::punctured(3);
    let (a, b) = (Point::new(vec![1.0, 0.0, 0.0])?, Point::new(vec![0.0, 0.0, -2.0])?);
    println!("j in R^3 minus 0: {:.6}", j_distance(&three, &a, &b)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("distances example");
}
