//! The sharp radii: solving for λ and log(1+√3), and the tables of known radii.

use metric_balls::analysis::{
    lambda_f, radii_table, solve_j_ctc_radius, solve_lambda, solve_lambda_secant, tangent_components, RadiusValue,
    SharpConstants,
};

pub fn run_example() -> metric_balls::Result<()> {
    let l = solve_lambda(1e-12)?;
    println!("lambda = {l:.12}, f(lambda) = {:.1e}", lambda_f(l)?);
    println!("secant agrees to {:.1e}", (solve_lambda_secant(1e-13)? - l).abs());
    let (a, b) = tangent_components(l, -1.0)?;
    println!("tangent at s = -1: ({a:.6}, {b:.1e})");

    let rj = solve_j_ctc_radius(1e-12)?;
    println!("j radius = {rj:.12} vs log(1+sqrt3) = {:.12}", 3f64.sqrt().ln_1p());

    println!("{:#?}", SharpConstants::compute());
    let (qh, j) = radii_table();
    for t in [qh, j] {
        println!("{} balls", t.metric);
        for row in &t.rows {
            let show = |e: &metric_balls::analysis::RadiusEntry| match e.value {
                RadiusValue::Finite(v) => format!("{} = {v:.5}", e.symbolic),
                _ => e.symbolic.clone(),
            };
            println!(
                "  {:<18} {:<22} {:<22} {}",
                row.domain,
                show(&row.convex),
                show(&row.starlike),
                show(&row.close_to_convex)
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("sharp_constants example");
}
