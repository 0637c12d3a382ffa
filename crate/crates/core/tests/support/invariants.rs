//! Deterministic versions of the module invariants, shared by the property
//! tests and the acceptance harness.

use metric_balls::analysis::{lambda_f, hole_conditions, tangent_b_derivative, tangent_components};
use metric_balls::geometry::{Disk, Point, Vec2};
use metric_balls::metrics::{j_distance, qh_distance_punctured, Domain};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub type Check = Result<(), String>;

fn random_point(rng: &mut StdRng) -> Point {
    let rho = rng.gen_range(-2.0f64..2.0).exp();
    let t = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    Point::xy(rho * t.cos(), rho * t.sin())
}

/// Symmetry, triangle inequality and `k ≥ j` on random triples.
pub fn metric_axioms(seed: u64, n: usize) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let plane = Domain::punctured(2);
    for _ in 0..n {
        let (x, y, z) = (random_point(&mut rng), random_point(&mut rng), random_point(&mut rng));
        let j = |a: &Point, b: &Point| j_distance(&plane, a, b).unwrap();
        let k = |a: &Point, b: &Point| qh_distance_punctured(a, b).unwrap();
        for (name, m) in [("j", &j as &dyn Fn(&Point, &Point) -> f64), ("k", &k)] {
            let (xy, yx) = (m(&x, &y), m(&y, &x));
            if (xy - yx).abs() > 1e-12 * xy.max(1.0) {
                return Err(format!("{name} not symmetric at {x:?}, {y:?}: {xy} vs {yx}"));
            }
            if m(&x, &z) > xy + m(&y, &z) + 1e-9 {
                return Err(format!("{name} triangle inequality fails at {x:?}, {y:?}, {z:?}"));
            }
        }
        if k(&x, &y) < j(&x, &y) - 1e-12 {
            return Err(format!("k < j at {x:?}, {y:?}"));
        }
    }
    Ok(())
}

/// `b'(s) = −(1+s) a(s) / φ(s)` against a centered difference, relative 1e−5.
pub fn b_prime_matches_difference(seed: u64, n: usize) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..n {
        let r = rng.gen_range(1.2..std::f64::consts::PI);
        let s = rng.gen_range(-0.95 * r..0.95 * r);
        let h = 1e-6 * r;
        let b = |s: f64| tangent_components(r, s).unwrap().1;
        let fd = (b(s + h) - b(s - h)) / (2.0 * h);
        let exact = tangent_b_derivative(r, s).unwrap();
        if (fd - exact).abs() > 1e-5 * exact.abs() {
            return Err(format!("b'({s}) at r = {r}: difference {fd} vs formula {exact}"));
        }
    }
    Ok(())
}

/// `f` strictly decreasing on a uniform grid over (2, π).
pub fn f_strictly_decreasing(points: usize) -> Check {
    let (lo, hi) = (2.0, std::f64::consts::PI);
    let grid = |k: usize| lo + (hi - lo) * (k as f64 + 0.5) / points as f64;
    let mut prev = lambda_f(grid(0)).unwrap();
    for k in 1..points {
        let v = lambda_f(grid(k)).unwrap();
        if !(v < prev) {
            return Err(format!("f not decreasing at z = {}", grid(k)));
        }
        prev = v;
    }
    Ok(())
}

/// `a(s) < 0` on (−r, 0) for r in (2, π), and `b(−1) = f(r)`.
pub fn tangent_sign_and_identity(seed: u64, n: usize) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..n {
        let r = rng.gen_range(2.0..std::f64::consts::PI);
        for k in 1..100 {
            let s = -r * k as f64 / 100.0;
            let (a, _) = tangent_components(r, s).unwrap();
            if !(a < 0.0) {
                return Err(format!("a({s}) = {a} >= 0 at r = {r}"));
            }
        }
        let (_, b) = tangent_components(r, -1.0).unwrap();
        let f = lambda_f(r).unwrap();
        if (b - f).abs() > 1e-12 {
            return Err(format!("b(-1) = {b} but f(r) = {f} at r = {r}"));
        }
    }
    Ok(())
}

/// Hole geometry of the general-domain j-ball for a boundary point at
/// distance `c ≥ d(x)`: `(r0, |x_i|, r_i)`.
pub fn hole_for(d: f64, c: f64, r: f64) -> (f64, f64, f64) {
    let e = r.exp();
    let q = 1.0 / (e * (e - 2.0));
    (d * (e - 1.0), c * (1.0 + q), c * (e - 1.0) * q)
}

/// The three hole inequalities on random `(d(x), c ≥ d(x), r ≤ log(1+√3))`,
/// checked from the raw formulas and through `hole_conditions`.
pub fn hole_chain(seed: u64, n: usize) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let r_max = 3f64.sqrt().ln_1p();
    for _ in 0..n {
        let d = rng.gen_range(0.1..10.0);
        let c = d * rng.gen_range(1.0..6.0);
        let r = rng.gen_range(2f64.ln() + 1e-3..=r_max);
        let (r0, xi, ri) = hole_for(d, c, r);
        let tol = 1e-12 * r0.max(xi);
        if !(r0 / xi <= 2f64.sqrt() + 1e-12) {
            return Err(format!("r0/|x_i| = {} > sqrt 2 at d={d}, c={c}, r={r}", r0 / xi));
        }
        if !(ri < xi) {
            return Err(format!("r_i >= |x_i| at d={d}, c={c}, r={r}"));
        }
        if !((ri * ri + xi * xi).sqrt() >= r0 - tol) {
            return Err(format!("r_i^2 + |x_i|^2 < r0^2 at d={d}, c={c}, r={r}"));
        }
        let angle = rng.gen_range(0.0..std::f64::consts::TAU);
        let hole = Disk::new(Vec2::new(angle.cos(), angle.sin()) * xi, ri).unwrap();
        if !hole_conditions(r0, &hole, Vec2::ZERO).all() {
            return Err(format!("hole_conditions rejects d={d}, c={c}, r={r}"));
        }
    }
    Ok(())
}
