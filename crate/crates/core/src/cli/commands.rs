use serde_json::{json, Value};

use super::args::*;
use super::figure::{emit_svg, figure_curves, preset_spec, FigureSpec, Style};
use super::{Failure, Output, Report};
use crate::analysis::{
    annular_ctc_check, lambda_f, qh_ctc_verdict, radii_table, solve_j_ctc_radius, solve_lambda, solve_lambda_secant,
    sweep_bracket, verify_disconnection_example, SharpConstants,
};
use crate::balls::{
    ball_raster, default_ball_window, j_ball_general, j_ball_punctured, j_ball_punctured_at,
    qh_disk_boundary, qh_disk_boundary_at, qh_disk_bounds, region_raster,
};
use crate::error::{Error, Result};
use crate::geometry::{
    complement_has_bounded_component, count_components, polygon_is_convex, polygon_is_starlike,
    region_is_starlike, GridRaster, Point, Region, Vec2, Verdict, Window, Witness,
};
use crate::metrics::{
    distance_to_boundary, j_distance, qh_distance_grid_oracle, qh_distance_punctured_at, Domain, MetricKind,
};

const J_FORMULA: &str = "j(x,y) = log(1 + |x-y| / min(d(x), d(y)))";
const QH_FORMULA: &str = "k(x,y) = sqrt(alpha^2 + log^2(|x-p| / |y-p|)), alpha = angle(x-p, y-p)";
const ORACLE_FORMULA: &str = "Dijkstra on a 32-neighbor grid, edge weight |e| / d(midpoint)";
const ROUNDING: f64 = 1e-15;
const ORACLE_RTOL: f64 = 0.03;

pub(super) fn name(c: &Command) -> &'static str {
    match c {
        Command::Dist(_) => "dist",
        Command::Ball(_) => "ball",
        Command::Check(_) => "check",
        Command::Constants(_) => "constants",
        Command::Counterexample(_) => "counterexample",
        Command::Sweep(_) => "sweep",
        Command::Figure(_) => "figure",
    }
}

pub(super) fn inputs(c: &Command) -> Value {
    let v = match c {
        Command::Dist(a) => serde_json::to_value(a),
        Command::Ball(a) => serde_json::to_value(a),
        Command::Check(a) => serde_json::to_value(a),
        Command::Constants(a) => serde_json::to_value(a),
        Command::Counterexample(a) => serde_json::to_value(a),
        Command::Sweep(a) => serde_json::to_value(a),
        Command::Figure(a) => serde_json::to_value(a),
    };
    v.unwrap_or(Value::Null)
}

pub(super) fn execute(c: &Command) -> std::result::Result<Output, Failure> {
    let mut report = Report::new(name(c), inputs(c));
    match c {
        Command::Dist(a) => dist(a, &mut report)?,
        Command::Ball(a) => return ball(a, report),
        Command::Check(a) => check(a, &mut report)?,
        Command::Constants(a) => constants(a, &mut report)?,
        Command::Counterexample(a) => counterexample(a, &mut report)?,
        Command::Sweep(a) => sweep(a, &mut report)?,
        Command::Figure(a) => figure(a, &mut report)?,
    }
    Ok(Output::Json(report))
}

fn usage<T>(r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(Failure::Usage)
}

fn check_radius(r: f64) -> std::result::Result<(), Failure> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Failure::Usage(Error::InvalidRadius(r)))
    }
}

struct Target {
    metric: MetricKind,
    domain: Domain,
    x: Point,
    r: f64,
}

fn target(t: &BallTarget) -> std::result::Result<Target, Failure> {
    let x = usage(parse_point(&t.x))?;
    let domain = usage(parse_domain(&t.domain, x.dim()))?;
    check_radius(t.r)?;
    usage(x.check_dim(domain.dimension()))?;
    Ok(Target {
        metric: t.metric.into(),
        domain,
        x,
        r: t.r,
    })
}

fn puncture_of(domain: &Domain) -> Option<&Point> {
    match domain {
        Domain::PuncturedSpace { puncture } => Some(puncture),
        _ => None,
    }
}

fn dist(a: &DistArgs, rep: &mut Report) -> std::result::Result<(), Failure> {
    let x = usage(parse_point(&a.x))?;
    let y = usage(parse_point(&a.y))?;
    let domain = usage(parse_domain(&a.domain, x.dim()))?;
    match MetricKind::from(a.metric) {
        MetricKind::DistanceRatio => {
            let d = rep.timed("distance", || j_distance(&domain, &x, &y))?;
            rep.set("distance", d);
            rep.tolerance("distance", ROUNDING);
            rep.cite(J_FORMULA);
            if a.oracle {
                return Err(Failure::Usage(Error::Unsupported(
                    "the grid oracle estimates the quasihyperbolic distance; use --metric qh".into(),
                )));
            }
        }
        MetricKind::QuasiHyperbolic => {
            let closed = puncture_of(&domain).map(|p| qh_distance_punctured_at(p, &x, &y));
            if closed.is_none() && !a.oracle {
                return Err(Failure::Compute(Error::Unsupported(
                    "no closed form outside punctured space; add --oracle for a grid estimate".into(),
                )));
            }
            let closed = match closed {
                Some(c) => Some(rep.timed("distance", || c)?),
                None => None,
            };
            if let Some(d) = closed {
                rep.set("distance", d);
                rep.tolerance("distance", ROUNDING);
                rep.cite(QH_FORMULA);
            }
            if a.oracle {
                let v = rep.timed("oracle", || qh_distance_grid_oracle(&domain, &x, &y, a.resolution))?;
                let rel = closed.map(|d| (v - d).abs() / d);
                rep.set(
                    "oracle",
                    json!({ "value": v, "resolution": a.resolution, "stencil": 32, "relative_error": rel }),
                );
                rep.tolerance("oracle", ORACLE_RTOL);
                rep.cite(ORACLE_FORMULA);
                if closed.is_none() {
                    rep.set("distance", v);
                    rep.tolerance("distance", ORACLE_RTOL);
                }
            }
        }
    }
    Ok(())
}

/// Exact j-ball region: closed form in punctured planes, sampled cuts elsewhere.
fn j_region(t: &Target, samples: usize, window: &Window, rep: &mut Report) -> Result<Region> {
    match puncture_of(&t.domain) {
        Some(p) => {
            rep.cite("j-ball in a punctured plane: outer disk with an intersected disk, half-plane or subtracted disk");
            let p = p.to_vec2()?;
            rep.timed("construct", || j_ball_punctured_at(p, &t.x, t.r))
        }
        None => {
            rep.cite("j-ball in a general domain: intersection over sampled boundary points of punctured j-balls");
            rep.set("boundary_samples", samples);
            rep.timed("construct", || j_ball_general(&t.domain, &t.x, t.r, samples, window))
        }
    }
}

fn qh_window(t: &Target) -> Result<Window> {
    let p = puncture_of(&t.domain)
        .ok_or_else(|| Error::Unsupported("quasihyperbolic balls need a punctured plane".into()))?
        .to_vec2()?;
    let b = qh_disk_bounds(p, t.x.to_vec2()?, t.r)?;
    let pad = 0.05 * b.width().max(b.height());
    Window::new(b.min - Vec2::new(pad, pad), b.max + Vec2::new(pad, pad))
}

fn default_window(t: &Target) -> Result<Window> {
    match t.metric {
        MetricKind::QuasiHyperbolic => qh_window(t),
        MetricKind::DistanceRatio => default_ball_window(&t.domain, &t.x, t.r),
    }
}

/// Raster dimensions with about `n` cells along the longer side and square cells.
fn grid_dims(w: &Window, n: usize) -> (usize, usize) {
    let side = w.width().max(w.height()) / n as f64;
    (
        ((w.width() / side).round() as usize).max(2),
        ((w.height() / side).round() as usize).max(2),
    )
}

fn raster_summary(raster: &GridRaster) -> Result<Value> {
    let bounded = complement_has_bounded_component(raster);
    Ok(json!({
        "nx": raster.nx(),
        "ny": raster.ny(),
        "window": raster.window(),
        "filled_cells": raster.count_true(),
        "filled_fraction": raster.filled_fraction(),
        "components": count_components(raster),
        "complement_has_bounded_component": bounded.as_ref().ok(),
        "complement_error": bounded.as_ref().err().map(|e| e.to_string()),
    }))
}

fn ball(a: &BallArgs, mut report: Report) -> std::result::Result<Output, Failure> {
    let t = target(&a.target)?;
    usage(t.domain.check_planar())?;
    let window = match &a.window {
        Some(w) => usage(parse_window(w))?,
        None => default_window(&t)?,
    };
    if a.out == OutFormat::Svg {
        let spec = FigureSpec {
            metric: t.metric,
            domain: t.domain.clone(),
            x: t.x.to_vec2()?,
            radii: vec![t.r],
            window: FigureSpec::window_for(&t.domain, t.x.to_vec2()?, t.r, 1.1)?,
            resolution: a.samples.max(8),
            style: Style::default(),
            notes: vec![],
        };
        return Ok(Output::Svg(emit_svg(&spec)?));
    }
    let rep = &mut report;
    let mut exact: Option<Region> = None;
    match t.metric {
        MetricKind::DistanceRatio => {
            let region = j_region(&t, a.samples, &window, rep)?;
            rep.set("region", &region);
            rep.set("outer_radius", region.outer.radius);
            rep.tolerance("outer_radius", ROUNDING);
            exact = Some(region);
        }
        MetricKind::QuasiHyperbolic => {
            let p = puncture_of(&t.domain)
                .ok_or_else(|| Error::Unsupported("quasihyperbolic balls need a punctured plane".into()))?
                .to_vec2()?;
            if t.r <= std::f64::consts::PI || a.raster.is_none() {
                let b = rep.timed("construct", || qh_disk_boundary_at(p, &t.x, t.r, a.samples))?;
                rep.cite("qh circle: y(s) = e^s (cos phi, sin phi), phi = sqrt(r^2 - s^2), s in [-r, r]");
                rep.set("samples", a.samples);
                rep.set("boundary", &b.polyline);
                rep.tolerance("boundary", ROUNDING);
            } else {
                rep.set("boundary", Value::Null);
                rep.set("boundary_note", "r > pi: not simply connected region; boundary parameterization invalid");
            }
        }
    }
    if let Some(dims) = &a.raster {
        let (nx, ny) = (dims[0], dims[1]);
        let raster = rep.timed("raster", || ball_raster(t.metric, &t.domain, &t.x, t.r, window, nx, ny))?;
        let mut summary = raster_summary(&raster)?;
        if let Some(region) = &exact {
            let other = region_raster(region, window, nx, ny)?;
            let diff = raster.symmetric_difference(&other)?;
            summary["region_mismatch_fraction"] = json!(diff as f64 / (nx * ny) as f64);
        }
        rep.set("raster", summary);
        rep.cite("direct membership raster {y : m(x, y) < r}");
    }
    Ok(Output::Json(report))
}

fn verdict_value(v: &Verdict) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

fn check(a: &CheckArgs, rep: &mut Report) -> std::result::Result<(), Failure> {
    let t = target(&a.target)?;
    usage(t.domain.check_planar())?;
    distance_to_boundary(&t.domain, &t.x)?;
    let x = t.x.to_vec2()?;
    if a.property == Property::Components {
        let n = a.resolution.unwrap_or(600);
        let window = default_window(&t)?;
        let (nx, ny) = grid_dims(&window, n);
        let raster = rep.timed("raster", || ball_raster(t.metric, &t.domain, &t.x, t.r, window, nx, ny))?;
        let summary = raster_summary(&raster)?;
        rep.set("components", &summary["components"]);
        rep.set("raster", summary);
        rep.cite("8-connected set components, 4-connected complement components");
        return Ok(());
    }
    match t.metric {
        MetricKind::QuasiHyperbolic => {
            let p = puncture_of(&t.domain)
                .ok_or_else(|| Error::Unsupported("quasihyperbolic balls need a punctured plane".into()))?
                .to_vec2()?;
            if a.property == Property::Ctc {
                let v = rep.timed("verdict", || qh_ctc_verdict(t.r))?;
                rep.set("holds", v.holds);
                rep.set("verdict", &v);
                rep.cite("f(z) = cos sqrt(z^2-1) + sqrt(z^2-1) sin sqrt(z^2-1); b(-1) = f(r)");
                rep.tolerance("holds", crate::analysis::LAMBDA_SLACK);
                return Ok(());
            }
            let samples = a.resolution.unwrap_or(2048);
            let b = rep.timed("construct", || qh_disk_boundary_at(p, &t.x, t.r, samples))?;
            let v = rep.timed("verdict", || match a.property {
                Property::Convex => polygon_is_convex(&b.polyline),
                _ => polygon_is_starlike(&b.polyline, x),
            })?;
            rep.set("holds", v.holds);
            rep.set("verdict", verdict_value(&v));
            rep.set("samples", samples);
            rep.tolerance("holds", crate::geometry::COLLINEAR_TOL);
            rep.cite("polygon test on the sampled qh circle");
        }
        MetricKind::DistanceRatio => {
            let window = default_window(&t)?;
            let region = j_region(&t, 64, &window, rep)?;
            match a.property {
                Property::Convex => {
                    let holes = region.effective_holes().count();
                    let v = if holes == 0 {
                        Verdict::holds()
                    } else {
                        Verdict::fails(Witness::Inequality {
                            name: "effective holes == 0".into(),
                            lhs: holes as f64,
                            rhs: 0.0,
                        })
                    };
                    rep.set("holds", v.holds);
                    rep.set("verdict", verdict_value(&v));
                    rep.cite("intersection of disks and half-planes is convex; a cutting hole is not");
                }
                Property::Starlike => {
                    let v = region_is_starlike(&region, x)?;
                    rep.set("holds", v.holds);
                    rep.set("verdict", verdict_value(&v));
                    rep.cite("hole hides nothing iff |x-c|^2 >= R^2 + s^2");
                }
                _ => {
                    let v = annular_ctc_check(&region, &t.x)?;
                    rep.set("holds", v.holds);
                    rep.set("verdict", &v);
                    rep.cite("per hole: |x_i| >= R/sqrt 2, r_i < |x_i|, sqrt(r_i^2 + |x_i|^2) >= R when |x_i| < R");
                    rep.tolerance("holds", crate::analysis::HOLE_RTOL);
                }
            }
            rep.set("region", &region);
        }
    }
    Ok(())
}

fn constants(a: &ConstantsArgs, rep: &mut Report) -> std::result::Result<(), Failure> {
    match a.solve {
        Some(Solve::Lambda) => {
            let l = rep.timed("solve", || solve_lambda(a.tol)).map_err(Failure::Usage)?;
            let s = solve_lambda_secant(a.tol.max(1e-13))?;
            rep.set("lambda", l);
            rep.set("residual", lambda_f(l)?);
            rep.set("secant", s);
            rep.set("bracket", [2.0, std::f64::consts::PI]);
            rep.tolerance("lambda", a.tol);
            rep.tolerance("secant", a.tol.max(1e-13));
            rep.cite("bisection of f(z) = cos sqrt(z^2-1) + sqrt(z^2-1) sin sqrt(z^2-1) on [2, pi]");
        }
        Some(Solve::Jctc) => {
            let r = rep.timed("solve", || solve_j_ctc_radius(a.tol)).map_err(Failure::Usage)?;
            let closed = 3f64.sqrt().ln_1p();
            rep.set("j_ctc_radius", r);
            rep.set("closed_form", closed);
            rep.set("difference", r - closed);
            rep.tolerance("j_ctc_radius", a.tol);
            rep.cite("bisection of s^2 + (1 - 1/(e^r (2 - e^r)))^2 - (e^r - 1)^2 on (log 2 + 0.05, log 3)");
        }
        None => {}
    }
    if a.table {
        let (qh, j) = rep.timed("table", radii_table);
        rep.set("tables", json!({ "quasihyperbolic": qh, "j": j }));
    }
    if a.solve.is_none() && !a.table {
        let c = rep.timed("constants", SharpConstants::compute);
        rep.set("constants", c);
        rep.tolerance("constants", 1e-14);
    }
    Ok(())
}

fn counterexample(a: &CounterexampleArgs, rep: &mut Report) -> std::result::Result<(), Failure> {
    check_radius(a.r)?;
    let r = rep.timed("verify", || verify_disconnection_example(a.r, a.resolution)).map_err(Failure::Usage)?;
    rep.set("components", r.components);
    rep.set("verdict", if r.disconnected { "disconnected" } else { "connected" });
    rep.set("report", &r);
    rep.tolerance("separation", 1e-12);
    rep.cite("f(h) = (4 + 2 sqrt 3 + h^2) / (h^2 - 2h + 2), j(sqrt3 i, h - i) = log(1 + sqrt f(h))");
    rep.cite(J_FORMULA);
    Ok(())
}

fn sweep_checker(p: SweepProperty, samples: usize) -> impl FnMut(f64) -> Result<bool> {
    let e1 = Point::xy(1.0, 0.0);
    let x = Vec2::new(1.0, 0.0);
    move |r| match p {
        SweepProperty::QhCtc => Ok(qh_ctc_verdict(r)?.holds),
        SweepProperty::QhConvex => Ok(polygon_is_convex(&qh_disk_boundary(&e1, r, samples)?.polyline)?.holds),
        SweepProperty::QhStarlike => Ok(polygon_is_starlike(&qh_disk_boundary(&e1, r, samples)?.polyline, x)?.holds),
        SweepProperty::JCtc => Ok(annular_ctc_check(&j_ball_punctured(&e1, r)?, &e1)?.holds),
        SweepProperty::JStarlike => Ok(region_is_starlike(&j_ball_punctured(&e1, r)?, x)?.holds),
        SweepProperty::JConvex => Ok(j_ball_punctured(&e1, r)?.effective_holes().next().is_none()),
    }
}

fn sweep(a: &SweepArgs, rep: &mut Report) -> std::result::Result<(), Failure> {
    let checker = sweep_checker(a.property, a.samples);
    let b = rep.timed("sweep", || sweep_bracket(checker, a.lo, a.hi, a.tol)).map_err(Failure::Usage)?;
    rep.set("critical_radius", b.midpoint());
    rep.set("bracket", [b.lo, b.hi]);
    rep.set("iterations", b.iterations);
    rep.tolerance("critical_radius", a.tol);
    rep.cite("bisection on a monotone property flip, center e1 in the punctured plane");
    Ok(())
}

fn figure(a: &FigureArgs, rep: &mut Report) -> std::result::Result<(), Failure> {
    let spec = usage(preset_spec(a.preset, a.r0, a.resolution))?;
    let svg = rep.timed("render", || emit_svg(&spec))?;
    let loops: Vec<usize> = figure_curves(&spec)?.iter().map(Vec::len).collect();
    std::fs::write(&a.out, &svg).map_err(|e| Failure::Compute(Error::InvalidGeometry(format!("cannot write {}: {e}", a.out.display()))))?;
    rep.set("path", a.out.display().to_string());
    rep.set("radii", &spec.radii);
    rep.set("loops_per_radius", loops);
    rep.set("bytes", svg.len());
    rep.set("window", spec.window);
    rep.tolerance("radii", 1e-14);
    rep.cite("SVG: one path per radius, y-up affine map recorded in the header");
    Ok(())
}
