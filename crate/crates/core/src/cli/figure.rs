//! Deterministic SVG figures of nested metric balls.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::{solve_lambda, SharpConstants};
use crate::balls::{ball_extent, ball_predicate, j_ball_punctured_at, qh_disk_boundary_at};
use crate::error::{Error, Result};
use crate::geometry::{trace_boundaries, Point, Polyline, Vec2, Window};
use crate::metrics::{Domain, MetricKind};

use super::args::Preset;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Style {
    pub size_px: f64,
    pub padding_px: f64,
    pub stroke_width: f64,
    /// Stroke colors, cycled over the radii.
    pub colors: Vec<String>,
}

impl Default for Style {
    fn default() -> Self {
        Self {
            size_px: 800.0,
            padding_px: 20.0,
            stroke_width: 1.5,
            colors: ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureSpec {
    pub metric: MetricKind,
    pub domain: Domain,
    pub x: Vec2,
    pub radii: Vec<f64>,
    pub window: Window,
    /// Boundary samples for quasihyperbolic disks, lattice side for traced j-balls.
    pub resolution: usize,
    pub style: Style,
    /// Free-form lines written into the header comment.
    pub notes: Vec<String>,
}

impl FigureSpec {
    /// Square window centered at `x` with half-side `factor` times the
    /// largest outer-disk radius.
    pub fn window_for(domain: &Domain, x: Vec2, r_max: f64, factor: f64) -> Result<Window> {
        let big_r = ball_extent(domain, &Point::from(x), r_max)?;
        Window::square(x, factor * big_r)
    }

    pub fn validate(&self) -> Result<()> {
        if self.radii.is_empty() {
            return Err(Error::OutOfRange("a figure needs at least one radius".into()));
        }
        if let Some(&r) = self.radii.iter().find(|r| !(**r > 0.0 && r.is_finite())) {
            return Err(Error::InvalidRadius(r));
        }
        if self.radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::OutOfRange("radii must be strictly increasing".into()));
        }
        self.domain.check_planar()?;
        let r_max = *self.radii.last().expect("non-empty");
        let big_r = 1.05 * ball_extent(&self.domain, &Point::from(self.x), r_max)?;
        let w = self.window;
        if self.x.x - big_r < w.min.x || self.x.x + big_r > w.max.x || self.x.y - big_r < w.min.y || self.x.y + big_r > w.max.y {
            return Err(Error::WindowTooSmall);
        }
        if self.resolution < 8 {
            return Err(Error::OutOfRange(format!("resolution {} is below 8", self.resolution)));
        }
        Ok(())
    }
}

/// Boundary loops per radius, in the order of `spec.radii`.
pub fn figure_curves(spec: &FigureSpec) -> Result<Vec<Vec<Polyline>>> {
    spec.validate()?;
    let x = Point::from(spec.x);
    spec.radii
        .iter()
        .map(|&r| match (spec.metric, &spec.domain) {
            (MetricKind::QuasiHyperbolic, Domain::PuncturedSpace { puncture }) => {
                Ok(vec![qh_disk_boundary_at(puncture.to_vec2()?, &x, r, spec.resolution)?.polyline])
            }
            (MetricKind::QuasiHyperbolic, _) => {
                Err(Error::Unsupported("quasihyperbolic figures need a punctured plane".into()))
            }
            (MetricKind::DistanceRatio, Domain::PuncturedSpace { puncture }) => {
                let region = j_ball_punctured_at(puncture.to_vec2()?, &x, r)?;
                trace_boundaries(|p| region.contains_xy(p), spec.window, spec.resolution, spec.resolution)
            }
            (MetricKind::DistanceRatio, domain) => {
                let pred = ball_predicate(MetricKind::DistanceRatio, domain, &x, r)?;
                trace_boundaries(pred, spec.window, spec.resolution, spec.resolution)
            }
        })
        .collect()
}

struct Frame {
    scale: f64,
    pad: f64,
    x0: f64,
    y1: f64,
}

impl Frame {
    fn map(&self, p: Vec2) -> (f64, f64) {
        (self.pad + self.scale * (p.x - self.x0), self.pad + self.scale * (self.y1 - p.y))
    }
}

fn fmt(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" { "0.000".into() } else { s }
}

/// SVG document for `spec`; identical inputs give identical bytes.
pub fn emit_svg(spec: &FigureSpec) -> Result<String> {
    let curves = figure_curves(spec)?;
    let w = spec.window;
    let st = &spec.style;
    let scale = st.size_px / w.width().max(w.height());
    let frame = Frame {
        scale,
        pad: st.padding_px,
        x0: w.min.x,
        y1: w.max.y,
    };
    let width = 2.0 * st.padding_px + scale * w.width();
    let height = 2.0 * st.padding_px + scale * w.height();

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt(width),
        fmt(height),
        fmt(width),
        fmt(height)
    );
    let _ = writeln!(svg, "<!--");
    let _ = writeln!(svg, "  metric: {:?}", spec.metric);
    let _ = writeln!(svg, "  domain: {}", serde_json::to_string(&spec.domain).unwrap_or_default());
    let _ = writeln!(svg, "  center: ({}, {})", spec.x.x, spec.x.y);
    let radii: Vec<String> = spec.radii.iter().map(|r| format!("{r}")).collect();
    let _ = writeln!(svg, "  radii: {}", radii.join(", "));
    let _ = writeln!(
        svg,
        "  transform: X = {} + {} * (x - ({})), Y = {} + {} * ({} - y)",
        st.padding_px, scale, w.min.x, st.padding_px, scale, w.max.y
    );
    for note in &spec.notes {
        let _ = writeln!(svg, "  {}", note.replace("--", "- -"));
    }
    let _ = writeln!(svg, "-->");
    let _ = writeln!(svg, r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#, fmt(width), fmt(height));

    for (k, (r, loops)) in spec.radii.iter().zip(&curves).enumerate() {
        let color = st.colors.get(k % st.colors.len().max(1)).map(String::as_str).unwrap_or("black");
        let mut d = String::new();
        for poly in loops {
            for (i, &v) in poly.vertices().iter().enumerate() {
                let (px, py) = frame.map(v);
                let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, fmt(px), fmt(py));
            }
            d.push_str("Z ");
        }
        let _ = writeln!(
            svg,
            r#"<path data-radius="{r}" d="{}" fill="none" stroke="{color}" stroke-width="{}" fill-rule="evenodd"/>"#,
            d.trim_end(),
            st.stroke_width
        );
    }

    match &spec.domain {
        Domain::SlitPlane { slit } => {
            let (ax, ay) = frame.map(slit.origin);
            let far = slit.origin + slit.direction * (2.0 * (w.width() + w.height()));
            let (bx, by) = frame.map(far);
            let _ = writeln!(
                svg,
                r#"<line class="boundary" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="2"/>"#,
                fmt(ax),
                fmt(ay),
                fmt(bx),
                fmt(by)
            );
        }
        domain => {
            for p in domain.removed_points().unwrap_or(&[]) {
                let (px, py) = frame.map(p.to_vec2()?);
                let _ = writeln!(svg, r#"<circle class="boundary" cx="{}" cy="{}" r="3" fill="black"/>"#, fmt(px), fmt(py));
            }
        }
    }
    let (cx, cy) = frame.map(spec.x);
    let _ = writeln!(
        svg,
        r#"<path class="center" d="M{} {} L{} {} M{} {} L{} {}" stroke="black" stroke-width="1"/>"#,
        fmt(cx - 4.0),
        fmt(cy),
        fmt(cx + 4.0),
        fmt(cy),
        fmt(cx),
        fmt(cy - 4.0),
        fmt(cx),
        fmt(cy + 4.0)
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}

pub const DEFAULT_R0: f64 = 0.1;

/// Preset figures: quasihyperbolic disks at `λ − r0, λ, λ + r0` in the
/// punctured plane, and j-disks at `log(1+√3) ∓ r0` in the punctured plane
/// or the plane slit along the non-positive real axis; all centered at `e₁`.
pub fn preset_spec(preset: Preset, r0: Option<f64>, resolution: Option<usize>) -> Result<FigureSpec> {
    let r0 = r0.unwrap_or(DEFAULT_R0);
    if !(r0 > 0.0 && r0.is_finite()) {
        return Err(Error::OutOfRange(format!("r0 = {r0} must be positive")));
    }
    let x = Vec2::new(1.0, 0.0);
    let (metric, domain, center, notes) = match preset {
        Preset::Fig2 => {
            let l = solve_lambda(1e-14)?;
            if l + r0 > std::f64::consts::PI {
                return Err(Error::OutOfRange(format!(
                    "λ + r0 = {} > π: not simply connected region; boundary parameterization invalid",
                    l + r0
                )));
            }
            (
                MetricKind::QuasiHyperbolic,
                Domain::punctured(2),
                l,
                vec!["quasihyperbolic disks at lambda - r0, lambda, lambda + r0 in the punctured plane".to_string()],
            )
        }
        Preset::Fig1Punctured => (
            MetricKind::DistanceRatio,
            Domain::punctured(2),
            SharpConstants::compute().j_ctc,
            vec!["j-disks at log(1+sqrt 3) - r0, log(1+sqrt 3), log(1+sqrt 3) + r0 in the punctured plane".to_string()],
        ),
        Preset::Fig1Slit => (
            MetricKind::DistanceRatio,
            Domain::negative_real_slit(),
            SharpConstants::compute().j_ctc,
            vec![
                "j-disks at log(1+sqrt 3) - r0, log(1+sqrt 3), log(1+sqrt 3) + r0".to_string(),
                "slit: the non-positive real axis; center x = e1".to_string(),
            ],
        ),
    };
    if r0 >= center {
        return Err(Error::OutOfRange(format!("r0 = {r0} must be below {center}")));
    }
    let radii = vec![center - r0, center, center + r0];
    let resolution = resolution.unwrap_or(match metric {
        MetricKind::QuasiHyperbolic => 1024,
        MetricKind::DistanceRatio => 400,
    });
    let window = FigureSpec::window_for(&domain, x, center + r0, 1.1)?;
    Ok(FigureSpec {
        metric,
        domain,
        x,
        radii,
        window,
        resolution,
        style: Style::default(),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_convex_disk() {
        let d = Domain::punctured(2);
        let x = Vec2::new(1.0, 0.0);
        let spec = FigureSpec {
            metric: MetricKind::QuasiHyperbolic,
            domain: d.clone(),
            x,
            radii: vec![0.5],
            window: FigureSpec::window_for(&d, x, 0.5, 2.0).unwrap(),
            resolution: 256,
            style: Style::default(),
            notes: vec![],
        };
        let curves = figure_curves(&spec).unwrap();
        assert_eq!(curves.len(), 1);
        assert!(crate::geometry::polygon_is_convex(&curves[0][0]).unwrap().holds);
        let svg = emit_svg(&spec).unwrap();
        assert_eq!(svg.matches("<path data-radius").count(), 1);
        assert_eq!(svg, emit_svg(&spec).unwrap());
    }

    #[test]
    fn validation() {
        let mut spec = preset_spec(Preset::Fig2, None, Some(64)).unwrap();
        spec.radii.swap(0, 1);
        assert!(spec.validate().is_err());
        let mut spec = preset_spec(Preset::Fig2, None, Some(64)).unwrap();
        spec.window = Window::square(spec.x, 1.0).unwrap();
        assert_eq!(spec.validate(), Err(Error::WindowTooSmall));
        assert!(preset_spec(Preset::Fig2, Some(0.3), None).is_err());
    }
}
