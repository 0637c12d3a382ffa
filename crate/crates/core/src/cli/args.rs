use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Point, Vec2, Window};
use crate::metrics::{Domain, MetricKind};

#[derive(Debug, Parser)]
#[command(name = "metric-balls", version, about = "Quasihyperbolic and j-metric balls: distances, shapes and sharp radii")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance between two points.
    Dist(DistArgs),
    /// Construct a ball.
    Ball(BallArgs),
    /// Decide a shape property of a ball.
    Check(CheckArgs),
    /// Sharp constants, root solves and the radii tables.
    Constants(ConstantsArgs),
    /// The disconnected j-ball in the twice-punctured plane.
    Counterexample(CounterexampleArgs),
    /// Localize the radius where a property flips.
    Sweep(SweepArgs),
    /// Write a preset figure as SVG.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetricArg {
    J,
    Qh,
}

impl From<MetricArg> for MetricKind {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::J => MetricKind::DistanceRatio,
            MetricArg::Qh => MetricKind::QuasiHyperbolic,
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct BallTarget {
    #[arg(long, value_enum)]
    pub metric: MetricArg,
    /// punctured | punctured:<p> | points:<p1;p2;...> | slit
    #[arg(long, default_value = "punctured", allow_hyphen_values = true)]
    pub domain: String,
    /// Center, comma-separated reals.
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, allow_hyphen_values = true)]
    pub r: f64,
}

#[derive(Debug, Args, Serialize)]
pub struct DistArgs {
    #[arg(long, value_enum)]
    pub metric: MetricArg,
    #[arg(long, default_value = "punctured", allow_hyphen_values = true)]
    pub domain: String,
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, allow_hyphen_values = true)]
    pub y: String,
    /// Also run the grid shortest-path oracle.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = 400)]
    pub resolution: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutFormat {
    Json,
    Svg,
}

#[derive(Debug, Args, Serialize)]
pub struct BallArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub target: BallTarget,
    /// Boundary samples (qh) or boundary points per cut (j, general domains).
    #[arg(long, default_value_t = 512)]
    pub samples: usize,
    #[arg(long, num_args = 2, value_names = ["NX", "NY"])]
    pub raster: Option<Vec<usize>>,
    /// x0,y0,x1,y1
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub out: OutFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Convex,
    Starlike,
    Ctc,
    Components,
}

#[derive(Debug, Args, Serialize)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub property: Property,
    #[command(flatten)]
    #[serde(flatten)]
    pub target: BallTarget,
    /// Boundary samples for polygon checks, raster side for components.
    #[arg(long)]
    pub resolution: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Solve {
    Lambda,
    Jctc,
}

#[derive(Debug, Args, Serialize)]
pub struct ConstantsArgs {
    #[arg(long, value_enum)]
    pub solve: Option<Solve>,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long)]
    pub table: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct CounterexampleArgs {
    #[arg(long)]
    pub r: f64,
    #[arg(long, default_value_t = 600)]
    pub resolution: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepProperty {
    /// qh disk close-to-convex (tangent criterion)
    QhCtc,
    /// qh disk boundary polygon convex
    QhConvex,
    /// qh disk boundary polygon starlike w.r.t. x
    QhStarlike,
    /// punctured-plane j-ball close-to-convex
    JCtc,
    /// punctured-plane j-ball starlike w.r.t. x
    JStarlike,
    /// punctured-plane j-ball convex
    JConvex,
}

#[derive(Debug, Args, Serialize)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub property: SweepProperty,
    #[arg(long)]
    pub lo: f64,
    #[arg(long)]
    pub hi: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    /// Boundary samples for the polygon properties.
    #[arg(long, default_value_t = 2048)]
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    #[value(name = "fig1-punctured")]
    Fig1Punctured,
    #[value(name = "fig1-slit")]
    Fig1Slit,
    #[value(name = "fig2")]
    Fig2,
}

#[derive(Debug, Args, Serialize)]
pub struct FigureArgs {
    #[arg(long, value_enum)]
    pub preset: Preset,
    #[arg(long)]
    pub r0: Option<f64>,
    #[arg(long)]
    pub out: std::path::PathBuf,
    #[arg(long)]
    pub resolution: Option<usize>,
}

pub fn parse_reals(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidPoint(format!("cannot parse {t:?} in {s:?}")))
        })
        .collect()
}

pub fn parse_point(s: &str) -> Result<Point> {
    Point::new(parse_reals(s)?)
}

pub fn parse_window(s: &str) -> Result<Window> {
    match parse_reals(s)?.as_slice() {
        &[x0, y0, x1, y1] => Window::new(Vec2::new(x0, y0), Vec2::new(x1, y1)),
        _ => Err(Error::InvalidGeometry(format!("window needs x0,y0,x1,y1, got {s:?}"))),
    }
}

/// Domain descriptor; `punctured` removes the origin in the dimension of `x`.
pub fn parse_domain(s: &str, dim: usize) -> Result<Domain> {
    let s = s.trim();
    if s == "punctured" {
        return Ok(Domain::punctured(dim));
    }
    if s == "slit" {
        return Ok(Domain::negative_real_slit());
    }
    if let Some(p) = s.strip_prefix("punctured:") {
        return Ok(Domain::punctured_at(parse_point(p)?));
    }
    if let Some(list) = s.strip_prefix("points:") {
        let points = list
            .split(';')
            .filter(|t| !t.trim().is_empty())
            .map(parse_point)
            .collect::<Result<Vec<_>>>()?;
        return Domain::point_complement(points);
    }
    Err(Error::InvalidDomain(format!("unknown domain descriptor {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_and_domains() {
        assert_eq!(parse_point("1,-2.5").unwrap(), Point::xy(1.0, -2.5));
        assert!(parse_point("1,a").is_err());
        let d = parse_domain("points:-1,0;1,0", 2).unwrap();
        assert_eq!(d.removed_points().unwrap().len(), 2);
        assert!(parse_domain("torus", 2).is_err());
        assert_eq!(parse_domain("punctured", 3).unwrap().dimension(), 3);
        assert!(parse_window("0,0,1").is_err());
    }
}
