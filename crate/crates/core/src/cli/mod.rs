//! The `metric-balls` command line: one JSON [`Report`] per invocation on
//! standard output, SVG for figures.
//!
//! Exit codes: 0 on success, 2 on usage errors (unknown flags, malformed
//! points, non-positive radii), 1 on computation errors. Failed runs still
//! print a report whose `results.error` describes the failure.

mod args;
mod commands;
mod figure;

use std::collections::BTreeMap;
use std::io::Write;

use clap::Parser;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use args::{parse_domain, parse_point, parse_reals, parse_window, Cli, Command, Preset};
pub use figure::{emit_svg, figure_curves, preset_spec, FigureSpec, Style, DEFAULT_R0};

use crate::error::Error;

/// The JSON surface of every subcommand.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    /// Formulas and algorithms behind the results.
    pub provenance: Vec<String>,
    /// Tolerance of each numeric result, keyed like `results`.
    pub tolerances: BTreeMap<String, f64>,
    /// Wall time per step in milliseconds.
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Self {
            command: command.into(),
            inputs,
            results: Value::Object(Default::default()),
            ..Default::default()
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        if let Value::Object(map) = &mut self.results {
            map.insert(key.into(), v);
        }
    }

    pub fn tolerance(&mut self, key: &str, tol: f64) {
        self.tolerances.insert(key.into(), tol);
    }

    pub fn cite(&mut self, formula: &str) {
        self.provenance.push(formula.into());
    }

    /// Runs `f`, recording its wall time under `step`.
    pub fn timed<T>(&mut self, step: &str, f: impl FnOnce() -> T) -> T {
        let t = std::time::Instant::now();
        let out = f();
        self.timings.insert(step.into(), t.elapsed().as_secs_f64() * 1e3);
        out
    }

    /// The report without timings, for determinism comparisons.
    pub fn without_timings(&self) -> Report {
        Report {
            timings: BTreeMap::new(),
            ..self.clone()
        }
    }
}

/// What a subcommand produced.
pub(crate) enum Output {
    Json(Report),
    Svg(String),
}

/// Failure of a subcommand and whether it was the caller's fault.
pub(crate) enum Failure {
    Usage(Error),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

fn error_value(e: &Error, class: &str) -> Value {
    serde_json::json!({
        "class": class,
        "kind": format!("{e:?}").split(|c: char| !c.is_alphanumeric()).next().unwrap_or(""),
        "message": e.to_string(),
    })
}

/// Parses `argv` (program name first) and runs the subcommand, writing
/// the report or SVG to standard output.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let name = commands::name(&cli.command);
    let inputs = commands::inputs(&cli.command);
    let (output, code) = match commands::execute(&cli.command) {
        Ok(o) => (o, 0),
        Err(f) => {
            let (e, class, code) = match f {
                Failure::Usage(e) => (e, "usage", 2),
                Failure::Compute(e) => (e, "computation", 1),
            };
            let mut report = Report::new(name, inputs);
            report.set("error", error_value(&e, class));
            let _ = writeln!(err, "error: {e}");
            (Output::Json(report), code)
        }
    };
    let written = match output {
        Output::Json(report) => serde_json::to_string_pretty(&report)
            .map_err(std::io::Error::other)
            .and_then(|s| writeln!(out, "{s}")),
        Output::Svg(svg) => write!(out, "{svg}"),
    };
    if written.is_err() {
        return 1;
    }
    code
}
