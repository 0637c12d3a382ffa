//! Driving the command line from code and reading its JSON reports.

use metric_balls::cli::{run_with, Report};

fn report(args: &[&str]) -> (i32, Option<Report>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("metric-balls").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, serde_json::from_slice(&out).ok())
}

pub fn run_example() -> metric_balls::Result<()> {
    for args in [
        &["dist", "--metric", "j", "--domain", "punctured", "--x", "1,0", "--y", "3,0"][..],
        &["dist", "--metric", "qh", "--domain", "points:-1,0;1,0", "--x", "0,1", "--y", "0,-1", "--oracle", "--resolution", "120"],
        &["constants", "--solve", "lambda", "--tol", "1e-10"],
        &["check", "--property", "ctc", "--metric", "j", "--x", "1,0", "--r", "1.0"],
        &["ball", "--metric", "j", "--x", "1,0", "--r", "-0.5"],
    ] {
        let (code, rep) = report(args);
        let results = rep.map(|r| r.results).unwrap_or_default();
        println!("{} -> exit {code}: {results}", args.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("command_line example");
}
