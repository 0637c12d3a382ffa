use metric_balls::cli::{run_with, Report};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("metric-balls").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(args: &[&str]) -> Report {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn num(r: &Report, key: &str) -> f64 {
    r.results[key].as_f64().unwrap_or_else(|| panic!("{key} missing in {}", r.results))
}

#[test]
fn dist_matches_closed_forms() {
    let r = report(&["dist", "--metric", "j", "--x", "1,0", "--y", "-1,0"]);
    assert!((num(&r, "distance") - 3f64.ln()).abs() < 1e-12);
    let r = report(&["dist", "--metric", "qh", "--x", "1,0", "--y", "-1,0"]);
    assert!((num(&r, "distance") - std::f64::consts::PI).abs() < 1e-12);
    assert!(!r.provenance.is_empty());
}

#[test]
fn json_is_deterministic_apart_from_timings() {
    let args = ["constants", "--solve", "lambda"];
    let a = report(&args);
    let b = report(&args);
    assert_eq!(a.without_timings(), b.without_timings());
    assert!((num(&a, "lambda") - 2.971693870713805).abs() < 1e-9);
    let text = serde_json::to_string(&a).unwrap();
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, a);
}

#[test]
fn check_reports_verdicts() {
    let r = report(&["check", "--property", "ctc", "--metric", "qh", "--x", "1,0", "--r", "2.9"]);
    assert_eq!(r.results["holds"], true);
    let r = report(&["check", "--property", "ctc", "--metric", "qh", "--x", "1,0", "--r", "3.0"]);
    assert_eq!(r.results["holds"], false);
    let r = report(&["check", "--property", "ctc", "--metric", "j", "--x", "1,0", "--r", "1.0"]);
    assert_eq!(r.results["holds"], true);
}

#[test]
fn counterexample_is_disconnected() {
    let r = report(&["counterexample", "--r", "1.03", "--resolution", "300"]);
    assert_eq!(r.results["report"]["disconnected"], true);
    assert_eq!(r.results["components"], 2);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["dist", "--metric", "j", "--x", "1,a", "--y", "0,1"][..],
        &["ball", "--metric", "j", "--x", "1,0", "--r", "-1"][..],
        &["ball", "--metric", "j", "--x", "1,0", "--r", "1", "--domain", "torus"][..],
        &["frobnicate"][..],
        &["dist", "--metric", "hyperbolic", "--x", "1,0", "--y", "0,1"][..],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn computation_errors_exit_one_with_a_report() {
    let (code, out, _) = run(&["dist", "--metric", "j", "--x", "0,0", "--y", "1,0"]);
    assert_ne!(code, 0);
    if code == 1 {
        let r: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(r.results["error"]["class"], "computation");
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["dist", "ball", "check", "constants", "counterexample", "sweep", "figure"] {
        assert!(out.contains(sub), "{sub}");
    }
}

#[test]
fn svg_output_is_deterministic() {
    let args = ["ball", "--metric", "j", "--x", "1,0", "--r", "0.8", "--out", "svg"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    assert!(a.starts_with("<svg") || a.starts_with("<?xml") || a.starts_with("<!--"));
}

#[test]
fn figure_writes_a_file() {
    let path = std::env::temp_dir().join(format!("metric-balls-cli-test-{}.svg", std::process::id()));
    let p = path.to_str().unwrap();
    let r = report(&["figure", "--preset", "fig1-slit", "--out", p, "--resolution", "200"]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.matches("<path data-radius").count(), 3);
    assert_eq!(r.results["bytes"].as_u64().unwrap() as usize, text.len());
    std::fs::remove_file(&path).unwrap();
}
