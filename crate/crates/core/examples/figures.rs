//! Nested ball boundaries written as SVG.

use metric_balls::cli::{emit_svg, preset_spec, Preset};

pub fn run_example() -> metric_balls::Result<()> {
    let dir = std::env::temp_dir().join("metric-balls-figures");
    std::fs::create_dir_all(&dir).expect("temp dir");
    for (preset, name) in [
        (Preset::Fig2, "qh_nested.svg"),
        (Preset::Fig1Punctured, "j_punctured.svg"),
        (Preset::Fig1Slit, "j_slit.svg"),
    ] {
        let spec = preset_spec(preset, Some(0.05), None)?;
        let svg = emit_svg(&spec)?;
        let path = dir.join(name);
        std::fs::write(&path, &svg).expect("write svg");
        println!("{} ({} bytes, radii {:?})", path.display(), svg.len(), spec.radii);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("figures example");
}
