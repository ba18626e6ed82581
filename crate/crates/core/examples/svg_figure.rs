//! Writes an SVG drawing of the weighted polar decomposition of a triangle.
//!
//!     cargo run --example svg_figure -- triangle.svg

use weighted_polar::cli::render_svg;
use weighted_polar::exactmath::int;
use weighted_polar::polarize::find_polarizing;
use weighted_polar::polytope::builtin;
use weighted_polar::weights::WeightParam;

fn main() -> weighted_polar::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "decomposition.svg".into());
    let p = builtin("simplex:2,2")?;
    let xi = find_polarizing(&p, 2);
    let doc = render_svg(&p, &xi, &WeightParam::new(int(1))?)?;
    std::fs::write(&path, &doc).map_err(|e| weighted_polar::Error::Io(e.to_string()))?;
    println!("wrote {path}: {} cones, {} bytes", p.vertices().len(), doc.len());
    Ok(())
}
