//! Writes the pair in mesh as an SVG drawing.
//!
//!     cargo run --example single_mesh_svg -- out.svg

use cycloidal::export::write_svg;
use cycloidal::mesh::FrameRotation;
use cycloidal::{BuildOptions, GearPair, GearPairSpec};

fn main() -> cycloidal::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "wheel_pinion_single_mesh.svg".into());
    let pair = GearPair::design(&GearPairSpec::new(16, 6), BuildOptions::default())?;
    let svg = write_svg(&pair, FrameRotation::default())?;
    std::fs::write(&path, &svg)?;
    println!("wrote {path}: {} lines, {} bytes", svg.matches("<line").count(), svg.len());
    Ok(())
}
