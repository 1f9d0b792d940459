//! Writes printable OpenSCAD polygons for a 30/8 pair at module 1.5 mm.
//!
//!     cargo run --example openscad_export -- out_dir

use std::path::PathBuf;

use cycloidal::export::{write_artifacts, Formats};
use cycloidal::{BuildOptions, GearPair, GearPairSpec};

fn main() -> cycloidal::Result<()> {
    let dir: PathBuf = std::env::args().nth(1).unwrap_or_else(|| "scad_out".into()).into();
    let mut spec = GearPairSpec::new(30, 8);
    spec.module = 1.5;
    spec.epsilon = 0.02;
    let pair = GearPair::design(&spec, BuildOptions::default())?;
    for path in write_artifacts(&pair, &dir, Formats { svg: false, scad: true }, 4.0)? {
        println!("wrote {}", path.display());
    }
    Ok(())
}
