//! Renders one tooth period of rolling as numbered SVG frames, with a
//! conversion script and a frame log.
//!
//!     cargo run --example animation_frames -- out_dir [frames]

use std::path::PathBuf;

use cycloidal::export::{write_artifacts, Formats};
use cycloidal::{BuildOptions, GearPair, GearPairSpec, MeshMode};

fn main() -> cycloidal::Result<()> {
    let mut args = std::env::args().skip(1);
    let dir: PathBuf = args.next().unwrap_or_else(|| "frames".into()).into();
    let frames = args.next().map_or(24, |f| f.parse().expect("frame count"));
    let mut spec = GearPairSpec::new(20, 9);
    spec.mode = MeshMode::Animation { frames };
    spec.svg_width = 500;
    spec.svg_height = 500;
    let pair = GearPair::design(&spec, BuildOptions::default())?;
    let written = write_artifacts(&pair, &dir, Formats { svg: true, scad: false }, 1.0)?;
    println!("wrote {} files to {}", written.len(), dir.display());
    print!("{}", std::fs::read_to_string(dir.join("frame_log.txt"))?.lines().take(7).collect::<Vec<_>>().join("\n"));
    println!();
    Ok(())
}
