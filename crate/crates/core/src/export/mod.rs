//! Writers for SVG drawings, OpenSCAD source and animation frames.
//!
//! Each writer builds its text in memory; [`write_artifacts`] puts the
//! requested set on disk.

pub mod animation;
pub mod scad;
pub mod svg;

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::geometry::MeshMode;
use crate::mesh::FrameRotation;
use crate::pair::GearPair;

pub use animation::{convert_script, frame_log};
pub use scad::{write_openscad, write_openscad_pair, DEFAULT_EXTRUDE_HEIGHT};
pub use svg::{write_svg, SvgViewport};

pub const SINGLE_MESH_SVG: &str = "wheel_pinion_single_mesh.svg";
pub const NO_MESH_SVG: &str = "wheel_pinion_nomesh.svg";
pub const WHEEL_SCAD: &str = "wheel.scad";
pub const PINION_SCAD: &str = "pinion.scad";
pub const PAIR_SCAD: &str = "wheel_pinion.scad";

/// Output file kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Formats {
    pub svg: bool,
    pub scad: bool,
}

impl Default for Formats {
    fn default() -> Self {
        Formats { svg: true, scad: true }
    }
}

/// File names and contents for everything the pair would write.
pub fn render_artifacts(pair: &GearPair, formats: Formats, extrude_height: f64) -> Result<Vec<(String, String)>> {
    let mut files = Vec::new();
    if formats.svg {
        match pair.spec.mode {
            MeshMode::None => files.push((NO_MESH_SVG.to_string(), write_svg(pair, FrameRotation::default())?)),
            MeshMode::SingleMesh => {
                files.push((SINGLE_MESH_SVG.to_string(), write_svg(pair, FrameRotation::default())?))
            }
            MeshMode::Animation { .. } => files.extend(animation::animation_files(pair)?),
        }
    }
    if formats.scad {
        let module = pair.spec.module;
        files.push((WHEEL_SCAD.to_string(), write_openscad(&pair.wheel.profile, module, extrude_height)));
        files.push((PINION_SCAD.to_string(), write_openscad(&pair.pinion.profile, module, extrude_height)));
        files.push((PAIR_SCAD.to_string(), write_openscad_pair(pair, extrude_height)));
    }
    Ok(files)
}

/// Writes the requested artifacts into `out_dir`, creating it if needed.
pub fn write_artifacts(pair: &GearPair, out_dir: &Path, formats: Formats, extrude_height: f64) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();
    for (name, text) in render_artifacts(pair, formats, extrude_height)? {
        let path = out_dir.join(name);
        fs::write(&path, text)?;
        written.push(path);
    }
    Ok(written)
}
