//! One tooth period of rolling, as numbered SVG frames plus a conversion
//! script and a frame log.

use std::fmt::Write as _;

use crate::error::Result;
use crate::pair::GearPair;

use super::svg::write_svg;

pub const CONVERT_SCRIPT: &str = "convert_script";
pub const FRAME_LOG: &str = "frame_log.txt";

pub fn frame_file_name(frame: usize) -> String {
    format!("frame{frame:05}.svg")
}

/// ImageMagick commands turning every frame into a PNG. Written, never run.
pub fn convert_script(num_frames: usize) -> String {
    let mut out = String::from("#!/bin/bash\n");
    for frame in 1..=num_frames {
        writeln!(out, "echo converting frame {frame} from svg to png").expect("writing to a String");
        writeln!(out, "convert frame{frame:05}.svg frame{frame:05}.png").expect("writing to a String");
    }
    out
}

/// Pair description followed by the rotation applied in each frame.
pub fn frame_log(pair: &GearPair) -> String {
    let spec = &pair.spec;
    let scene = &pair.scene;
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("wheel teeth: {}", spec.wheel_teeth));
    line(format!("pinion teeth: {}", spec.pinion_teeth));
    line(format!("svg width: {}", spec.svg_width));
    line(format!("svg height: {}", spec.svg_height));
    line(format!("num_frames: {}", scene.frames.len()));
    line(format!("wheel tooth period: {:.5} degrees", scene.wheel_period));
    line(format!("pinion tooth period: {:.5} degrees", scene.pinion_period));
    for (i, f) in scene.frames.iter().enumerate() {
        line(format!("frame {}: wheel rotation: {:.5} pinion rotation: {:.5}", i + 1, f.wheel, f.pinion));
    }
    out
}

/// Every file of the animation, named relative to the output directory.
pub fn animation_files(pair: &GearPair) -> Result<Vec<(String, String)>> {
    let mut files = Vec::with_capacity(pair.scene.frames.len() + 2);
    for (i, &frame) in pair.scene.frames.iter().enumerate() {
        files.push((frame_file_name(i + 1), write_svg(pair, frame)?));
    }
    files.push((CONVERT_SCRIPT.to_string(), convert_script(pair.scene.frames.len())));
    files.push((FRAME_LOG.to_string(), frame_log(pair)));
    Ok(files)
}
