use std::fs;

use cycloidal::export::{
    render_artifacts, write_artifacts, write_openscad, write_svg, Formats, SvgViewport, PAIR_SCAD,
};
use cycloidal::mesh::FrameRotation;
use cycloidal::{BuildOptions, GearPair, GearPairSpec, MeshMode};

fn pair(spec: GearPairSpec) -> GearPair {
    GearPair::design(&spec, BuildOptions::default()).unwrap()
}

fn numbers(s: &str) -> Vec<f64> {
    s.split(|c: char| !(c.is_ascii_digit() || c == '.' || c == '-' || c == 'e'))
        .filter(|t| !t.is_empty() && *t != "-" && *t != "e")
        .map(|t| t.parse().unwrap())
        .collect()
}

fn scad_points(text: &str) -> Vec<(f64, f64)> {
    let body = &text[text.find("points=[").unwrap() + 8..text.find("]);").unwrap()];
    let values = numbers(body);
    values.chunks(2).map(|c| (c[0], c[1])).collect()
}

#[test]
fn single_mesh_svg_is_well_formed_and_in_view() {
    let pair = pair(GearPairSpec::new(16, 6));
    let svg = write_svg(&pair, FrameRotation::default()).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    assert_eq!(root.attribute("width"), Some("750"));
    let circles: Vec<_> = root.children().filter(|n| n.has_tag_name("circle")).collect();
    assert_eq!(circles.len(), 4);
    assert_eq!(circles[0].attribute("stroke"), Some("red"));
    assert_eq!(circles[1].attribute("stroke"), Some("blue"));
    let lines = root.children().filter(|n| n.has_tag_name("line")).count();
    assert_eq!(lines, pair.wheel.profile.points.len() + pair.pinion.profile.points.len());
    for node in root.children().filter(|n| n.is_element()) {
        for (attr, limit) in [("x1", 750), ("x2", 750), ("cx", 750), ("y1", 750), ("y2", 750), ("cy", 750)] {
            if let Some(v) = node.attribute(attr) {
                let v: i64 = v.parse().unwrap();
                assert!((-2..=limit + 2).contains(&v), "{attr}={v}");
            }
        }
    }
}

#[test]
fn unclipped_svg_adds_centre_lines() {
    let mut spec = GearPairSpec::new(16, 6);
    let clipped = write_svg(&pair(spec.clone()), FrameRotation::default()).unwrap();
    spec.clip_dedenda = false;
    let unclipped = write_svg(&pair(spec), FrameRotation::default()).unwrap();
    let count = |s: &str| s.matches("<line").count();
    assert_eq!(count(&unclipped), count(&clipped) + 2 * (16 + 6));
    assert!(unclipped.contains("x1=\"329\" y1=\"421\""));
}

#[test]
fn non_square_canvas_uses_the_smaller_scale() {
    let mut spec = GearPairSpec::new(16, 6);
    spec.svg_width = 400;
    let pair = pair(spec);
    let v = SvgViewport::for_pair(&pair);
    assert_eq!(v.scale_factor, v.horizontal_scale);
    assert!(v.scale_factor < v.vertical_scale);
}

#[test]
fn openscad_point_count_and_module_scaling() {
    let mut spec = GearPairSpec::new(16, 6);
    spec.module = 2.0;
    let pair = pair(spec);
    let text = write_openscad(&pair.wheel.profile, 2.0, 4.0);
    assert!(text.contains("linear_extrude(height=4) polygon(points=[["));
    let pts = scad_points(&text);
    assert_eq!(pts.len(), pair.wheel.profile.points.len());
    for (&(x, y), p) in pts.iter().zip(&pair.wheel.profile.points) {
        assert_eq!(x, 2.0 * p.x);
        assert_eq!(y, 2.0 * p.y);
    }
}

#[test]
fn pair_scad_places_pinion_at_centre_distance() {
    let pair = pair(GearPairSpec::new(16, 6));
    let files = render_artifacts(&pair, Formats { svg: false, scad: true }, 5.0).unwrap();
    let (_, text) = files.iter().find(|(name, _)| name == PAIR_SCAD).unwrap();
    assert_eq!(text.matches("linear_extrude").count(), 2);
    assert!(text.contains("translate([11,0])"));
}

#[test]
fn animation_files() {
    let mut spec = GearPairSpec::new(16, 6);
    spec.mode = MeshMode::Animation { frames: 5 };
    let animated = pair(spec);
    let dir = tempfile::tempdir().unwrap();
    let written = write_artifacts(&animated, dir.path(), Formats { svg: true, scad: false }, 5.0).unwrap();
    assert_eq!(written.len(), 7);
    for i in 1..=5 {
        assert!(dir.path().join(format!("frame{i:05}.svg")).exists());
    }
    let script = fs::read_to_string(dir.path().join("convert_script")).unwrap();
    assert!(script.starts_with("#!/bin/bash\n"));
    assert_eq!(script.lines().filter(|l| l.starts_with("convert ")).count(), 5);
    let log = fs::read_to_string(dir.path().join("frame_log.txt")).unwrap();
    assert!(log.contains("wheel tooth period: 22.50000 degrees\n"));
    assert!(log.contains("pinion tooth period: 60.00000 degrees\n"));
    assert!(log.contains("frame 2: wheel rotation: 4.50000 pinion rotation: -12.00000\n"));
    assert_eq!(log.lines().filter(|l| l.starts_with("frame ")).count(), 5);

    // the first frame is the single-mesh drawing
    let single = write_svg(&pair(GearPairSpec::new(16, 6)), FrameRotation::default()).unwrap();
    assert_eq!(fs::read_to_string(dir.path().join("frame00001.svg")).unwrap(), single);
}
