//! OpenSCAD source: each outline as an extruded polygon.

use std::fmt::Write as _;

use crate::geometry::Point2;
use crate::mesh::mesh_phases;
use crate::pair::GearPair;
use crate::profile::GearProfile;

/// Extrusion height used when none is given, in output units.
pub const DEFAULT_EXTRUDE_HEIGHT: f64 = 5.0;

/// `linear_extrude(height=H) polygon(points=[[x,y],...]);` with coordinates
/// scaled from modules to output units. Numbers keep full precision.
pub fn polygon_statement(points: &[Point2], scale: f64, extrude_height: f64) -> String {
    let mut out = format!("linear_extrude(height={extrude_height}) polygon(points=[");
    for (i, p) in points.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "[{},{}]", p.x * scale, p.y * scale).expect("writing to a String");
    }
    out.push_str("]);");
    out
}

/// One gear, centred on the origin.
pub fn write_openscad(profile: &GearProfile, module: f64, extrude_height: f64) -> String {
    format!(
        "// {}-tooth cycloidal gear, module {module}\n{}\n",
        profile.teeth(),
        polygon_statement(&profile.points, module, extrude_height)
    )
}

/// Both gears in mesh: the wheel at the origin, the pinion on the +x axis
/// at the centre distance, each turned to its meshing phase.
pub fn write_openscad_pair(pair: &GearPair, extrude_height: f64) -> String {
    let module = pair.spec.module;
    let (wheel_teeth, pinion_teeth) = (pair.wheel.geometry.teeth(), pair.pinion.geometry.teeth());
    let (wheel_phase, pinion_phase) = mesh_phases(wheel_teeth, pinion_teeth, pair.options.phases);
    // the meshing phases assume the pinion sits at 45°; the pair file uses 0°
    let (wheel_angle, pinion_angle) = (wheel_phase - 45.0, pinion_phase - 45.0);
    let distance = pair.scene.center_distance * module;
    let mut out = format!("// {wheel_teeth}/{pinion_teeth} cycloidal pair, module {module}\n");
    writeln!(out, "rotate({wheel_angle}) {}", polygon_statement(&pair.wheel.profile.points, module, extrude_height))
        .expect("writing to a String");
    writeln!(
        out,
        "translate([{distance},0]) rotate({pinion_angle}) {}",
        polygon_statement(&pair.pinion.profile.points, module, extrude_height)
    )
    .expect("writing to a String");
    out
}
