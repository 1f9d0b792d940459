//! Closed gear outlines built from the flattened addendum flank.
//!
//! Each tooth is the flank, placed so the tip sits on the tooth's centre
//! ray, followed by its mirror image. Radial dedendum lines drop from the
//! two pitch-circle cusps to the clearance circle, and an arc along the
//! clearance circle joins consecutive teeth.

use crate::error::{GearError, Result};
use crate::geometry::{placed_tooth_point, tip_height, GearBlank, Point2};
use crate::tessellate::{Flank, FlankPath};
use crate::tip::{solve_tip_angle, ScanStep, TipSolution};

/// A gear whose tooth tip has been located.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolvedGear {
    pub blank: GearBlank,
    pub tip: TipSolution,
    pub tip_height: f64,
}

impl SolvedGear {
    pub fn solve(blank: GearBlank, scan: ScanStep, name: &'static str) -> Result<Self> {
        let tip = solve_tip_angle(&blank, scan, name)?;
        let tip_height = tip_height(blank.pitch_radius, blank.radius_ratio, tip.angle);
        Ok(SolvedGear { blank, tip, tip_height })
    }
}

/// Complete per-gear geometry, in modules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GearGeometry {
    pub blank: GearBlank,
    pub tip: TipSolution,
    pub tip_height: f64,
    /// Depth of the dedendum below the pitch circle: how far the mating tips reach.
    pub dedendum_depth: f64,
    /// Circle just touched by the mating gear's tips.
    pub base_radius: f64,
    /// Base circle less the clearance; the root of every tooth gap lies on it.
    pub clearance_radius: f64,
    /// Tip height plus one module, used to frame drawings.
    pub bound_radius: f64,
}

impl GearGeometry {
    pub fn teeth(&self) -> u32 {
        self.blank.teeth
    }

    pub fn pitch_radius(&self) -> f64 {
        self.blank.pitch_radius
    }

    pub fn tip_generating_angle(&self) -> f64 {
        self.tip.angle
    }

    pub fn flank(&self) -> Flank {
        Flank::new(self.blank.pitch_radius, self.blank.radius_ratio, self.tip.angle)
    }
}

/// Each gear's dedendum is as deep as the mating addendum is tall.
pub fn compute_dedendum_depths(
    wheel: &SolvedGear,
    pinion: &SolvedGear,
    clearance: f64,
) -> Result<(GearGeometry, GearGeometry)> {
    let finish = |gear: &SolvedGear, mate: &SolvedGear| {
        let dedendum_depth = mate.tip_height - mate.blank.pitch_radius;
        let base_radius = gear.blank.pitch_radius - dedendum_depth;
        let clearance_radius = base_radius - clearance;
        if !(clearance_radius > 0.0) {
            return Err(GearError::NegativeClearanceRadius(clearance_radius));
        }
        Ok(GearGeometry {
            blank: gear.blank,
            tip: gear.tip,
            tip_height: gear.tip_height,
            dedendum_depth,
            base_radius,
            clearance_radius,
            bound_radius: gear.tip_height + 1.0,
        })
    };
    Ok((finish(wheel, pinion)?, finish(pinion, wheel)?))
}

/// One tooth centred on the ray at `tooth_angle`: the rising flank from the
/// cusp at `tooth_angle − γ` to the tip, then its mirror image back down to
/// the cusp at `tooth_angle + γ`. The tip is emitted once.
pub fn build_tooth(geometry: &GearGeometry, flank: &FlankPath, tooth_angle: f64) -> Vec<Point2> {
    let b = &geometry.blank;
    let place = |theta: f64, flip: bool| {
        placed_tooth_point(b.pitch_radius, b.radius_ratio, theta, -b.tip_angle, flip, tooth_angle)
    };
    let rising = flank.angles.iter().map(|&t| place(t, false));
    let falling = flank.angles.iter().rev().skip(1).map(|&t| place(t, true));
    rising.chain(falling).collect()
}

/// A closed, counterclockwise gear outline centred on the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct GearProfile {
    /// Outline vertices; the closing edge from the last point back to the first is implicit.
    pub points: Vec<Point2>,
    pub geometry: GearGeometry,
    /// Number of consecutive vertices belonging to each tooth period.
    pub points_per_tooth: usize,
}

impl GearProfile {
    pub fn teeth(&self) -> u32 {
        self.geometry.teeth()
    }

    /// Closed edge list, including the edge back to the first vertex.
    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.points.len();
        (0..n).map(move |i| (self.points[i], self.points[(i + 1) % n]))
    }

    /// Outline rotated by `angle` about its centre and moved to `center`.
    pub fn placed(&self, angle: f64, center: Point2) -> Vec<Point2> {
        self.points.iter().map(|p| p.rotated(angle) + center).collect()
    }

    /// Shoelace area; positive for counterclockwise outlines.
    pub fn signed_area(&self) -> f64 {
        0.5 * self.edges().map(|(a, b)| a.cross(b)).sum::<f64>()
    }
}

/// Full outline: for every tooth, a radial dedendum line up from the
/// clearance circle, the tooth itself, a radial line back down, then a root
/// arc on the clearance circle with chords no longer than `epsilon`.
pub fn build_profile(geometry: &GearGeometry, flank: &FlankPath, epsilon: f64) -> Result<GearProfile> {
    let radius = geometry.clearance_radius;
    if !(radius > 0.0) {
        return Err(GearError::NegativeClearanceRadius(radius));
    }
    let teeth = geometry.teeth();
    let gamma = geometry.blank.tip_angle;
    let period = geometry.blank.tooth_period();
    let root_span = period - 2.0 * gamma;
    let max_step = 2.0 * (epsilon / (2.0 * radius)).min(1.0).asin();
    let root_chords = (root_span / max_step).ceil().max(1.0) as usize;

    let mut points = Vec::new();
    let mut points_per_tooth = 0;
    for k in 0..teeth {
        let start = points.len();
        let centre = period * f64::from(k);
        points.push(Point2::polar(radius, centre - gamma));
        points.extend(build_tooth(geometry, flank, centre));
        let exit = centre + gamma;
        points.push(Point2::polar(radius, exit));
        points.extend(
            (1..root_chords).map(|j| Point2::polar(radius, exit + root_span * (j as f64 / root_chords as f64))),
        );
        points_per_tooth = points.len() - start;
    }
    debug_assert!(points.iter().all(|p| p.is_finite()));
    Ok(GearProfile { points, geometry: *geometry, points_per_tooth })
}
