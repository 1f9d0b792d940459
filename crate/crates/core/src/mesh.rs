//! Placing the pair in mesh, animating it, and checking that the outlines
//! never overlap.
//!
//! Angles in this module are in degrees, matching the frame log.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::geometry::{MeshMode, Point2};
use crate::polygon::signed_separation;
use crate::profile::{GearGeometry, GearProfile};

/// Default number of rotation states checked per tooth period.
pub const DEFAULT_SAMPLES: u32 = 64;

/// How the pinion's starting angle is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhaseConvention {
    /// A pinion gap centre faces the wheel tooth at the pitch point, for any parity.
    #[default]
    Corrected,
    /// `45 + 180 / pinion_teeth`; only meshes when the pinion tooth count is even.
    Legacy,
}

/// Starting angles, in degrees, for a pair meshing along the 45° line.
///
/// The wheel puts a tooth centre on the pitch point. The corrected pinion
/// phase puts a gap centre on the pitch point seen from the pinion centre
/// (225°), reduced into one pinion tooth period.
pub fn mesh_phases(_wheel_teeth: u32, pinion_teeth: u32, convention: PhaseConvention) -> (f64, f64) {
    let half_period = 180.0 / f64::from(pinion_teeth);
    let pinion = match convention {
        PhaseConvention::Corrected => (225.0 + half_period).rem_euclid(2.0 * half_period),
        PhaseConvention::Legacy => 45.0 + half_period,
    };
    (45.0, pinion)
}

/// Rotation of each gear, in degrees, relative to its starting phase.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FrameRotation {
    pub wheel: f64,
    pub pinion: f64,
}

/// `num_frames` evenly spaced states over one tooth period; the last frame
/// stops one step short of the first so a looped animation does not stutter.
/// The pinion turns the opposite way.
pub fn rotation_schedule(wheel_teeth: u32, pinion_teeth: u32, num_frames: u32) -> Vec<FrameRotation> {
    let wheel_step = 360.0 / f64::from(wheel_teeth) / f64::from(num_frames);
    let pinion_step = 360.0 / f64::from(pinion_teeth) / f64::from(num_frames);
    (0..num_frames)
        .map(|i| FrameRotation {
            wheel: wheel_step * f64::from(i),
            // + 0.0 turns the first frame's -0 into 0
            pinion: -(pinion_step * f64::from(i)) + 0.0,
        })
        .collect()
}

/// Absolute placement of both gears for one frame; angles in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairPose {
    pub wheel_angle: f64,
    pub pinion_angle: f64,
    pub pinion_center: Point2,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeshScene {
    /// Sum of the pitch radii, in modules.
    pub center_distance: f64,
    /// Direction of the pinion centre seen from the wheel centre, radians.
    pub placement_angle: f64,
    pub pinion_center: Point2,
    pub wheel_phase: f64,
    pub pinion_phase: f64,
    pub wheel_period: f64,
    pub pinion_period: f64,
    pub frames: Vec<FrameRotation>,
}

impl MeshScene {
    pub fn new(wheel: &GearGeometry, pinion: &GearGeometry, mode: MeshMode, convention: PhaseConvention) -> Self {
        let center_distance = wheel.pitch_radius() + pinion.pitch_radius();
        let (wheel_teeth, pinion_teeth) = (wheel.teeth(), pinion.teeth());
        let wheel_period = 360.0 / f64::from(wheel_teeth);
        let pinion_period = 360.0 / f64::from(pinion_teeth);
        let placement_angle = std::f64::consts::FRAC_PI_4;
        let (pinion_center, (wheel_phase, pinion_phase)) = match mode {
            MeshMode::None => (Point2::new(center_distance, center_distance), (0.0, 0.0)),
            MeshMode::SingleMesh | MeshMode::Animation { .. } => {
                let shift = FRAC_1_SQRT_2 * center_distance;
                (Point2::new(shift, shift), mesh_phases(wheel_teeth, pinion_teeth, convention))
            }
        };
        let frames = match mode {
            MeshMode::Animation { frames } => rotation_schedule(wheel_teeth, pinion_teeth, frames),
            _ => vec![FrameRotation::default()],
        };
        MeshScene {
            center_distance,
            placement_angle,
            pinion_center,
            wheel_phase,
            pinion_phase,
            wheel_period,
            pinion_period,
            frames,
        }
    }

    pub fn pose(&self, frame: FrameRotation) -> PairPose {
        PairPose {
            wheel_angle: (self.wheel_phase + frame.wheel).to_radians(),
            pinion_angle: (self.pinion_phase + frame.pinion).to_radians(),
            pinion_center: self.pinion_center,
        }
    }

    /// Rolling state after `fraction` of one tooth period.
    pub fn rotation_at(&self, fraction: f64) -> FrameRotation {
        FrameRotation { wheel: self.wheel_period * fraction, pinion: -(self.pinion_period * fraction) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferenceReport {
    /// Smallest outline separation over all samples, in modules; negative on overlap.
    pub min_separation: f64,
    pub worst_sample: u32,
    pub worst_rotation: FrameRotation,
}

impl InterferenceReport {
    pub fn passes(&self) -> bool {
        self.min_separation > 0.0
    }
}

/// Sweeps `samples` rolling states across one tooth period, taken at the
/// midpoints of `samples` equal sub-intervals, and reports the worst
/// separation between the two outlines.
pub fn check_interference(
    wheel: &GearProfile,
    pinion: &GearProfile,
    scene: &MeshScene,
    samples: u32,
) -> InterferenceReport {
    let samples = samples.max(1);
    let mut report =
        InterferenceReport { min_separation: f64::INFINITY, worst_sample: 0, worst_rotation: FrameRotation::default() };
    for k in 0..samples {
        let rotation = scene.rotation_at((f64::from(k) + 0.5) / f64::from(samples));
        let separation = pose_separation(wheel, pinion, &scene.pose(rotation));
        if separation < report.min_separation {
            report = InterferenceReport { min_separation: separation, worst_sample: k, worst_rotation: rotation };
        }
    }
    report
}

/// Outline separation for a single placement of the pair.
pub fn pose_separation(wheel: &GearProfile, pinion: &GearProfile, pose: &PairPose) -> f64 {
    let w = wheel.placed(pose.wheel_angle, Point2::ORIGIN);
    let p = pinion.placed(pose.pinion_angle, pose.pinion_center);
    signed_separation(&w, Point2::ORIGIN, &p, pose.pinion_center)
}
