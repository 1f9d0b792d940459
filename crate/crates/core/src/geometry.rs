//! Gear parameters and exact evaluation of the epicycloidal addendum flank.
//!
//! All lengths here are in modules: a gear with `n` teeth has a pitch circle
//! radius of `n / 2`. The output scale (`GearPairSpec::module`) is only
//! applied by the exporters.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{GearError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn polar(radius: f64, angle: f64) -> Self {
        Point2::new(radius * angle.cos(), radius * angle.sin())
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn distance(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    /// Counterclockwise rotation about the origin.
    pub fn rotated(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Point2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Mirror about the x axis.
    pub fn flipped(self) -> Self {
        Point2::new(self.x, -self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, rhs: f64) -> Point2 {
        Point2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// What to draw besides the two gears themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshMode {
    /// Wheel and pinion drawn side by side, unmeshed.
    None,
    /// One frame of the pair in mesh.
    SingleMesh,
    /// A looping sequence of frames covering one tooth period.
    Animation { frames: u32 },
}

/// User inputs for one wheel/pinion pair.
#[derive(Debug, Clone, PartialEq)]
pub struct GearPairSpec {
    pub wheel_teeth: u32,
    pub pinion_teeth: u32,
    /// Output units per module.
    pub module: f64,
    /// Radial clearance below the dedendum base circle, in modules.
    pub clearance: f64,
    /// Maximum chord length of the flattened flanks, in modules.
    pub epsilon: f64,
    pub clip_dedenda: bool,
    pub svg_width: u32,
    pub svg_height: u32,
    pub mode: MeshMode,
}

impl GearPairSpec {
    pub const MIN_TEETH: u32 = 3;
    pub const MIN_SVG_SIZE: u32 = 16;

    /// Pair with the default module, clearance, tolerance and a 750x750 single-mesh drawing.
    pub fn new(wheel_teeth: u32, pinion_teeth: u32) -> Self {
        GearPairSpec {
            wheel_teeth,
            pinion_teeth,
            module: 1.0,
            clearance: 0.5,
            epsilon: 0.05,
            clip_dedenda: true,
            svg_width: 750,
            svg_height: 750,
            mode: MeshMode::SingleMesh,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.pinion_teeth > self.wheel_teeth {
            return Err(GearError::PinionLargerThanWheel);
        }
        if self.pinion_teeth < Self::MIN_TEETH {
            return Err(GearError::TooFewTeeth(self.pinion_teeth));
        }
        if !(self.epsilon > 0.0 && self.epsilon.is_finite()) {
            return Err(GearError::InvalidSpec(format!("epsilon must be positive (got {})", self.epsilon)));
        }
        if !(self.clearance >= 0.0 && self.clearance.is_finite()) {
            return Err(GearError::InvalidSpec(format!("clearance must be non-negative (got {})", self.clearance)));
        }
        if !(self.module > 0.0 && self.module.is_finite()) {
            return Err(GearError::InvalidSpec(format!("module must be positive (got {})", self.module)));
        }
        if self.svg_width < Self::MIN_SVG_SIZE || self.svg_height < Self::MIN_SVG_SIZE {
            return Err(GearError::InvalidSpec(format!(
                "svg dimensions must be at least {} pixels (got {}x{})",
                Self::MIN_SVG_SIZE,
                self.svg_width,
                self.svg_height
            )));
        }
        if let MeshMode::Animation { frames } = self.mode {
            if frames < 2 {
                return Err(GearError::InvalidSpec(format!("an animation needs at least 2 frames (got {frames})")));
            }
        }
        Ok(())
    }
}

/// Per-gear quantities that follow directly from the two tooth counts,
/// before the tooth tip has been solved for.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GearBlank {
    pub teeth: u32,
    pub pitch_radius: f64,
    /// Radius of the circle rolled on this gear's pitch circle to trace the addendum.
    pub generating_radius: f64,
    /// `generating_radius / pitch_radius`.
    pub radius_ratio: f64,
    /// Half the angular width of a tooth at the pitch circle, `2π / (4 · teeth)`.
    pub tip_angle: f64,
    /// `tan(tip_angle)`.
    pub tip_gradient: f64,
}

impl GearBlank {
    fn new(teeth: u32, mate_teeth: u32) -> Result<Self> {
        let pitch_radius = f64::from(teeth) / 2.0;
        let generating_radius = f64::from(mate_teeth) / 4.0;
        let tip_angle = 2.0 * PI / (f64::from(teeth) * 4.0);
        let tip_gradient = tip_angle.tan();
        if !(tip_gradient < 1.0) {
            return Err(GearError::TipGradientTooLarge(tip_gradient));
        }
        Ok(GearBlank {
            teeth,
            pitch_radius,
            generating_radius,
            radius_ratio: generating_radius / pitch_radius,
            tip_angle,
            tip_gradient,
        })
    }

    /// Angle between neighbouring teeth.
    pub fn tooth_period(&self) -> f64 {
        2.0 * PI / f64::from(self.teeth)
    }

    /// Generating-circle angle for one full revolution of the generating circle, capped at 2π.
    pub fn scan_limit(&self) -> f64 {
        (2.0 * PI * self.radius_ratio).min(2.0 * PI)
    }
}

/// Pitch and generating circles for the wheel and pinion.
///
/// Each gear's addendum generating circle has half the diameter of the
/// mating gear's pitch circle, so the mating dedenda are radial lines.
pub fn derive_geometry(spec: &GearPairSpec) -> Result<(GearBlank, GearBlank)> {
    if spec.pinion_teeth > spec.wheel_teeth {
        return Err(GearError::PinionLargerThanWheel);
    }
    if spec.pinion_teeth == 0 {
        return Err(GearError::TooFewTeeth(0));
    }
    let wheel = GearBlank::new(spec.wheel_teeth, spec.pinion_teeth)?;
    let pinion = GearBlank::new(spec.pinion_teeth, spec.wheel_teeth)?;
    spec.validate()?;
    Ok((wheel, pinion))
}

/// Point traced on a unit pitch circle by a generating circle of radius `r`
/// after its centre has rolled through angle `theta`.
pub fn epicycloid_point(r: f64, theta: f64) -> Point2 {
    let phi = theta / r;
    Point2::new((1.0 + r) * theta.cos() - r * (theta + phi).cos(), (1.0 + r) * theta.sin() - r * (theta + phi).sin())
}

/// Derivative of [`epicycloid_point`] with respect to `theta`.
pub fn epicycloid_tangent(r: f64, theta: f64) -> Point2 {
    let outer = theta + theta / r;
    Point2::new((1.0 + r) * (outer.sin() - theta.sin()), (1.0 + r) * (theta.cos() - outer.cos()))
}

/// Distance from the gear centre to the flank point at generating angle `theta`.
pub fn tip_height(pitch_radius: f64, r: f64, theta: f64) -> f64 {
    pitch_radius * epicycloid_point(r, theta).norm()
}

/// Flank point scaled by the pitch radius and placed on the gear:
/// rotate by `rot1`, optionally mirror about the x axis, then rotate by `rot2`.
pub fn placed_tooth_point(pitch_radius: f64, r: f64, theta: f64, rot1: f64, flip: bool, rot2: f64) -> Point2 {
    let first = epicycloid_point(r, theta).rotated(rot1);
    let mirrored = if flip { first.flipped() } else { first };
    mirrored.rotated(rot2) * pitch_radius
}
