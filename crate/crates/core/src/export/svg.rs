//! SVG drawings of the pair, one `<line>` per outline edge.
//!
//! Pixel coordinates are floored, not rounded, and the y axis is flipped so
//! the drawing keeps the mathematical orientation.

use std::fmt::Write as _;

use crate::error::{GearError, Result};
use crate::geometry::Point2;
use crate::mesh::{FrameRotation, PairPose};
use crate::pair::{Gear, GearPair};

/// Mapping from module units to SVG pixels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgViewport {
    pub width: u32,
    pub height: u32,
    pub leftmost_x: f64,
    pub bottommost_y: f64,
    pub rightmost_x: f64,
    pub topmost_y: f64,
    pub vertical_scale: f64,
    pub horizontal_scale: f64,
    /// Pixels per module: the smaller of the two axis scales.
    pub scale_factor: f64,
}

impl SvgViewport {
    /// Box spanning the wheel's bound circle at the origin and the pinion's
    /// bound circle at `pinion_center`.
    pub fn new(wheel_bound: f64, pinion_bound: f64, pinion_center: Point2, width: u32, height: u32) -> Self {
        let leftmost_x = -wheel_bound;
        let bottommost_y = -wheel_bound;
        // a very small pinion would otherwise leave the wheel hanging off the right and top edges
        let rightmost_x = (pinion_bound + pinion_center.x).max(wheel_bound);
        let topmost_y = (pinion_bound + pinion_center.y).max(wheel_bound);
        let vertical_scale = f64::from(height) / (topmost_y - bottommost_y);
        let horizontal_scale = f64::from(width) / (rightmost_x - leftmost_x);
        SvgViewport {
            width,
            height,
            leftmost_x,
            bottommost_y,
            rightmost_x,
            topmost_y,
            vertical_scale,
            horizontal_scale,
            scale_factor: vertical_scale.min(horizontal_scale),
        }
    }

    pub fn for_pair(pair: &GearPair) -> Self {
        SvgViewport::new(
            pair.wheel.geometry.bound_radius,
            pair.pinion.geometry.bound_radius,
            pair.scene.pinion_center,
            pair.spec.svg_width,
            pair.spec.svg_height,
        )
    }

    pub fn unscaled_width(&self) -> f64 {
        self.rightmost_x - self.leftmost_x
    }

    pub fn unscaled_height(&self) -> f64 {
        self.topmost_y - self.bottommost_y
    }

    pub fn x(&self, x: f64) -> Result<i64> {
        let px = (self.scale_factor * (x - self.leftmost_x)).floor();
        if !px.is_finite() {
            return Err(GearError::NonFiniteCoordinate);
        }
        Ok(px as i64)
    }

    pub fn y(&self, y: f64) -> Result<i64> {
        let px = f64::from(self.height) - (self.scale_factor * (y - self.bottommost_y)).floor();
        if !px.is_finite() {
            return Err(GearError::NonFiniteCoordinate);
        }
        Ok(px as i64)
    }

    pub fn transform(&self, p: Point2) -> Result<(i64, i64)> {
        Ok((self.x(p.x)?, self.y(p.y)?))
    }

    pub fn length(&self, length: f64) -> i64 {
        (self.scale_factor * length).floor() as i64
    }
}

struct Canvas<'a> {
    viewport: &'a SvgViewport,
    out: String,
}

impl Canvas<'_> {
    fn line(&mut self, from: Point2, to: Point2) -> Result<()> {
        let (x1, y1) = self.viewport.transform(from)?;
        let (x2, y2) = self.viewport.transform(to)?;
        writeln!(
            self.out,
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" style=\"stroke:rgb(0,0,0);stroke-width:2\" />"
        )
        .expect("writing to a String");
        Ok(())
    }

    fn circle(&mut self, center: Point2, radius: f64, colour: &str) -> Result<()> {
        let (cx, cy) = self.viewport.transform(center)?;
        let r = self.viewport.length(radius);
        writeln!(
            self.out,
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{r}\" stroke=\"{colour}\" stroke-width=\"3\" style=\"fill:none\" />"
        )
        .expect("writing to a String");
        Ok(())
    }

    fn gear(&mut self, gear: &Gear, angle: f64, center: Point2, clip_dedenda: bool) -> Result<()> {
        let outline = gear.profile.placed(angle, center);
        assert!(outline.len() >= 3, "gear outline needs at least three points");
        for (i, &p) in outline.iter().enumerate() {
            self.line(p, outline[(i + 1) % outline.len()])?;
        }
        if !clip_dedenda {
            // dedendum lines carried on to the gear centre
            let per_tooth = gear.profile.points_per_tooth;
            let flank_points = 2 * gear.flank.len() - 1;
            for tooth in outline.chunks(per_tooth) {
                self.line(center, tooth[0])?;
                self.line(tooth[flank_points + 1], center)?;
            }
        }
        Ok(())
    }
}

/// The pair drawn at one animation state.
pub fn write_svg(pair: &GearPair, frame: FrameRotation) -> Result<String> {
    let viewport = SvgViewport::for_pair(pair);
    let pose = pair.scene.pose(frame);
    render(pair, &viewport, &pose)
}

/// The pair drawn at an explicit placement.
pub fn render(pair: &GearPair, viewport: &SvgViewport, pose: &PairPose) -> Result<String> {
    let mut canvas = Canvas { viewport, out: String::new() };
    writeln!(canvas.out, "<svg height=\"{}\" width=\"{}\">", viewport.height, viewport.width)
        .expect("writing to a String");

    let (wheel, pinion) = (&pair.wheel.geometry, &pair.pinion.geometry);
    canvas.circle(Point2::ORIGIN, wheel.base_radius, "red")?;
    canvas.circle(Point2::ORIGIN, wheel.clearance_radius, "blue")?;
    canvas.circle(pose.pinion_center, pinion.base_radius, "red")?;
    canvas.circle(pose.pinion_center, pinion.clearance_radius, "blue")?;

    let clip = pair.spec.clip_dedenda;
    canvas.gear(&pair.wheel, pose.wheel_angle, Point2::ORIGIN, clip)?;
    canvas.gear(&pair.pinion, pose.pinion_angle, pose.pinion_center, clip)?;

    canvas.out.push_str("</svg>\n");
    Ok(canvas.out)
}
