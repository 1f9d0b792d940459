//! Flattening of the addendum flank `θ ∈ [0, δ_tip]` into a polyline.
//!
//! Three strategies are provided:
//! - [`tessellate_priority_queue`]: repeatedly bisect the longest chord until
//!   no chord exceeds ε;
//! - [`tessellate_equal_arc`]: march along the flank placing each point
//!   exactly ε away from the previous one;
//! - [`tessellate_fixed`]: equal generating-angle steps, the original behaviour.
//!
//! Every path point is evaluated on the curve, never interpolated.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{GearError, Result};
use crate::geometry::{epicycloid_point, epicycloid_tangent, Point2};

/// Hard cap on the number of live segments in the priority queue.
pub const MAX_SEGMENTS: usize = 10_000_000;

const EQUAL_ARC_TOLERANCE: f64 = 1e-12;
const EQUAL_ARC_MAX_ITERATIONS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlankMethod {
    PriorityQueue,
    EqualArc,
    Fixed(u32),
}

impl FlankMethod {
    pub const FIXED_20: FlankMethod = FlankMethod::Fixed(20);
}

/// One chord of the flattened flank.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSegment {
    pub start: f64,
    pub finish: f64,
    /// Length of the chord between the curve points at `start` and `finish`, in modules.
    pub chord: f64,
}

impl CurveSegment {
    fn new(curve: &Flank, start: f64, finish: f64) -> Self {
        CurveSegment { start, finish, chord: curve.chord(start, finish) }
    }
}

impl Eq for CurveSegment {}

impl PartialOrd for CurveSegment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// longest chord first
impl Ord for CurveSegment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.chord.total_cmp(&other.chord).then_with(|| other.start.total_cmp(&self.start))
    }
}

/// A flank polyline: strictly increasing generating angles from 0 to the tip
/// and the matching curve points (in modules, unrotated).
#[derive(Debug, Clone, PartialEq)]
pub struct FlankPath {
    pub method: FlankMethod,
    pub angles: Vec<f64>,
    pub points: Vec<Point2>,
}

impl FlankPath {
    fn from_angles(curve: &Flank, method: FlankMethod, angles: Vec<f64>) -> Self {
        let points = angles.iter().map(|&t| curve.point(t)).collect();
        FlankPath { method, angles, points }
    }

    pub fn chords(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.windows(2).map(|w| w[0].distance(w[1]))
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The addendum flank of one gear.
#[derive(Debug, Clone, Copy)]
pub struct Flank {
    pub pitch_radius: f64,
    pub radius_ratio: f64,
    pub tip_generating_angle: f64,
}

impl Flank {
    pub fn new(pitch_radius: f64, radius_ratio: f64, tip_generating_angle: f64) -> Self {
        Flank { pitch_radius, radius_ratio, tip_generating_angle }
    }

    pub fn point(&self, theta: f64) -> Point2 {
        epicycloid_point(self.radius_ratio, theta) * self.pitch_radius
    }

    pub fn chord(&self, from: f64, to: f64) -> f64 {
        self.point(from).distance(self.point(to))
    }

    pub fn tessellate(&self, method: FlankMethod, epsilon: f64) -> Result<FlankPath> {
        match method {
            FlankMethod::PriorityQueue => tessellate_priority_queue(self, epsilon),
            FlankMethod::EqualArc => tessellate_equal_arc(self, epsilon),
            FlankMethod::Fixed(steps) => Ok(tessellate_fixed(self, steps)),
        }
    }
}

/// Splits the longest chord at its generating-angle midpoint until the
/// longest remaining chord is at most `epsilon`.
pub fn tessellate_priority_queue(curve: &Flank, epsilon: f64) -> Result<FlankPath> {
    priority_queue_with_limit(curve, epsilon, MAX_SEGMENTS)
}

fn priority_queue_with_limit(curve: &Flank, epsilon: f64, limit: usize) -> Result<FlankPath> {
    let mut queue = BinaryHeap::new();
    queue.push(CurveSegment::new(curve, 0.0, curve.tip_generating_angle));
    loop {
        let longest = queue.pop().expect("queue never drains");
        if longest.chord <= epsilon {
            queue.push(longest);
            break;
        }
        let half = 0.5 * (longest.start + longest.finish);
        // the second test catches intervals too narrow to split in double precision
        if queue.len() + 2 > limit || !(half > longest.start && half < longest.finish) {
            return Err(GearError::ToleranceTooSmall { epsilon, limit });
        }
        queue.push(CurveSegment::new(curve, longest.start, half));
        queue.push(CurveSegment::new(curve, half, longest.finish));
    }

    let mut segments = queue.into_vec();
    segments.sort_by(|a, b| a.start.total_cmp(&b.start));
    let mut angles = Vec::with_capacity(segments.len() + 1);
    angles.push(0.0);
    angles.extend(segments.iter().map(|s| s.finish));
    Ok(FlankPath::from_angles(curve, FlankMethod::PriorityQueue, angles))
}

/// Places each point at chord distance exactly `epsilon` from its
/// predecessor; the last chord, ending at the tip, is at most `epsilon`.
pub fn tessellate_equal_arc(curve: &Flank, epsilon: f64) -> Result<FlankPath> {
    let end = curve.tip_generating_angle;
    let first_step = epsilon / (curve.pitch_radius * (1.0 + curve.radius_ratio));
    let mut angles = vec![0.0];
    let mut previous_width = first_step;
    loop {
        let from = *angles.last().expect("non-empty");
        if curve.chord(from, end) <= epsilon {
            angles.push(end);
            break;
        }
        let next = next_equal_chord(curve, from, end, epsilon, from + previous_width)?;
        if next >= end {
            angles.push(end);
            break;
        }
        previous_width = next - from;
        angles.push(next);
        if angles.len() > MAX_SEGMENTS {
            return Err(GearError::ToleranceTooSmall { epsilon, limit: MAX_SEGMENTS });
        }
    }
    Ok(FlankPath::from_angles(curve, FlankMethod::EqualArc, angles))
}

/// Root of `chord(from, θ) − epsilon` on `(from, end]`, approached from
/// below, by Newton's method with a bisection fallback whenever a step
/// leaves the current bracket.
fn next_equal_chord(curve: &Flank, from: f64, end: f64, epsilon: f64, guess: f64) -> Result<f64> {
    let anchor = curve.point(from);
    let residual = |theta: f64| {
        let offset = curve.point(theta) - anchor;
        let chord = offset.norm();
        let derivative = if chord > 0.0 {
            offset.dot(epicycloid_tangent(curve.radius_ratio, theta) * curve.pitch_radius) / chord
        } else {
            0.0
        };
        (chord - epsilon, derivative)
    };

    let (mut lo, mut hi) = (from, end);
    let mut theta = if guess > lo && guess < hi { guess } else { 0.5 * (lo + hi) };
    for _ in 0..EQUAL_ARC_MAX_ITERATIONS {
        let (g, dg) = residual(theta);
        // accept from below only, so no chord exceeds epsilon
        if (-EQUAL_ARC_TOLERANCE..=0.0).contains(&g) {
            return Ok(theta);
        }
        if g > 0.0 {
            hi = theta;
        } else {
            lo = theta;
        }
        let newton = theta - g / dg;
        theta = if dg > 0.0 && newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
        if hi - lo <= f64::EPSILON * hi.abs() {
            return Ok(lo);
        }
    }
    Err(GearError::NoConvergence { iterations: EQUAL_ARC_MAX_ITERATIONS, last: theta })
}

/// `steps` equal generating-angle increments from the cusp to the tip.
pub fn tessellate_fixed(curve: &Flank, steps: u32) -> FlankPath {
    let steps = steps.max(1);
    let angles = (0..=steps).map(|k| curve.tip_generating_angle * (f64::from(k) / f64::from(steps))).collect();
    FlankPath::from_angles(curve, FlankMethod::Fixed(steps), angles)
}
