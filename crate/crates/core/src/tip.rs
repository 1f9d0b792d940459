//! The tooth tip problem: how far must the generating circle roll before the
//! traced point reaches the ray through the tooth tip?
//!
//! The residual is the cross-multiplied gradient difference `y(θ) − m·x(θ)`
//! of the unit epicycloid against the tip ray of gradient `m`. A coarse scan
//! brackets its first sign change, then Newton-Raphson polishes the root
//! with a bisection fallback whenever a step leaves the bracket.

use crate::error::{GearError, Result};
use crate::geometry::GearBlank;

/// Newton iterations before giving up.
pub const MAX_ITERATIONS: usize = 60;
/// Stop once a Newton step moves the angle by no more than this.
pub const STEP_TOLERANCE: f64 = 1e-13;
/// Stop once the residual is this small.
pub const RESIDUAL_TOLERANCE: f64 = 1e-14;

const MIN_DERIVATIVE: f64 = 1e-14;

/// How the coarse scan steps through generating-circle angles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanStep {
    /// `min(1°, γ/4)`, so even fine-toothed gears get several samples before the root.
    #[default]
    Adaptive,
    /// Exactly one degree, as in the original scan table.
    Legacy,
}

impl ScanStep {
    pub fn step(self, tip_angle: f64) -> f64 {
        let one_degree = 1f64.to_radians();
        match self {
            ScanStep::Adaptive => one_degree.min(tip_angle / 4.0),
            ScanStep::Legacy => one_degree,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TipSolution {
    /// Generating-circle angle at which the traced point lies on the tip ray.
    pub angle: f64,
    pub iterations: usize,
    /// [`gradient_difference`] at `angle`.
    pub residual: f64,
    /// Sign-change bracket found by the coarse scan.
    pub bracket: (f64, f64),
}

/// One row of the coarse scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanSample {
    pub angle: f64,
    pub residual: f64,
}

pub fn gradient_difference(r: f64, m: f64, theta: f64) -> f64 {
    let outer = theta + theta / r;
    (1.0 + r) * theta.sin() - r * outer.sin() - m * (1.0 + r) * theta.cos() + m * r * outer.cos()
}

pub fn gradient_difference_derivative(r: f64, m: f64, theta: f64) -> f64 {
    let outer = theta + theta / r;
    (1.0 + r) * (theta.cos() - outer.cos() + m * theta.sin() - m * outer.sin())
}

/// Residual samples at `0, step, 2·step, …` up to and including the first
/// positive one, or up to `scan_limit` if the residual never turns positive.
pub fn scan_samples(r: f64, m: f64, step: f64, scan_limit: f64) -> Vec<ScanSample> {
    let mut samples = Vec::new();
    let mut k = 0u32;
    loop {
        let angle = f64::from(k) * step;
        if angle > scan_limit {
            break;
        }
        let residual = gradient_difference(r, m, angle);
        samples.push(ScanSample { angle, residual });
        if residual > 0.0 {
            break;
        }
        k += 1;
    }
    samples
}

/// Brackets the first sign change of [`gradient_difference`] on `[0, scan_limit]`.
pub fn coarse_scan(r: f64, m: f64, step: f64, scan_limit: f64) -> Option<(f64, f64)> {
    let samples = scan_samples(r, m, step, scan_limit);
    match samples.as_slice() {
        [.., lo, hi] if hi.residual > 0.0 => Some((lo.angle, hi.angle)),
        _ => None,
    }
}

/// Safeguarded Newton-Raphson on a bracket `(lo, hi)` with `f(lo) ≤ 0 < f(hi)`,
/// starting from `hi`.
pub fn solve_in_bracket(r: f64, m: f64, bracket: (f64, f64)) -> Result<TipSolution> {
    let (mut lo, mut hi) = bracket;
    let mut theta = hi;
    for iteration in 1..=MAX_ITERATIONS {
        let f = gradient_difference(r, m, theta);
        if f.abs() <= RESIDUAL_TOLERANCE {
            return Ok(TipSolution { angle: theta, iterations: iteration - 1, residual: f, bracket });
        }
        if f > 0.0 {
            hi = theta;
        } else {
            lo = theta;
        }
        let df = gradient_difference_derivative(r, m, theta);
        let newton = theta - f / df;
        let next = if df.abs() < MIN_DERIVATIVE || !(newton > lo && newton < hi) { 0.5 * (lo + hi) } else { newton };
        let moved = (next - theta).abs();
        theta = next;
        if moved <= STEP_TOLERANCE {
            let residual = gradient_difference(r, m, theta);
            return Ok(TipSolution { angle: theta, iterations: iteration, residual, bracket });
        }
    }
    Err(GearError::NoConvergence { iterations: MAX_ITERATIONS, last: theta })
}

/// Solves the tooth tip problem for one gear.
pub fn solve_tip_angle(blank: &GearBlank, scan: ScanStep, gear: &'static str) -> Result<TipSolution> {
    let (r, m) = (blank.radius_ratio, blank.tip_gradient);
    let bracket =
        coarse_scan(r, m, scan.step(blank.tip_angle), blank.scan_limit()).ok_or(GearError::ScanFailed { gear })?;
    solve_in_bracket(r, m, bracket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{derive_geometry, epicycloid_point, GearPairSpec};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn deg(d: f64) -> f64 {
        d / 360.0 * 2.0 * std::f64::consts::PI
    }

    #[test]
    fn scan_table_values() {
        let (w, p) = derive_geometry(&GearPairSpec::new(16, 6)).unwrap();
        let gw = |d| gradient_difference(w.radius_ratio, w.tip_gradient, deg(d));
        let gp = |d| gradient_difference(p.radius_ratio, p.tip_gradient, deg(d));
        assert_abs_diff_eq!(gw(0.0), -0.09849, epsilon = 1e-5);
        assert_abs_diff_eq!(gw(14.0), -0.01322, epsilon = 1e-5);
        assert_abs_diff_eq!(gw(15.0), 0.00598, epsilon = 1e-5);
        assert_abs_diff_eq!(gp(46.0), -0.01193, epsilon = 1e-5);
        assert_abs_diff_eq!(gp(47.0), 0.00712, epsilon = 1e-5);
    }

    #[test]
    fn derivative_vanishes_at_cusp() {
        for (r, m) in [(0.1875, 0.09849), (4.0 / 3.0, 0.26795), (2.0, 0.5)] {
            assert_eq!(gradient_difference_derivative(r, m, 0.0), 0.0);
        }
    }

    #[test]
    fn residual_rises_through_wheel_root() {
        let r = 0.1875;
        let m = 0.09849;
        let h = 1e-6;
        let fd = (gradient_difference(r, m, 0.25658 + h) - gradient_difference(r, m, 0.25658 - h)) / (2.0 * h);
        assert!(fd > 0.0);
        assert!(gradient_difference_derivative(r, m, 0.25658) > 0.0);
    }

    #[test]
    fn legacy_scan_brackets() {
        let (w, p) = derive_geometry(&GearPairSpec::new(16, 6)).unwrap();
        let step = ScanStep::Legacy.step(w.tip_angle);
        let (_, hi) = coarse_scan(w.radius_ratio, w.tip_gradient, step, w.scan_limit()).unwrap();
        assert_abs_diff_eq!(hi.to_degrees(), 15.0, epsilon = 1e-9);
        let (lo, hi) = coarse_scan(p.radius_ratio, p.tip_gradient, step, p.scan_limit()).unwrap();
        assert_abs_diff_eq!(hi.to_degrees(), 47.0, epsilon = 1e-9);
        assert_abs_diff_eq!(lo.to_degrees(), 46.0, epsilon = 1e-9);
    }

    #[test]
    fn immediate_sign_change() {
        // root of the 16-tooth wheel sits at ~0.2566 rad, inside the first half-radian step
        let bracket = coarse_scan(0.1875, 0.09849, 0.5, 1.0).unwrap();
        assert_eq!(bracket, (0.0, 0.5));
    }

    #[test]
    fn scan_failure_is_reported() {
        assert_eq!(coarse_scan(0.1875, 0.09849, 1f64.to_radians(), 0.1), None);
        let mut blank = derive_geometry(&GearPairSpec::new(16, 6)).unwrap().0;
        blank.radius_ratio = 0.001;
        assert!(matches!(
            solve_tip_angle(&blank, ScanStep::Legacy, "wheel"),
            Err(GearError::ScanFailed { gear: "wheel" })
        ));
    }

    #[test]
    fn reference_tip_angles() {
        let (w, p) = derive_geometry(&GearPairSpec::new(16, 6)).unwrap();
        for scan in [ScanStep::Legacy, ScanStep::Adaptive] {
            let sw = solve_tip_angle(&w, scan, "wheel").unwrap();
            let sp = solve_tip_angle(&p, scan, "pinion").unwrap();
            assert_abs_diff_eq!(sw.angle.to_degrees(), 14.70086, epsilon = 1e-5);
            assert_abs_diff_eq!(sp.angle.to_degrees(), 46.63118, epsilon = 1e-5);
            assert!(sw.residual.abs() <= 1e-12 && sp.residual.abs() <= 1e-12);
        }
    }

    proptest! {
        #[test]
        fn derivative_matches_central_difference(
            r in 0.05f64..3.0, m in 0.0f64..0.8, theta in 0.01f64..3.0,
        ) {
            let h = 1e-6;
            let fd = (gradient_difference(r, m, theta + h) - gradient_difference(r, m, theta - h)) / (2.0 * h);
            let d = gradient_difference_derivative(r, m, theta);
            prop_assert!((fd - d).abs() <= 1e-6 * d.abs().max(1.0));
        }

        #[test]
        fn solved_point_lies_on_tip_ray(wheel in 3u32..=80, pinion in 3u32..=80) {
            let (wheel, pinion) = (wheel.max(pinion), wheel.min(pinion));
            let (w, p) = derive_geometry(&GearPairSpec::new(wheel, pinion)).unwrap();
            for b in [w, p] {
                let s = solve_tip_angle(&b, ScanStep::Adaptive, "gear").unwrap();
                prop_assert!(s.residual.abs() <= 1e-12);
                prop_assert!(s.bracket.0 <= s.angle && s.angle <= s.bracket.1);
                let polar = epicycloid_point(b.radius_ratio, s.angle).angle();
                prop_assert!((polar - b.tip_gradient.atan()).abs() <= 1e-10);
            }
        }
    }
}
