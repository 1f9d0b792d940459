//! Reference computations written straight from the geometry, sharing no
//! code with the library beyond its point type.

#![allow(dead_code)]

use std::f64::consts::PI;

use cycloidal::Point2;

/// Epicycloid traced by a circle of radius `r` rolling on a unit circle,
/// written as the rolling-centre position plus the rim offset.
pub fn epicycloid(r: f64, theta: f64) -> Point2 {
    let centre = Point2::new((1.0 + r) * theta.cos(), (1.0 + r) * theta.sin());
    let rim_angle = theta + theta / r;
    Point2::new(centre.x - r * rim_angle.cos(), centre.y - r * rim_angle.sin())
}

/// Signed distance of the traced point from the tooth-tip ray at `gamma`;
/// positive once the point has crossed it.
pub fn tip_side(r: f64, gamma: f64, theta: f64) -> f64 {
    let p = epicycloid(r, theta);
    p.y * gamma.cos() - p.x * gamma.sin()
}

/// First crossing of the tip ray for a gear of `teeth` meshing with
/// `mate_teeth`: a fine scan followed by 200 bisection steps.
pub fn bisect_tip_angle(teeth: u32, mate_teeth: u32) -> f64 {
    let r = f64::from(mate_teeth) / 2.0 / f64::from(teeth);
    let gamma = PI / 2.0 / f64::from(teeth);
    let step = 1e-3;
    let mut lo = 0.0;
    let mut hi = step;
    while tip_side(r, gamma, hi) <= 0.0 {
        lo = hi;
        hi += step;
        assert!(hi < 2.0 * PI, "no crossing for {teeth}/{mate_teeth}");
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if tip_side(r, gamma, mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let (abx, aby) = (b.x - a.x, b.y - a.y);
    let len2 = abx * abx + aby * aby;
    let t = if len2 == 0.0 { 0.0 } else { (((p.x - a.x) * abx + (p.y - a.y) * aby) / len2).clamp(0.0, 1.0) };
    ((p.x - a.x - t * abx).powi(2) + (p.y - a.y - t * aby).powi(2)).sqrt()
}

/// Largest distance from `samples` evenly spaced curve points on
/// `[0, angles.last]` to the chord spanning each point's parameter.
pub fn max_deviation(curve: impl Fn(f64) -> Point2, angles: &[f64], samples: usize) -> f64 {
    let end = *angles.last().unwrap();
    let mut seg = 0;
    let mut worst: f64 = 0.0;
    for k in 0..=samples {
        let theta = end * k as f64 / samples as f64;
        while seg + 2 < angles.len() && theta > angles[seg + 1] {
            seg += 1;
        }
        let d = point_segment_distance(curve(theta), curve(angles[seg]), curve(angles[seg + 1]));
        worst = worst.max(d);
    }
    worst
}

fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn on_segment(a: Point2, b: Point2, p: Point2) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Closed segments intersect, touching included.
pub fn segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let (d1, d2, d3, d4) = (orient(c, d, a), orient(c, d, b), orient(a, b, c), orient(a, b, d));
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && on_segment(c, d, a))
        || (d2 == 0.0 && on_segment(c, d, b))
        || (d3 == 0.0 && on_segment(a, b, c))
        || (d4 == 0.0 && on_segment(a, b, d))
}

/// Brute-force simplicity: no repeated vertex and no two non-adjacent
/// edges meeting.
pub fn is_simple(points: &[Point2]) -> Result<(), String> {
    let n = points.len();
    if n < 3 {
        return Err(format!("only {n} vertices"));
    }
    for i in 0..n {
        if points[i] == points[(i + 1) % n] {
            return Err(format!("repeated vertex at {i}"));
        }
    }
    let boxes: Vec<[f64; 4]> = (0..n)
        .map(|i| {
            let (a, b) = (points[i], points[(i + 1) % n]);
            [a.x.min(b.x), a.x.max(b.x), a.y.min(b.y), a.y.max(b.y)]
        })
        .collect();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (bi, bj) = (boxes[i], boxes[j]);
            if bi[1] < bj[0] || bj[1] < bi[0] || bi[3] < bj[2] || bj[3] < bi[2] {
                continue;
            }
            if segments_intersect(points[i], points[(i + 1) % n], points[j], points[(j + 1) % n]) {
                return Err(format!("edges {i} and {j} meet"));
            }
        }
    }
    Ok(())
}

pub fn rotate(p: Point2, angle: f64) -> Point2 {
    let (s, c) = angle.sin_cos();
    Point2::new(p.x * c - p.y * s, p.x * s + p.y * c)
}
