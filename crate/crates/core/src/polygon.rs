//! Planar polygon predicates used by the mesh checker.

use crate::geometry::Point2;

fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

/// True when the open segments cross at a single interior point of both.
pub fn segments_cross(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

pub fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.distance(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.distance(a + ab * t)
}

/// Euclidean distance between two closed segments; zero when they cross.
pub fn segment_distance(a: Point2, b: Point2, c: Point2, d: Point2) -> f64 {
    if segments_cross(a, b, c, d) {
        return 0.0;
    }
    point_segment_distance(a, c, d)
        .min(point_segment_distance(b, c, d))
        .min(point_segment_distance(c, a, b))
        .min(point_segment_distance(d, a, b))
}

/// Even-odd containment test against a closed polygon.
pub fn contains(polygon: &[Point2], p: Point2) -> bool {
    let n = polygon.len();
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (polygon[i], polygon[j]);
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

fn edges(polygon: &[Point2]) -> impl Iterator<Item = (Point2, Point2)> + '_ {
    let n = polygon.len();
    (0..n).map(move |i| (polygon[i], polygon[(i + 1) % n]))
}

/// Distance from `p` to the nearest edge of `polygon`.
pub fn boundary_distance(polygon: &[Point2], p: Point2) -> f64 {
    edges(polygon).map(|(a, b)| point_segment_distance(p, a, b)).fold(f64::INFINITY, f64::min)
}

/// Smallest disc around `center` containing every vertex.
fn reach(polygon: &[Point2], center: Point2) -> f64 {
    polygon.iter().map(|p| p.distance(center)).fold(0.0, f64::max)
}

/// Boundary separation of two closed polygons.
///
/// Positive: the distance between the disjoint outlines. Zero: the outlines
/// touch without crossing. Negative: the interiors overlap, and the value is
/// minus the deepest vertex penetration (or `-f64::EPSILON` if edges cross
/// without any vertex inside the other polygon).
///
/// `center_a` and `center_b` are any interior reference points; they are
/// only used to discard edges that cannot be closest.
pub fn signed_separation(a: &[Point2], center_a: Point2, b: &[Point2], center_b: Point2) -> f64 {
    let reach_a = reach(a, center_a);
    let reach_b = reach(b, center_b);

    // any vertex pair bounds the separation from above
    let near_a = a
        .iter()
        .copied()
        .min_by(|p, q| p.distance(center_b).total_cmp(&q.distance(center_b)))
        .expect("non-empty polygon");
    let bound = b.iter().map(|q| q.distance(near_a)).fold(f64::INFINITY, f64::min);

    let near = |poly: &[Point2], center: Point2, radius: f64| -> Vec<(Point2, Point2)> {
        edges(poly).filter(|&(p, q)| point_segment_distance(center, p, q) <= radius + bound).collect()
    };
    let edges_a = near(a, center_b, reach_b);
    let edges_b = near(b, center_a, reach_a);

    let crossing = edges_a
        .iter()
        .any(|&(p, q)| edges_b.iter().any(|&(r, s)| box_gap(p, q, r, s) == 0.0 && segments_cross(p, q, r, s)));
    let nested = contains(b, a[0]) || contains(a, b[0]);
    if crossing || nested {
        let depth_a = a
            .iter()
            .filter(|&&p| p.distance(center_b) <= reach_b && contains(b, p))
            .map(|&p| boundary_distance(b, p))
            .fold(0.0, f64::max);
        let depth_b = b
            .iter()
            .filter(|&&p| p.distance(center_a) <= reach_a && contains(a, p))
            .map(|&p| boundary_distance(a, p))
            .fold(0.0, f64::max);
        let depth = depth_a.max(depth_b);
        return if depth > 0.0 { -depth } else { -f64::EPSILON };
    }

    let mut best = bound;
    for &(p, q) in &edges_a {
        for &(r, s) in &edges_b {
            if box_gap(p, q, r, s) < best {
                best = best.min(segment_distance(p, q, r, s));
            }
        }
    }
    best
}

/// Lower bound on the distance between two segments from their bounding boxes.
fn box_gap(a: Point2, b: Point2, c: Point2, d: Point2) -> f64 {
    let gap = |lo1: f64, hi1: f64, lo2: f64, hi2: f64| (lo2 - hi1).max(lo1 - hi2).max(0.0);
    let dx = gap(a.x.min(b.x), a.x.max(b.x), c.x.min(d.x), c.x.max(d.x));
    let dy = gap(a.y.min(b.y), a.y.max(b.y), c.y.min(d.y), c.y.max(d.y));
    dx.hypot(dy)
}
