mod common;

use cycloidal::geometry::derive_geometry;
use cycloidal::profile::SolvedGear;
use cycloidal::tessellate::{Flank, FlankMethod};
use cycloidal::tip::ScanStep;
use cycloidal::GearPairSpec;
use proptest::prelude::*;

fn flanks(wheel: u32, pinion: u32) -> [Flank; 2] {
    let (w, p) = derive_geometry(&GearPairSpec::new(wheel, pinion)).unwrap();
    let w = SolvedGear::solve(w, ScanStep::Adaptive, "wheel").unwrap();
    let p = SolvedGear::solve(p, ScanStep::Adaptive, "pinion").unwrap();
    [w, p].map(|g| Flank::new(g.blank.pitch_radius, g.blank.radius_ratio, g.tip.angle))
}

#[test]
fn paths_stay_within_tolerance_of_the_curve() {
    for flank in flanks(16, 6) {
        let curve = |t: f64| common::epicycloid(flank.radius_ratio, t) * flank.pitch_radius;
        for method in [FlankMethod::PriorityQueue, FlankMethod::EqualArc] {
            let path = flank.tessellate(method, 0.05).unwrap();
            assert_eq!(path.angles[0], 0.0);
            assert_eq!(*path.angles.last().unwrap(), flank.tip_generating_angle);
            assert!(path.chords().all(|c| c <= 0.05 + 1e-12));
            assert!(common::max_deviation(curve, &path.angles, 100_000) <= 0.05);
        }
    }
}

#[test]
fn methods_agree_on_the_end_points() {
    for flank in flanks(40, 13) {
        let pq = flank.tessellate(FlankMethod::PriorityQueue, 0.01).unwrap();
        let ea = flank.tessellate(FlankMethod::EqualArc, 0.01).unwrap();
        let fx = flank.tessellate(FlankMethod::FIXED_20, 0.01).unwrap();
        assert_eq!(fx.len(), 21);
        for path in [&pq, &ea, &fx] {
            assert!(path.points[0].distance(common::epicycloid(flank.radius_ratio, 0.0) * flank.pitch_radius) < 1e-12);
            let tip = *path.points.last().unwrap();
            assert!((tip.norm() - pq.points.last().unwrap().norm()).abs() < 1e-12);
        }
        // equal-arc never needs more points than a quarter more than the adaptive split
        assert!(ea.len() <= pq.len() + pq.len() / 4 + 1);
    }
}

#[test]
fn equal_arc_chords_are_equal() {
    for flank in flanks(40, 13) {
        let path = flank.tessellate(FlankMethod::EqualArc, 0.05).unwrap();
        let chords: Vec<f64> = path.chords().collect();
        for c in &chords[..chords.len() - 1] {
            assert!((c - 0.05).abs() < 1e-9, "{c}");
        }
        assert!(*chords.last().unwrap() <= 0.05 + 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn adaptive_paths_are_monotone_and_bounded(nw in 6u32..48, frac in 0.2f64..1.0, eps in 0.01f64..0.3) {
        let np = ((f64::from(nw) * frac) as u32).max(3);
        for flank in flanks(nw, np) {
            for method in [FlankMethod::PriorityQueue, FlankMethod::EqualArc] {
                let path = flank.tessellate(method, eps).unwrap();
                prop_assert!(path.angles.windows(2).all(|w| w[0] < w[1]));
                prop_assert!(path.chords().all(|c| c <= eps + 1e-12));
                let radii: Vec<f64> = path.points.iter().map(|p| p.norm()).collect();
                prop_assert!(radii.windows(2).all(|w| w[0] <= w[1] + 1e-12));
            }
        }
    }
}
