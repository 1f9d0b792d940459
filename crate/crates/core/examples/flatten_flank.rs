//! Compares the three ways of turning an addendum flank into a polyline:
//! adaptive longest-chord splitting, equal chords, and twenty equal angle steps.

use cycloidal::tessellate::FlankMethod;
use cycloidal::{BuildOptions, GearPair, GearPairSpec};

fn main() -> cycloidal::Result<()> {
    let pair = GearPair::design(&GearPairSpec::new(16, 6), BuildOptions::default())?;
    println!(
        "{:<8} {:>6} {:<14} {:>6} {:>9} {:>9} {:>7}",
        "gear", "eps", "method", "points", "shortest", "longest", "ratio"
    );
    for (name, gear) in [("wheel", &pair.wheel), ("pinion", &pair.pinion)] {
        let flank = gear.geometry.flank();
        for eps in [0.2, 0.05, 0.01] {
            for method in [FlankMethod::PriorityQueue, FlankMethod::EqualArc, FlankMethod::FIXED_20] {
                let path = flank.tessellate(method, eps)?;
                let chords: Vec<f64> = path.chords().collect();
                let min = chords.iter().cloned().fold(f64::INFINITY, f64::min);
                let max = chords.iter().cloned().fold(0.0, f64::max);
                let label = match method {
                    FlankMethod::PriorityQueue => "priority queue".to_string(),
                    FlankMethod::EqualArc => "equal arc".to_string(),
                    FlankMethod::Fixed(n) => format!("fixed {n}"),
                };
                println!("{name:<8} {eps:>6} {label:<14} {:>6} {min:>9.5} {max:>9.5} {:>7.3}", path.len(), min / eps);
            }
        }
    }
    println!("\nratio is the shortest chord over eps; for equal arc that is the leftover chord at the tip");
    Ok(())
}
