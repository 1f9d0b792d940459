//! The tooth tip problem: where does the generated flank cross the tooth's
//! centre line? Shows the coarse scan, then the Newton refinement.

use cycloidal::geometry::derive_geometry;
use cycloidal::tip::{scan_samples, solve_tip_angle, ScanStep};
use cycloidal::GearPairSpec;

fn main() -> cycloidal::Result<()> {
    let (wheel, pinion) = derive_geometry(&GearPairSpec::new(16, 6))?;
    for (name, blank) in [("wheel", wheel), ("pinion", pinion)] {
        let step = ScanStep::Legacy.step(blank.tip_angle);
        let samples = scan_samples(blank.radius_ratio, blank.tip_gradient, step, blank.scan_limit());
        println!("{name}: scanned {} whole degrees", samples.len());
        for s in samples.iter().rev().take(2).rev() {
            println!("  {:>5.1} deg  residual {:+.5}", s.angle.to_degrees(), s.residual);
        }
        let tip = solve_tip_angle(&blank, ScanStep::Legacy, "gear")?;
        println!(
            "  newton: {:.10} deg after {} iterations, residual {:.1e}",
            tip.angle.to_degrees(),
            tip.iterations,
            tip.residual
        );
    }

    println!("\nadaptive scan on a fine-toothed wheel:");
    let (fine, _) = derive_geometry(&GearPairSpec::new(120, 12))?;
    for scan in [ScanStep::Legacy, ScanStep::Adaptive] {
        let tip = solve_tip_angle(&fine, scan, "wheel")?;
        println!(
            "  {scan:?}: bracket {:.4}..{:.4} deg, tip {:.8} deg",
            tip.bracket.0.to_degrees(),
            tip.bracket.1.to_degrees(),
            tip.angle.to_degrees()
        );
    }
    Ok(())
}
