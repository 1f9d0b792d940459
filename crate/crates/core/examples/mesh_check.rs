//! Sweeps a tooth period of rolling and reports the closest approach of the
//! two outlines, with the original pinion phase and the corrected one.

use cycloidal::mesh::{check_interference, PhaseConvention, DEFAULT_SAMPLES};
use cycloidal::{BuildOptions, GearPair, GearPairSpec};

fn main() -> cycloidal::Result<()> {
    println!("{:>6} {:>15} {:>15}", "pair", "original", "corrected");
    for (w, p) in [(16, 6), (20, 10), (16, 7), (15, 7), (40, 13), (9, 9)] {
        let mut row = format!("{:>6}", format!("{w}/{p}"));
        for phases in [PhaseConvention::Legacy, PhaseConvention::Corrected] {
            let pair = GearPair::design(&GearPairSpec::new(w, p), BuildOptions { phases, ..BuildOptions::default() })?;
            let report = check_interference(&pair.wheel.profile, &pair.pinion.profile, &pair.scene, DEFAULT_SAMPLES);
            let verdict = if report.passes() { "ok" } else { "overlap" };
            row += &format!(" {:>+9.2e} {verdict:<7}", report.min_separation);
        }
        println!("{row}");
    }
    println!("\nseparations are in modules; the pairs have no backlash, so contact distances are tiny");
    Ok(())
}
