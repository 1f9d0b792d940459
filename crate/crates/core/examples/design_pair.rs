//! Designs the 16-tooth wheel / 6-tooth pinion pair and prints its geometry.
//!
//!     cargo run --example design_pair -- [wheel_teeth] [pinion_teeth]

use cycloidal::{BuildOptions, GearPair, GearPairSpec};

fn main() -> cycloidal::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>().expect("tooth counts are integers"));
    let wheel_teeth = args.next().unwrap_or(16);
    let pinion_teeth = args.next().unwrap_or(6);

    let pair = GearPair::design(&GearPairSpec::new(wheel_teeth, pinion_teeth), BuildOptions::default())?;
    println!("{wheel_teeth}/{pinion_teeth} pair, centre distance {:.5} modules", pair.scene.center_distance);
    for (name, gear) in [("wheel", &pair.wheel), ("pinion", &pair.pinion)] {
        let g = &gear.geometry;
        println!("{name}:");
        println!("  pitch radius       {:>10.5}", g.pitch_radius());
        println!("  generating radius  {:>10.5}", g.blank.generating_radius);
        println!("  tip angle          {:>10.5} deg", g.tip_generating_angle().to_degrees());
        println!("  tip height         {:>10.5}", g.tip_height);
        println!("  dedendum depth     {:>10.5}", g.dedendum_depth);
        println!("  clearance radius   {:>10.5}", g.clearance_radius);
        println!("  outline vertices   {:>10}", gear.profile.points.len());
    }
    Ok(())
}
