//! End-to-end construction of a meshing wheel/pinion pair.

use crate::error::Result;
use crate::geometry::{derive_geometry, GearPairSpec};
use crate::mesh::{MeshScene, PhaseConvention};
use crate::profile::{build_profile, compute_dedendum_depths, GearGeometry, GearProfile, SolvedGear};
use crate::tessellate::{FlankMethod, FlankPath};
use crate::tip::ScanStep;

/// Knobs that change how the pair is computed, not what it is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub method: FlankMethod,
    pub scan: ScanStep,
    pub phases: PhaseConvention,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            method: FlankMethod::PriorityQueue,
            scan: ScanStep::Adaptive,
            phases: PhaseConvention::Corrected,
        }
    }
}

/// One gear: its geometry, flattened flank and closed outline.
#[derive(Debug, Clone, PartialEq)]
pub struct Gear {
    pub geometry: GearGeometry,
    pub flank: FlankPath,
    pub profile: GearProfile,
}

impl Gear {
    fn build(geometry: GearGeometry, spec: &GearPairSpec, method: FlankMethod) -> Result<Self> {
        let flank = geometry.flank().tessellate(method, spec.epsilon)?;
        let profile = build_profile(&geometry, &flank, spec.epsilon)?;
        Ok(Gear { geometry, flank, profile })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GearPair {
    pub spec: GearPairSpec,
    pub options: BuildOptions,
    pub wheel: Gear,
    pub pinion: Gear,
    pub scene: MeshScene,
}

impl GearPair {
    pub fn design(spec: &GearPairSpec, options: BuildOptions) -> Result<Self> {
        let (wheel, pinion) = derive_geometry(spec)?;
        let wheel = SolvedGear::solve(wheel, options.scan, "wheel")?;
        let pinion = SolvedGear::solve(pinion, options.scan, "pinion")?;
        let (wheel, pinion) = compute_dedendum_depths(&wheel, &pinion, spec.clearance)?;
        let scene = MeshScene::new(&wheel, &pinion, spec.mode, options.phases);
        Ok(GearPair {
            spec: spec.clone(),
            options,
            wheel: Gear::build(wheel, spec, options.method)?,
            pinion: Gear::build(pinion, spec, options.method)?,
            scene,
        })
    }
}
