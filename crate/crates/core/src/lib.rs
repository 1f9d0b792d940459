//! Cycloidal wheel and pinion generator.
//!
//! Given two tooth counts, the crate locates the tooth tip on each
//! epicycloidal addendum, flattens the flanks into polylines whose chords
//! respect a print tolerance, assembles closed outlines, places the pair in
//! mesh and checks that the outlines never overlap. Results can be written
//! as SVG drawings, OpenSCAD polygons, or an SVG frame sequence.
//!
//! ```
//! use cycloidal::{BuildOptions, GearPair, GearPairSpec};
//!
//! let pair = GearPair::design(&GearPairSpec::new(16, 6), BuildOptions::default()).unwrap();
//! assert!((pair.wheel.geometry.tip_height - 9.31512).abs() < 1e-4);
//! ```

// negated float comparisons also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod export;
pub mod geometry;
pub mod mesh;
pub mod pair;
pub mod polygon;
pub mod profile;
pub mod tessellate;
pub mod tip;

pub use error::{GearError, Result};
pub use geometry::{GearPairSpec, MeshMode, Point2};
pub use pair::{BuildOptions, Gear, GearPair};
