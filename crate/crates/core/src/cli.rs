//! Command line front end.
//!
//! Parses flags into a [`RunConfig`], then designs the pair, writes the
//! requested files and, unless the gears are drawn apart, checks the mesh
//! for interference. With `-v` the run prints a step-by-step log of the
//! geometry in fixed five-decimal format.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgAction, Parser};

use crate::error::Result;
use crate::export::{write_artifacts, Formats, SvgViewport, DEFAULT_EXTRUDE_HEIGHT};
use crate::geometry::{derive_geometry, GearBlank, GearPairSpec, MeshMode};
use crate::mesh::{check_interference, InterferenceReport, PhaseConvention, DEFAULT_SAMPLES};
use crate::pair::{BuildOptions, GearPair};
use crate::profile::SolvedGear;
use crate::tessellate::FlankMethod;
use crate::tip::{scan_samples, ScanStep};

/// Bad flags or flag combinations.
pub const EXIT_USAGE: i32 = 2;
/// Files were written but the outlines overlap somewhere in the mesh.
pub const EXIT_INTERFERENCE: i32 = 9;

#[derive(Debug, Parser)]
#[command(name = "cycloidal", version, about = "Generate a meshing cycloidal wheel and pinion")]
struct Args {
    #[arg(long)]
    wheel_teeth: u32,
    #[arg(long)]
    pinion_teeth: u32,
    /// none, single or animation
    #[arg(long, default_value = "single")]
    mode: String,
    /// Number of animation frames (animation mode only)
    #[arg(long)]
    frames: Option<u32>,
    /// Stop dedendum lines at the clearance circle (default)
    #[arg(long)]
    clip_dedenda: bool,
    /// Also draw dedendum lines through to the gear centre
    #[arg(long)]
    no_clip_dedenda: bool,
    #[arg(long, default_value_t = 750)]
    svg_width: u32,
    #[arg(long, default_value_t = 750)]
    svg_height: u32,
    /// Maximum chord length, in modules
    #[arg(long, default_value_t = 0.05)]
    epsilon: f64,
    /// Gap between the mating tips and the tooth roots, in modules
    #[arg(long, default_value_t = 0.5)]
    clearance: f64,
    /// Output units per module
    #[arg(long, default_value_t = 1.0)]
    module: f64,
    /// pq, equal-arc or fixed20
    #[arg(long, default_value = "pq")]
    method: String,
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Comma separated list drawn from svg and scad
    #[arg(long, default_value = "svg,scad")]
    formats: String,
    /// Scan for the tooth tip in whole degrees
    #[arg(long)]
    legacy_scan: bool,
    /// Use the original pinion phase, which only meshes for even pinions
    #[arg(long)]
    legacy_phase: bool,
    /// OpenSCAD extrusion height, in output units
    #[arg(long, default_value_t = DEFAULT_EXTRUDE_HEIGHT)]
    extrude_height: f64,
    /// Rolling states checked per tooth period
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: u32,
    /// Overlap, in modules, still accepted by the interference check
    #[arg(long, default_value_t = 0.0)]
    interference_tolerance: f64,
    #[arg(short, long, action = ArgAction::Count)]
    verbose: u8,
}

/// Everything a run needs.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub spec: GearPairSpec,
    pub options: BuildOptions,
    pub out_dir: PathBuf,
    pub formats: Formats,
    pub extrude_height: f64,
    pub samples: u32,
    pub interference_tolerance: f64,
    pub verbosity: u8,
}

/// Why the arguments were rejected.
#[derive(Debug)]
pub enum UsageError {
    /// Help, version or a malformed command line; clap renders it.
    Clap(clap::Error),
    Invalid(String),
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UsageError::Clap(e) => write!(f, "{}", e.render()),
            UsageError::Invalid(msg) => writeln!(f, "{msg}"),
        }
    }
}

fn invalid<T>(msg: impl Into<String>) -> std::result::Result<T, UsageError> {
    Err(UsageError::Invalid(msg.into()))
}

pub fn parse_args<I, T>(argv: I) -> std::result::Result<RunConfig, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(UsageError::Clap)?;

    let mode = match (args.mode.as_str(), args.frames) {
        ("none", None) => MeshMode::None,
        ("single", None) => MeshMode::SingleMesh,
        ("animation", Some(frames)) => MeshMode::Animation { frames },
        ("animation", None) => return invalid("Number of frames required: pass --frames with --mode animation."),
        ("none" | "single", Some(_)) => return invalid("--frames is only meaningful with --mode animation."),
        _ => return invalid("Invalid value given for simulate_meshing."),
    };
    if args.clip_dedenda && args.no_clip_dedenda {
        return invalid("Invalid value given for clip_dedenda.");
    }
    let method = match args.method.as_str() {
        "pq" => FlankMethod::PriorityQueue,
        "equal-arc" | "equal_arc" => FlankMethod::EqualArc,
        "fixed20" => FlankMethod::FIXED_20,
        other => {
            return invalid(format!("Invalid value given for method: {other} (expected pq, equal-arc or fixed20)."))
        }
    };
    let mut formats = Formats { svg: false, scad: false };
    for name in args.formats.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match name {
            "svg" => formats.svg = true,
            "scad" => formats.scad = true,
            other => return invalid(format!("Invalid value given for formats: {other} (expected svg or scad).")),
        }
    }
    if !(formats.svg || formats.scad) {
        return invalid("At least one output format is required.");
    }
    if !(args.extrude_height > 0.0 && args.extrude_height.is_finite()) {
        return invalid("Invalid value given for extrude_height.");
    }
    if !(args.interference_tolerance >= 0.0) {
        return invalid("Invalid value given for interference_tolerance.");
    }

    let spec = GearPairSpec {
        wheel_teeth: args.wheel_teeth,
        pinion_teeth: args.pinion_teeth,
        module: args.module,
        clearance: args.clearance,
        epsilon: args.epsilon,
        clip_dedenda: !args.no_clip_dedenda,
        svg_width: args.svg_width,
        svg_height: args.svg_height,
        mode,
    };
    let options = BuildOptions {
        method,
        scan: if args.legacy_scan { ScanStep::Legacy } else { ScanStep::Adaptive },
        phases: if args.legacy_phase { PhaseConvention::Legacy } else { PhaseConvention::Corrected },
    };
    Ok(RunConfig {
        spec,
        options,
        out_dir: args.out,
        formats,
        extrude_height: args.extrude_height,
        samples: args.samples.max(1),
        interference_tolerance: args.interference_tolerance,
        verbosity: args.verbose,
    })
}

/// What a successful run produced.
#[derive(Debug, Clone)]
pub struct RunSummary {
    pub pair: GearPair,
    pub files: Vec<PathBuf>,
    pub interference: Option<InterferenceReport>,
}

impl RunSummary {
    pub fn meshes(&self, tolerance: f64) -> bool {
        self.interference.is_none_or(|r| r.min_separation > -tolerance)
    }
}

struct Log<'a> {
    out: &'a mut dyn Write,
    verbosity: u8,
}

impl Log<'_> {
    fn say(&mut self, level: u8, text: std::fmt::Arguments<'_>) -> Result<()> {
        if self.verbosity >= level {
            self.out.write_fmt(text)?;
            self.out.write_all(b"\n")?;
        }
        Ok(())
    }

    fn angle(&mut self, radians: f64) -> Result<()> {
        self.say(1, format_args!("    Angle in degrees: {:.5}", radians.to_degrees()))?;
        self.say(1, format_args!("    Angle in radians: {radians:.5}"))
    }

    fn scan_table(&mut self, blank: &GearBlank, scan: ScanStep) -> Result<()> {
        let step = scan.step(blank.tip_angle);
        let level = if step == 1f64.to_radians() { 1 } else { 2 };
        for s in scan_samples(blank.radius_ratio, blank.tip_gradient, step, blank.scan_limit()) {
            self.say(
                level,
                format_args!("angle in degrees: {:.5}, grad_diff: {:.5}", s.angle.to_degrees(), s.residual),
            )?;
        }
        Ok(())
    }
}

/// Designs the pair, writes its files and checks the mesh, logging to `log`.
pub fn execute(config: &RunConfig, log: &mut dyn Write) -> Result<RunSummary> {
    let mut log = Log { out: log, verbosity: config.verbosity };
    let spec = &config.spec;
    let (wheel, pinion) = derive_geometry(spec)?;

    log.say(1, format_args!("Wheel teeth: {}, Pinion teeth: {}", spec.wheel_teeth, spec.pinion_teeth))?;
    log.say(1, format_args!("Wheel PCR: {:.5}", wheel.pitch_radius))?;
    log.say(1, format_args!("Pinion PCR: {:.5}\n", pinion.pitch_radius))?;
    log.say(1, format_args!("Wheel GCR: {:.5}", wheel.generating_radius))?;
    log.say(1, format_args!("Pinion GCR: {:.5}\n", pinion.generating_radius))?;
    log.say(1, format_args!("Wheel GC one rev degrees: {:.5}", 360.0 * wheel.radius_ratio))?;
    log.say(1, format_args!("Pinion GC one rev degrees: {:.5}", 360.0 * pinion.radius_ratio))?;
    if pinion.radius_ratio > 1.0 {
        log.say(1, format_args!("pinion GC one rev degrees > 360, so cutting back to 360"))?;
        log.say(1, format_args!("(Clearly optimum pinion GC angle should be within one rev"))?;
    }
    log.say(1, format_args!("Wheel RR: {:.5}", wheel.radius_ratio))?;
    log.say(1, format_args!("Pinion RR: {:.5}\n", pinion.radius_ratio))?;
    log.say(1, format_args!("Wheel tooth tip angle:"))?;
    log.angle(wheel.tip_angle)?;
    log.say(1, format_args!("Pinion tooth tip angle"))?;
    log.angle(pinion.tip_angle)?;
    log.say(1, format_args!("Tooth tip gradiants:"))?;
    log.say(1, format_args!("Wheel TTG: {:.5}", wheel.tip_gradient))?;
    log.say(1, format_args!("Pinion TTG: {:.5}\n", pinion.tip_gradient))?;

    log.say(1, format_args!("Finding wheel GC angle"))?;
    log.scan_table(&wheel, config.options.scan)?;
    let solved_wheel = SolvedGear::solve(wheel, config.options.scan, "wheel");
    log.say(1, format_args!("Finding pinion GC angle:"))?;
    log.scan_table(&pinion, config.options.scan)?;
    let solved_pinion = SolvedGear::solve(pinion, config.options.scan, "pinion");
    let (solved_wheel, solved_pinion) = (solved_wheel?, solved_pinion?);

    log.say(1, format_args!("First approximation of wheel GC angle for addendum tip"))?;
    log.angle(solved_wheel.tip.bracket.1)?;
    log.say(1, format_args!("First approximation of pinion GC angle for addendum tip"))?;
    log.angle(solved_pinion.tip.bracket.1)?;
    log.say(1, format_args!("\n\nNow starting Newton-Raphson iteration for wheel GC\n"))?;
    log.say(1, format_args!("After iteration step {}, angle is:", solved_wheel.tip.iterations))?;
    log.angle(solved_wheel.tip.angle)?;
    log.say(1, format_args!("\n\nNow starting NR iteration for pinion GC\n"))?;
    log.say(1, format_args!("After iteration step {}, angle is:", solved_pinion.tip.iterations))?;
    log.angle(solved_pinion.tip.angle)?;
    log.say(1, format_args!("Wheel addendum tip height: {:.5}", solved_wheel.tip_height))?;
    log.say(1, format_args!("Pinion addendum tip height: {:.5}", solved_pinion.tip_height))?;

    let pair = GearPair::design(spec, config.options)?;
    let viewport = SvgViewport::for_pair(&pair);
    log.say(1, format_args!("Wheel bound radius: {:.5}", pair.wheel.geometry.bound_radius))?;
    log.say(1, format_args!("Pinion bound radius: {:.5}", pair.pinion.geometry.bound_radius))?;
    log.say(1, format_args!("leftmost x: {:.5}", viewport.leftmost_x))?;
    log.say(1, format_args!("bottommost y: {:.5}", viewport.bottommost_y))?;
    log.say(1, format_args!("rightmost x: {:.5}", viewport.rightmost_x))?;
    log.say(1, format_args!("topmost y: {:.5}", viewport.topmost_y))?;
    log.say(1, format_args!("unscaled height: {:.5}", viewport.unscaled_height()))?;
    log.say(1, format_args!("unscaled width: {:.5}", viewport.unscaled_width()))?;
    log.say(1, format_args!("svg height: {}", viewport.height))?;
    log.say(1, format_args!("svg width: {}", viewport.width))?;
    log.say(1, format_args!("vertical scale factor: {:.5}", viewport.vertical_scale))?;
    log.say(1, format_args!("horiz scale factor: {:.5}", viewport.horizontal_scale))?;
    log.say(1, format_args!("smaller scale factor: {:.5}", viewport.scale_factor))?;
    for (name, gear) in [("wheel", &pair.wheel), ("pinion", &pair.pinion)] {
        let shortest = gear.flank.chords().fold(f64::INFINITY, f64::min);
        log.say(
            2,
            format_args!(
                "{name} flank points: {}, outline points: {}, shortest chord: {:.5} ({:.5} of epsilon)",
                gear.flank.len(),
                gear.profile.points.len(),
                shortest,
                shortest / spec.epsilon
            ),
        )?;
    }

    let files = write_artifacts(&pair, &config.out_dir, config.formats, config.extrude_height)?;
    for f in &files {
        log.say(1, format_args!("wrote {}", f.display()))?;
    }

    let interference = match spec.mode {
        MeshMode::None => None,
        _ => {
            let report = check_interference(&pair.wheel.profile, &pair.pinion.profile, &pair.scene, config.samples);
            log.say(
                1,
                format_args!(
                    "minimum separation over {} mesh states: {:.9} modules (wheel {:.5}, pinion {:.5} degrees)",
                    config.samples, report.min_separation, report.worst_rotation.wheel, report.worst_rotation.pinion
                ),
            )?;
            Some(report)
        }
    };
    Ok(RunSummary { pair, files, interference })
}

/// Full command: parse, execute, report. Returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match parse_args(argv) {
        Ok(config) => config,
        Err(UsageError::Clap(e)) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { 0 } else { EXIT_USAGE };
        }
        Err(e) => {
            let _ = write!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    match execute(&config, out) {
        Ok(summary) if summary.meshes(config.interference_tolerance) => 0,
        Ok(summary) => {
            let report = summary.interference.expect("only meshed runs can fail the check");
            let _ = writeln!(
                err,
                "gears interfere: outlines overlap by {:.6} modules at wheel rotation {:.5} degrees",
                -report.min_separation, report.worst_rotation.wheel
            );
            EXIT_INTERFERENCE
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}
