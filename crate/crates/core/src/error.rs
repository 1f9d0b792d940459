use thiserror::Error;

/// Everything that can go wrong between a pair of tooth counts and the files on disk.
#[derive(Debug, Error)]
pub enum GearError {
    #[error("pinion cannot have more teeth than wheel")]
    PinionLargerThanWheel,

    #[error("a gear needs at least 3 teeth (got {0})")]
    TooFewTeeth(u32),

    #[error("Wheel tooth gradient > 1: that's unreasonable (gradient {0:.5})")]
    TipGradientTooLarge(f64),

    #[error("invalid gear pair: {0}")]
    InvalidSpec(String),

    #[error("error: could not find {gear} GC stopping angle")]
    ScanFailed { gear: &'static str },

    #[error("Newton iteration did not converge after {iterations} iterations (last angle {last:.9} rad)")]
    NoConvergence { iterations: usize, last: f64 },

    #[error("chord tolerance {epsilon} is too small: more than {limit} segments required")]
    ToleranceTooSmall { epsilon: f64, limit: usize },

    #[error("clearance radius {0:.5} is not positive; reduce the clearance")]
    NegativeClearanceRadius(f64),

    #[error("svg transform produced a non-finite value: halting")]
    NonFiniteCoordinate,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl GearError {
    /// Process exit status used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            GearError::PinionLargerThanWheel
            | GearError::TooFewTeeth(_)
            | GearError::TipGradientTooLarge(_)
            | GearError::InvalidSpec(_) => 3,
            GearError::ScanFailed { .. } | GearError::NoConvergence { .. } => 4,
            GearError::ToleranceTooSmall { .. } => 5,
            GearError::NegativeClearanceRadius(_) => 6,
            GearError::NonFiniteCoordinate => 7,
            GearError::Io(_) => 8,
        }
    }
}

pub type Result<T, E = GearError> = std::result::Result<T, E>;
