use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failure to decode a mask file. `offset` is the byte position where
/// decoding stopped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("decode error at byte {offset}: {message}")]
pub struct DecodeError {
    pub offset: usize,
    pub message: String,
}

impl DecodeError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> Self {
        Self {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Decode(#[from] DecodeError),

    #[error("boundary trace has {len} points, at least 8 are required")]
    TraceTooShort { len: usize },

    #[error("boundary trace encloses zero area")]
    ZeroArea,

    #[error("no component with id {0}")]
    UnknownComponent(usize),

    #[error("unsupported derivative order {0}, expected 1 or 2")]
    UnsupportedOrder(u8),

    #[error("low-pass harmonic count {keep} out of range 0..={max}")]
    LowpassOutOfRange { keep: usize, max: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error(
        "degenerate parameterization at sample {index} (speed^2 = {speed_sq:e}); \
         apply a low-pass filter or resample the trace"
    )]
    DegenerateSpeed { index: usize, speed_sq: f64 },

    #[error("non-finite curvature at sample {index}")]
    NonFiniteCurvature { index: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("severity must be a positive finite number, got {0}")]
    InvalidSeverity(f64),

    #[error("convex hull is degenerate (fewer than 3 points or all collinear)")]
    DegenerateHull,

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("shape does not fit in a {width}x{height} canvas")]
    OutOfCanvas { width: usize, height: usize },
}
