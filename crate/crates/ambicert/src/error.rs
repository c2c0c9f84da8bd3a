//! Error type shared by the whole crate.
//!
//! Variants are grouped roughly by where they originate: signal construction,
//! weight/moment preconditions, certificate verification, and I/O. The CLI
//! maps them onto process exit codes in [`crate::cli`].

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A signal needs at least two samples to define a grid spacing.
    #[error("signal must contain at least {min} samples (got {got})")]
    TooFewSamples { min: usize, got: usize },

    /// Grid spacing must be a positive finite number.
    #[error("sample spacing must be positive and finite (got {0})")]
    BadSpacing(f64),

    /// A sample or grid value was NaN or infinite.
    #[error("non-finite value at sample index {0}")]
    NonFinite(usize),

    /// Generator parameters out of range (width <= 0, window reversed, ...).
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    /// A generated waveform does not fit its window: too much of its mass
    /// (or its support, for compactly supported shapes) lies outside.
    #[error("window too small: {detail}")]
    WindowTooSmall { detail: String },

    /// A weight passed to a moment routine had a significantly negative value.
    #[error("weight must be nonnegative: value {value:.3e} at index {index}")]
    NegativeWeight { index: usize, value: f64 },

    /// A weight passed to a moment routine had a significant imaginary part.
    #[error("weight must be real-valued: imaginary part {value:.3e} at index {index}")]
    ComplexWeight { index: usize, value: f64 },

    /// A weight was identically zero, so no center or bound can be defined.
    #[error("weight is identically zero")]
    ZeroWeight,

    /// The requested moment is dominated by the edge of the sampling window,
    /// i.e. the underlying integral does not converge and the discrete value
    /// is an artifact of truncation.
    #[error(
        "moment not finite (order {q}: the outer window tenth carries fraction \
         {tail_fraction:.3e}); use direction_bound with q < 1 instead"
    )]
    MomentNotFinite { q: f64, tail_fraction: f64 },

    /// A minorant certificate failed verification and cannot back a bound.
    #[error("minorant (a={a}, c={c}, q={q}) failed verification{}",
        witness.map(|x| format!("; inequality violated near x = {x:.6}")).unwrap_or_default())]
    UnverifiedMinorant {
        a: f64,
        c: f64,
        q: f64,
        witness: Option<f64>,
    },

    /// Catch-all for invalid arguments to library routines.
    #[error("{0}")]
    InvalidParameter(String),

    /// A signal CSV file could not be parsed.
    #[error("malformed signal CSV: {0}")]
    MalformedCsv(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
