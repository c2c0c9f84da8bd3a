//! Ambiguity surfaces of sampled waveforms, fractional Fourier transforms,
//! and certified zero-free regions around the origin of the ambiguity plane.
//!
//! The ambiguity function of a finite-energy signal `u`,
//!
//! ```text
//! A(u)(x, y) = ∫ u(t + x/2) · conj(u(t − x/2)) · e^{−2πiyt} dt,
//! ```
//!
//! measures how well `u` separates a delay `x` from a frequency shift `y`.
//! Its zeros control what a matched filter can and cannot distinguish, and a
//! classical family of inequalities turns moment data of `u` (and of its
//! fractional Fourier transforms) into *certified* radii below which `A(u)`
//! provably has no zero. This crate computes both sides of that story:
//!
//! - [`signal`]: sampled waveforms, generators, norms, moments, dispersions;
//! - [`frft`]: the fractional Fourier transform `F_α` with its exact group
//!   law and Fourier-eigenfunction behaviour;
//! - [`ambiguity`]: direct evaluation of `A(u)` at points, on grids, and
//!   along rays, including empirical first-zero scans;
//! - [`minorant`]: verified cosine minorants `a·cos x ≥ 1 − c|x|^q` and the
//!   constants `κ_q` they induce;
//! - [`certifier`]: zero-free rhombi and star regions assembled from moment
//!   bounds, orthogonality bounds for translates/modulates, and validation
//!   of every certificate against brute-force scans;
//! - [`io`]: CSV/JSON interchange for signals, grids, and reports;
//! - [`cli`]: the `ambicert` command-line front end.
//!
//! The `examples/` directory walks through each capability end to end; start
//! with `cargo run --example waveforms` and `cargo run --example certify_regions`.

#![forbid(unsafe_code)]

pub mod ambiguity;
pub mod certifier;
pub mod cli;
mod error;
pub mod frft;
mod interp;
pub mod io;
pub mod minorant;
mod numerics;
pub mod signal;

pub use error::{Error, Result};
pub use signal::{generate, GeneratorSpec, SampledSignal, Waveform};
