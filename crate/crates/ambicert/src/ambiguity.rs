//! The ambiguity surface `A(u)` and empirical zero scans.
//!
//! ```text
//! A(u)(x, y) = ∫ u(t + x/2) · conj(u(t − x/2)) · e^{−2πiyt} dt
//! ```
//!
//! `x` is delay, `y` is frequency shift (Doppler). `A(u)(0, 0) = ‖u‖₂²` is
//! the global maximum in magnitude; the surface is Hermitian under point
//! reflection, `A(u)(−x, −y) = conj A(u)(x, y)`, so both rays of any
//! direction carry identical magnitudes. The half-shifts `u(t ± x/2)` are
//! taken band-limited (see the interpolation module); the `y`-modulation is
//! exact. Everything here is direct quadrature — the reference the certified
//! bounds are validated against, so it stays deliberately simple.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::frft::frft;
use crate::interp::SpectralInterp;
use crate::numerics::{bisect_root, golden_section_min, modulated_sum, trapezoid_weight};
use crate::signal::SampledSignal;

/// Default relative magnitude (vs `‖u‖₂²`) below which a refined local
/// minimum of `|A|` counts as an empirical zero.
pub const DEFAULT_EPS_REL: f64 = 1e-6;

/// Number of steps a ray scan takes between 0 and `r_max`.
pub const RAY_STEPS: usize = 1024;

/// Bracket tolerance (in the radius) when refining a candidate zero.
const REFINE_TOL: f64 = 1e-9;

/// Offsets below this are snapped to the axis: `r·cos(π/2)` lands at ~1e−16
/// rather than 0, and an exactly-zero delay means the evaluator can skip
/// interpolation entirely.
const AXIS_SNAP: f64 = 1e-14;

/// Reusable ambiguity evaluator for one signal.
///
/// Construction is cheap; the band-limited upsampling is built lazily on the
/// first evaluation with a nonzero delay, so pure Doppler cuts (`x = 0`)
/// never pay for it.
pub struct AmbiguityEvaluator {
    source: SampledSignal,
    norm_sq: f64,
    interp: OnceLock<SpectralInterp>,
}

impl AmbiguityEvaluator {
    pub fn new(u: &SampledSignal) -> Self {
        let norm = u.l2_norm();
        Self { source: u.clone(), norm_sq: norm * norm, interp: OnceLock::new() }
    }

    /// `‖u‖₂²`, which is also `A(u)(0, 0)`.
    pub fn norm_sq(&self) -> f64 {
        self.norm_sq
    }

    fn interp(&self) -> &SpectralInterp {
        self.interp.get_or_init(|| SpectralInterp::new(&self.source))
    }

    /// Evaluate `A(u)` at one point of the (delay, Doppler) plane.
    pub fn point(&self, x: f64, y: f64) -> Complex64 {
        let x = if x.abs() < AXIS_SNAP { 0.0 } else { x };
        let y = if y.abs() < AXIS_SNAP { 0.0 } else { y };
        let u = &self.source;
        let n = u.len();
        let coeffs: Vec<Complex64> = if x == 0.0 {
            u.samples
                .iter()
                .enumerate()
                .map(|(j, z)| Complex64::new(z.norm_sqr() * trapezoid_weight(j, n) * u.dt, 0.0))
                .collect()
        } else {
            let itp = self.interp();
            let half = 0.5 * x;
            (0..n)
                .map(|j| {
                    let t = u.t(j);
                    itp.eval(t + half)
                        * itp.eval(t - half).conj()
                        * (trapezoid_weight(j, n) * u.dt)
                })
                .collect()
        };
        let rate = -2.0 * PI * y;
        modulated_sum(&coeffs, rate * u.t0, rate * u.dt)
    }
}

/// One-off evaluation of `A(u)(x, y)`.
pub fn ambiguity_point(u: &SampledSignal, x: f64, y: f64) -> Complex64 {
    AmbiguityEvaluator::new(u).point(x, y)
}

/// `A(u)` tabulated on a Cartesian grid, row-major with `y` as the outer
/// (row) index: `values[iy * xs.len() + ix] = A(u)(xs[ix], ys[iy])`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AmbiguityGrid {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub values: Vec<Complex64>,
}

impl AmbiguityGrid {
    pub fn value(&self, ix: usize, iy: usize) -> Complex64 {
        self.values[iy * self.xs.len() + ix]
    }
}

/// Tabulate `A(u)` on the product grid `xs × ys`.
pub fn ambiguity_grid(u: &SampledSignal, xs: &[f64], ys: &[f64]) -> Result<AmbiguityGrid> {
    for &v in xs.iter().chain(ys) {
        if !v.is_finite() {
            return Err(Error::InvalidParameter("grid coordinates must be finite".into()));
        }
    }
    let eval = AmbiguityEvaluator::new(u);
    let values: Vec<Complex64> = ys
        .par_iter()
        .flat_map_iter(|&y| xs.iter().map(move |&x| (x, y)))
        .map(|(x, y)| eval.point(x, y))
        .collect();
    Ok(AmbiguityGrid { xs: xs.to_vec(), ys: ys.to_vec(), values })
}

/// Section of the ambiguity surface along direction `θ` via the rotation
/// route: `A(u)(r cos θ, r sin θ) = F[|F_{θ−π/2} u|²](r)`, evaluated for each
/// requested (possibly negative) radius.
///
/// Agrees with [`ambiguity_point`] along the same ray but costs one
/// fractional transform plus one modulated sum per radius, which is how the
/// certifier prices whole directions.
pub fn cross_section(u: &SampledSignal, theta: f64, radii: &[f64]) -> Result<Vec<Complex64>> {
    let rotated = frft(u, theta - FRAC_PI_2)?;
    let w = rotated.power();
    let n = w.len();
    let coeffs: Vec<Complex64> = w
        .samples
        .iter()
        .enumerate()
        .map(|(j, z)| z * (trapezoid_weight(j, n) * w.dt))
        .collect();
    Ok(radii
        .par_iter()
        .map(|&r| {
            let rate = -2.0 * PI * r;
            modulated_sum(&coeffs, rate * w.t0, rate * w.dt)
        })
        .collect())
}

/// Magnitudes of `A(u)` sampled along both rays of one direction, plus the
/// first detected zero radius (if any).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RayScan {
    /// Direction angle in `[0, π)` (the opposite ray is scanned too).
    pub theta: f64,
    /// Probed radii, ascending from 0 to `r_max`.
    pub radii: Vec<f64>,
    /// `|A(u)(r cos θ, r sin θ)|` per radius.
    pub magnitudes_pos: Vec<f64>,
    /// `|A(u)(−r cos θ, −r sin θ)|` per radius; equals `magnitudes_pos`
    /// exactly by the Hermitian symmetry of the surface.
    pub magnitudes_neg: Vec<f64>,
    /// Smallest radius at which either ray's magnitude drops below the zero
    /// threshold, refined to [`REFINE_TOL`]; `None` when no zero is found up
    /// to `r_max`.
    pub first_zero: Option<f64>,
}

/// Scan `|A(u)|` along direction `theta` out to `r_max` and hunt for the
/// first zero, reusing an existing evaluator.
///
/// The scan samples [`RAY_STEPS`] radii; every interior local minimum (and
/// every node already below threshold) becomes a candidate, refined by
/// golden-section (for dips) or bisection (for entries into a flat zero
/// region). A refined magnitude below `eps_rel · ‖u‖₂²` counts as a zero.
pub fn first_zero_with(
    eval: &AmbiguityEvaluator,
    theta: f64,
    r_max: f64,
    eps_rel: f64,
) -> Result<RayScan> {
    if !theta.is_finite() {
        return Err(Error::InvalidParameter(format!("direction angle must be finite, got {theta}")));
    }
    if !(r_max.is_finite() && r_max > 0.0) {
        return Err(Error::InvalidParameter(format!("scan radius must be positive, got {r_max}")));
    }
    if !(eps_rel.is_finite() && eps_rel > 0.0) {
        return Err(Error::InvalidParameter(format!("zero threshold must be positive, got {eps_rel}")));
    }
    let (dx, dy) = (theta.cos(), theta.sin());
    let step = r_max / RAY_STEPS as f64;
    let radii: Vec<f64> = (0..=RAY_STEPS).map(|i| i as f64 * step).collect();
    let magnitudes_pos: Vec<f64> =
        radii.par_iter().map(|&r| eval.point(r * dx, r * dy).norm()).collect();
    let magnitudes_neg: Vec<f64> =
        radii.par_iter().map(|&r| eval.point(-r * dx, -r * dy).norm()).collect();

    let threshold = eps_rel * eval.norm_sq();
    let mag_at = |r: f64| eval.point(r * dx, r * dy).norm();
    let mut first_zero = None;
    for i in 1..=RAY_STEPS {
        let m = magnitudes_pos[i];
        if m <= threshold {
            // Entered a sub-threshold region: locate the crossing radius.
            let r = if magnitudes_pos[i - 1] > threshold {
                bisect_root(|r| mag_at(r) - threshold, radii[i - 1], radii[i], REFINE_TOL)
                    .unwrap_or(radii[i])
            } else {
                radii[i]
            };
            first_zero = Some(r);
            break;
        }
        if i < RAY_STEPS && m <= magnitudes_pos[i - 1] && m < magnitudes_pos[i + 1] {
            // Interior dip: refine and test against the threshold.
            let (r, value) = golden_section_min(mag_at, radii[i - 1], radii[i + 1], REFINE_TOL);
            if value <= threshold {
                first_zero = Some(r);
                break;
            }
        }
    }
    Ok(RayScan { theta, radii, magnitudes_pos, magnitudes_neg, first_zero })
}

/// Convenience wrapper building a fresh evaluator for one scan.
pub fn first_zero_on_ray(
    u: &SampledSignal,
    theta: f64,
    r_max: f64,
    eps_rel: f64,
) -> Result<RayScan> {
    first_zero_with(&AmbiguityEvaluator::new(u), theta, r_max, eps_rel)
}
