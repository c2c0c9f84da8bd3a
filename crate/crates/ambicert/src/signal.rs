//! Sampled waveforms on uniform grids, the built-in generator family, and the
//! quadrature toolkit (norms, Fourier transform, absolute moments, centred
//! dispersion) that everything else in the crate builds on.
//!
//! A [`SampledSignal`] is a finite-energy function known on `t_j = t0 + j·dt`
//! and treated as exactly zero outside its window. All integrals are trapezoid
//! quadratures on that grid, which is spectrally accurate for the smooth,
//! rapidly decaying waveforms the generators produce; the one discontinuous
//! generator (`rect`) pins its jumps onto grid nodes at half height so its
//! quadratures reduce to plain trapezoid sums over the support.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, SQRT_2};

use crate::error::{Error, Result};
use crate::numerics::{golden_section_min, modulated_sum, trapezoid_weight};

/// Fraction of a generated signal's energy allowed to fall outside its window.
pub const TAIL_MASS_LIMIT: f64 = 1e-12;

/// Values this far below zero (or with this much imaginary part) are treated
/// as rounding noise by the weight routines and clipped; anything larger is
/// rejected as "not a non-negative weight".
pub const WEIGHT_CLIP: f64 = 1e-12;

/// How close (in grid units) a rect jump must land to a sample point.
const ALIGNMENT_TOL: f64 = 1e-6;

/// Highest Hermite order the generator accepts; beyond this the default-sized
/// windows no longer hold the waveform's mass to [`TAIL_MASS_LIMIT`].
const MAX_HERMITE_ORDER: u32 = 64;

/// Candidate-grid size for the non-convex (q < 1) dispersion search.
const DISPERSION_COARSE_POINTS: usize = 512;

/// Bracket tolerance (in the center argument) for dispersion optimisation.
const DISPERSION_TOL: f64 = 1e-9;

/// A complex-valued signal sampled on the uniform grid `t_j = t0 + j·dt`.
///
/// The same type carries frequency-domain data (then `dt` is the frequency
/// step and `t0` the first frequency), and real non-negative weights such as
/// `|u|²` (stored in the real part).
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    pub samples: Vec<Complex64>,
    pub dt: f64,
    pub t0: f64,
}

impl SampledSignal {
    /// Validating constructor: at least two finite samples on a positive grid.
    pub fn new(samples: Vec<Complex64>, dt: f64, t0: f64) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::TooFewSamples { min: 2, got: samples.len() });
        }
        if !dt.is_finite() || dt <= 0.0 {
            return Err(Error::BadSpacing(dt));
        }
        if !t0.is_finite() {
            return Err(Error::InvalidParameter(format!("grid origin must be finite, got {t0}")));
        }
        if let Some(j) = samples.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite(j));
        }
        Ok(Self { samples, dt, t0 })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Grid point `t_j`.
    #[inline]
    pub fn t(&self, j: usize) -> f64 {
        self.t0 + j as f64 * self.dt
    }

    /// Last grid point.
    pub fn t_end(&self) -> f64 {
        self.t(self.len() - 1)
    }

    /// The window `[t0, t_end]` the signal lives on.
    pub fn window(&self) -> (f64, f64) {
        (self.t0, self.t_end())
    }

    /// Trapezoid approximation of `(∫|u|²)^{1/2}`.
    pub fn l2_norm(&self) -> f64 {
        let n = self.len();
        let mut acc = 0.0;
        for (j, z) in self.samples.iter().enumerate() {
            acc += trapezoid_weight(j, n) * z.norm_sqr();
        }
        (acc * self.dt).sqrt()
    }

    /// Trapezoid approximation of `∫|u|`.
    pub fn l1_norm(&self) -> f64 {
        let n = self.len();
        let mut acc = 0.0;
        for (j, z) in self.samples.iter().enumerate() {
            acc += trapezoid_weight(j, n) * z.norm();
        }
        acc * self.dt
    }

    /// The pointwise power `|u|²` as a real non-negative weight on the same grid.
    pub fn power(&self) -> SampledSignal {
        SampledSignal {
            samples: self.samples.iter().map(|z| Complex64::new(z.norm_sqr(), 0.0)).collect(),
            dt: self.dt,
            t0: self.t0,
        }
    }
}

/// The built-in waveform family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Waveform {
    /// `2^{1/4} e^{−πt²}`: unit energy and invariant under the Fourier transform.
    Gaussian,
    /// `n`-th Hermite function, the Fourier eigenfunction with eigenvalue `(−i)^n`.
    Hermite { n: u32 },
    /// Indicator of `[−width/2, width/2]` at height `1/√width`, jumps stored at
    /// half height on grid-aligned nodes.
    Rect { width: f64 },
    /// Gaussian envelope with quadratic phase `e^{iπ·rate·t²}`.
    Chirp { rate: f64 },
    /// Two Gaussian bumps centred at `±separation/2` with scale `pulse_width`,
    /// normalised to unit energy by quadrature.
    TwoPulse { separation: f64, pulse_width: f64 },
}

impl std::fmt::Display for Waveform {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Waveform::Gaussian => write!(f, "gaussian"),
            Waveform::Hermite { n } => write!(f, "hermite({n})"),
            Waveform::Rect { width } => write!(f, "rect({width})"),
            Waveform::Chirp { rate } => write!(f, "chirp({rate})"),
            Waveform::TwoPulse { separation, pulse_width } => {
                write!(f, "two_pulse({separation},{pulse_width})")
            }
        }
    }
}

/// A waveform plus the grid to sample it on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub waveform: Waveform,
    pub n: usize,
    pub window: (f64, f64),
}

impl GeneratorSpec {
    /// Spec with the default grid: 1025 samples on `[−8, 8]`.
    ///
    /// The odd count makes `dt = 1/64` exactly, so the grid contains `t = 0`
    /// and the `±1/2` jump points of the unit rect; with a power-of-two-ish
    /// even count those land between samples and the rect generator would
    /// have to reject its own default.
    pub fn new(waveform: Waveform) -> Self {
        Self { waveform, n: 1025, window: (-8.0, 8.0) }
    }

    pub fn with_grid(mut self, n: usize, window: (f64, f64)) -> Self {
        self.n = n;
        self.window = window;
        self
    }
}

/// Single Gaussian sample `2^{1/4} e^{−πt²}`.
///
/// Kept as the one shared definition so `gaussian`, `hermite(0)` and the
/// chirp envelope produce bit-identical values.
fn gaussian_point(t: f64) -> f64 {
    SQRT_2.sqrt() * (-PI * t * t).exp()
}

/// Value of the `n`-th Hermite function at `t`.
///
/// Uses the normalised three-term recurrence
/// `p_{k+1} = x·√(2/(k+1))·p_k − √(k/(k+1))·p_{k−1}` with `x = √(2π)·t`,
/// which keeps every intermediate on the scale of the final value (the raw
/// Hermite polynomials overflow near order 60 on wide windows).
pub fn hermite_value(n: u32, t: f64) -> f64 {
    let x = (2.0 * PI).sqrt() * t;
    let mut prev = 1.0;
    if n == 0 {
        return gaussian_point(t);
    }
    let mut cur = SQRT_2 * x;
    for k in 1..n {
        let kf = k as f64;
        let next = x * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur * gaussian_point(t)
}

/// Sample a waveform on the requested grid.
///
/// Every decaying kind is checked to hold all but [`TAIL_MASS_LIMIT`] of its
/// energy inside the window; `rect` instead requires its jumps to land on
/// grid nodes strictly inside the window. All kinds come out with unit
/// energy: analytically normalised for `gaussian`/`hermite`/`chirp`, scaled
/// by quadrature for `two_pulse`, and `rect` carries height `1/√width` whose
/// quadrature norm approaches 1 as `O(dt)` (exact in the integral sense).
pub fn generate(spec: &GeneratorSpec) -> Result<SampledSignal> {
    let (lo, hi) = spec.window;
    if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(Error::InvalidGenerator(format!("window [{lo}, {hi}] must be finite and increasing")));
    }
    if spec.n < 16 {
        return Err(Error::InvalidGenerator(format!("need at least 16 samples, got {}", spec.n)));
    }
    let n = spec.n;
    let dt = (hi - lo) / (n as f64 - 1.0);

    match &spec.waveform {
        Waveform::Gaussian => {
            sampled_with_tail_check(|t| Complex64::new(gaussian_point(t), 0.0), n, dt, lo)
        }
        Waveform::Hermite { n: order } => {
            if *order > MAX_HERMITE_ORDER {
                return Err(Error::InvalidGenerator(format!(
                    "hermite order {order} exceeds the supported maximum {MAX_HERMITE_ORDER}"
                )));
            }
            let order = *order;
            sampled_with_tail_check(|t| Complex64::new(hermite_value(order, t), 0.0), n, dt, lo)
        }
        Waveform::Chirp { rate } => {
            if !rate.is_finite() {
                return Err(Error::InvalidGenerator(format!("chirp rate {rate} must be finite")));
            }
            let rate = *rate;
            sampled_with_tail_check(
                |t| Complex64::from_polar(1.0, PI * rate * t * t) * gaussian_point(t),
                n,
                dt,
                lo,
            )
        }
        Waveform::TwoPulse { separation, pulse_width } => {
            if !(separation.is_finite() && *separation >= 0.0) {
                return Err(Error::InvalidGenerator(format!("separation {separation} must be finite and ≥ 0")));
            }
            if !(pulse_width.is_finite() && *pulse_width > 0.0) {
                return Err(Error::InvalidGenerator(format!("pulse width {pulse_width} must be positive")));
            }
            let (s, w) = (*separation, *pulse_width);
            let bump = move |t: f64| {
                let a = (t - 0.5 * s) / w;
                let b = (t + 0.5 * s) / w;
                Complex64::new((-PI * a * a).exp() + (-PI * b * b).exp(), 0.0)
            };
            let mut u = sampled_with_tail_check(bump, n, dt, lo)?;
            let norm = u.l2_norm();
            if norm == 0.0 {
                return Err(Error::InvalidGenerator("two_pulse collapsed to zero on this grid".into()));
            }
            for z in &mut u.samples {
                *z /= norm;
            }
            Ok(u)
        }
        Waveform::Rect { width } => generate_rect(*width, n, dt, lo),
    }
}

/// Sample a decaying waveform and verify its window holds the energy.
///
/// The tail is measured by extending the same grid one full window-length to
/// each side and comparing trapezoid masses; for anything Gaussian-tailed the
/// extension is far past the point of numerical extinction.
fn sampled_with_tail_check<F>(f: F, n: usize, dt: f64, lo: f64) -> Result<SampledSignal>
where
    F: Fn(f64) -> Complex64,
{
    let samples: Vec<Complex64> = (0..n).map(|j| f(lo + j as f64 * dt)).collect();
    if let Some(j) = samples.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite(j));
    }
    let inside: f64 = samples
        .iter()
        .enumerate()
        .map(|(j, z)| trapezoid_weight(j, n) * z.norm_sqr())
        .sum();
    let hi = lo + (n as f64 - 1.0) * dt;
    let mut outside = 0.0;
    for j in 0..n {
        // Mirror grids [lo − span, lo] and [hi, hi + span]; the shared
        // endpoints carry weight 1/2 on each side just as in a joined
        // trapezoid rule over the tripled window.
        let left = f(lo - (n - 1 - j) as f64 * dt).norm_sqr();
        let right = f(hi + j as f64 * dt).norm_sqr();
        let w = trapezoid_weight(j, n);
        outside += w * left + w * right;
    }
    let total = inside + outside;
    if total == 0.0 {
        return Err(Error::InvalidGenerator("waveform is identically zero on this grid".into()));
    }
    if outside / total > TAIL_MASS_LIMIT {
        return Err(Error::WindowTooSmall {
            detail: format!(
                "{:.3e} of the waveform's energy lies outside the window (limit {TAIL_MASS_LIMIT:.0e})",
                outside / total
            ),
        });
    }
    SampledSignal::new(samples, dt, lo)
}

/// Build the grid-aligned rectangular pulse.
fn generate_rect(width: f64, n: usize, dt: f64, lo: f64) -> Result<SampledSignal> {
    if !(width.is_finite() && width > 0.0) {
        return Err(Error::InvalidGenerator(format!("rect width {width} must be positive")));
    }
    let lo_pos = (-0.5 * width - lo) / dt;
    let hi_pos = (0.5 * width - lo) / dt;
    let j_lo = lo_pos.round();
    let j_hi = hi_pos.round();
    if (lo_pos - j_lo).abs() > ALIGNMENT_TOL || (hi_pos - j_hi).abs() > ALIGNMENT_TOL {
        return Err(Error::InvalidGenerator(format!(
            "rect edges ±{} do not land on grid nodes (offsets {:.3e}, {:.3e} of a step); \
             choose window and N so the jumps are grid-aligned",
            0.5 * width,
            lo_pos - j_lo,
            hi_pos - j_hi,
        )));
    }
    if j_lo < 1.0 || j_hi > (n as f64 - 2.0) {
        return Err(Error::WindowTooSmall {
            detail: format!(
                "rect support [±{}] must lie strictly inside the window with at least one zero sample on each side",
                0.5 * width
            ),
        });
    }
    let (j_lo, j_hi) = (j_lo as usize, j_hi as usize);
    if j_hi <= j_lo {
        return Err(Error::InvalidGenerator(format!(
            "rect width {width} is below the grid resolution dt = {dt:.3e}"
        )));
    }
    let height = 1.0 / width.sqrt();
    let samples: Vec<Complex64> = (0..n)
        .map(|j| {
            let v = if j == j_lo || j == j_hi {
                0.5 * height
            } else if j > j_lo && j < j_hi {
                height
            } else {
                0.0
            };
            Complex64::new(v, 0.0)
        })
        .collect();
    SampledSignal::new(samples, dt, lo)
}

/// Fourier transform `û(ξ) = ∫ u(t) e^{−2πiξt} dt` on its natural grid.
///
/// The output frequency step is `1/(N·dt)` and the grid extends at least to
/// `±N/(2·span)` (the bandwidth the time grid can represent), symmetric about
/// zero. The grid origin `t0` enters through explicit phase factors, so the
/// result is the plain quadrature of the integral, not a circular DFT.
pub fn fourier(u: &SampledSignal) -> SampledSignal {
    let n = u.len();
    let dxi = 1.0 / (n as f64 * u.dt);
    // ceil(N² / (2(N−1))) frequency steps reach N/(2·span).
    let k_half = (n * n).div_ceil(2 * (n - 1));
    let m = 2 * k_half + 1;
    let xi0 = -(k_half as f64) * dxi;
    let coeffs: Vec<Complex64> = u
        .samples
        .iter()
        .enumerate()
        .map(|(j, z)| z * trapezoid_weight(j, n) * u.dt)
        .collect();
    let samples: Vec<Complex64> = (0..m)
        .into_par_iter()
        .map(|k| {
            let xi = xi0 + k as f64 * dxi;
            modulated_sum(&coeffs, -2.0 * PI * xi * u.t0, -2.0 * PI * xi * u.dt)
        })
        .collect();
    SampledSignal { samples, dt: dxi, t0: xi0 }
}

/// Extract a non-negative real weight from a signal, clipping rounding noise.
fn weight_values(w: &SampledSignal) -> Result<Vec<f64>> {
    w.samples
        .iter()
        .enumerate()
        .map(|(j, z)| {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite(j));
            }
            if z.im.abs() > WEIGHT_CLIP {
                return Err(Error::ComplexWeight { index: j, value: z.im });
            }
            if z.re < -WEIGHT_CLIP {
                return Err(Error::NegativeWeight { index: j, value: z.re });
            }
            Ok(z.re.max(0.0))
        })
        .collect()
}

/// Trapezoid sum `Σ w_j |t_j − t0|^q v_j dt` shared by the moment routines.
fn moment_sum(values: &[f64], dt: f64, grid_t0: f64, q: f64, center: f64) -> f64 {
    let n = values.len();
    let mut acc = 0.0;
    for (j, &v) in values.iter().enumerate() {
        if v == 0.0 {
            continue;
        }
        let t = grid_t0 + j as f64 * dt;
        acc += trapezoid_weight(j, n) * (t - center).abs().powf(q) * v;
    }
    acc * dt
}

/// Absolute moment `∫ |t − t0|^q w(t) dt` of a non-negative weight.
pub fn moment_l1(w: &SampledSignal, q: f64, t0: f64) -> Result<f64> {
    if !(q.is_finite() && q > 0.0) {
        return Err(Error::InvalidParameter(format!("moment order q must be positive, got {q}")));
    }
    if !t0.is_finite() {
        return Err(Error::InvalidParameter(format!("moment center must be finite, got {t0}")));
    }
    let values = weight_values(w)?;
    Ok(moment_sum(&values, w.dt, w.t0, q, t0))
}

/// The centred moment of a weight: order, minimising center, infimum value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DispersionProfile {
    pub q: f64,
    pub center: f64,
    pub value: f64,
}

/// Minimise `t0 ↦ ∫ |t − t0|^q w(t) dt` over the signal window.
///
/// For `q ≥ 1` the objective is convex, so a golden-section search over the
/// window converges to the global minimum. For `0 < q < 1` it can have one
/// basin per bump of `w`, so a coarse scan (≥ [`DISPERSION_COARSE_POINTS`]
/// candidates) picks the basin and golden-section refines within it. At
/// `q = 2` the closed-form centroid is also evaluated and the better of the
/// two centers is kept; they agree to optimiser tolerance on every weight.
///
/// One caveat at exactly `q = 1`: the objective is piecewise linear with
/// kinks at the grid nodes, so its minimum can be flat across a whole grid
/// cell. The reported `value` is still exact, but the `center` is then only
/// determined to within one cell (`dt`).
pub fn dispersion_inf(w: &SampledSignal, q: f64) -> Result<DispersionProfile> {
    if !(q.is_finite() && q > 0.0) {
        return Err(Error::InvalidParameter(format!("moment order q must be positive, got {q}")));
    }
    let values = weight_values(w)?;
    let mass: f64 = values
        .iter()
        .enumerate()
        .map(|(j, &v)| trapezoid_weight(j, w.len()) * v)
        .sum();
    if mass <= 0.0 {
        return Err(Error::ZeroWeight);
    }
    let objective = |c: f64| moment_sum(&values, w.dt, w.t0, q, c);
    let (lo, hi) = w.window();
    let (mut center, mut value) = if q >= 1.0 {
        golden_section_min(objective, lo, hi, DISPERSION_TOL)
    } else {
        // Non-convex regime: scan, then refine inside the winning bracket.
        let m = DISPERSION_COARSE_POINTS.max(2);
        let step = (hi - lo) / (m as f64 - 1.0);
        let mut best = (0, f64::INFINITY);
        for i in 0..m {
            let v = objective(lo + i as f64 * step);
            if v < best.1 {
                best = (i, v);
            }
        }
        let b_lo = lo + best.0.saturating_sub(1) as f64 * step;
        let b_hi = (lo + (best.0 + 1) as f64 * step).min(hi);
        golden_section_min(objective, b_lo, b_hi, DISPERSION_TOL)
    };
    if q == 2.0 {
        let weighted_t: f64 = values
            .iter()
            .enumerate()
            .map(|(j, &v)| trapezoid_weight(j, w.len()) * v * w.t(j))
            .sum();
        let centroid = weighted_t / mass;
        let at_centroid = objective(centroid);
        if at_centroid < value {
            center = centroid;
            value = at_centroid;
        }
    }
    Ok(DispersionProfile { q, center, value })
}

/// Fraction of the moment `∫|t − center|^q w` carried by grid nodes in the
/// outermost tenth of the window (distance ≥ 0.9 of the maximum from
/// `center`).
///
/// A genuinely convergent moment puts numerically nothing there, while a
/// window-truncated divergent one (rect's frequency side, say) keeps growing
/// right up to the edge; callers use this to refuse to certify from moments
/// that are artifacts of truncation.
pub fn moment_tail_fraction(w: &SampledSignal, q: f64, center: f64) -> Result<f64> {
    let values = weight_values(w)?;
    let d_max = (w.t0 - center).abs().max((w.t_end() - center).abs());
    if d_max <= 0.0 {
        return Err(Error::InvalidParameter("degenerate window for tail estimate".into()));
    }
    let n = values.len();
    let mut total = 0.0;
    let mut tail = 0.0;
    for (j, &v) in values.iter().enumerate() {
        let d = (w.t(j) - center).abs();
        let term = trapezoid_weight(j, n) * d.powf(q) * v;
        total += term;
        if d >= 0.9 * d_max {
            tail += term;
        }
    }
    if total <= 0.0 {
        return Err(Error::ZeroWeight);
    }
    Ok(tail / total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn gaussian_default() -> SampledSignal {
        generate(&GeneratorSpec::new(Waveform::Gaussian)).unwrap()
    }

    #[test]
    fn gaussian_has_unit_norm_and_matches_formula() {
        let u = gaussian_default();
        assert_relative_eq!(u.l2_norm(), 1.0, epsilon = 1e-9);
        let j = 512;
        let t = u.t(j);
        assert_relative_eq!(u.samples[j].re, SQRT_2.sqrt() * (-PI * t * t).exp(), epsilon = 1e-15);
        assert_eq!(u.samples[j].im, 0.0);
    }

    #[test]
    fn hermite_zero_is_the_gaussian_bit_for_bit() {
        let g = gaussian_default();
        let h0 = generate(&GeneratorSpec::new(Waveform::Hermite { n: 0 })).unwrap();
        assert_eq!(g.samples, h0.samples);
    }

    #[test]
    fn hermite_functions_are_orthonormal() {
        let hs: Vec<SampledSignal> = (0..=6)
            .map(|n| generate(&GeneratorSpec::new(Waveform::Hermite { n })).unwrap())
            .collect();
        for (a, ha) in hs.iter().enumerate() {
            for (b, hb) in hs.iter().enumerate() {
                let n = ha.len();
                let ip: f64 = (0..n)
                    .map(|j| trapezoid_weight(j, n) * (ha.samples[j] * hb.samples[j].conj()).re)
                    .sum::<f64>()
                    * ha.dt;
                let expect = if a == b { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(ip, expect, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn chirp_with_zero_rate_is_the_gaussian() {
        let g = gaussian_default();
        let c = generate(&GeneratorSpec::new(Waveform::Chirp { rate: 0.0 })).unwrap();
        for (a, b) in g.samples.iter().zip(&c.samples) {
            assert_abs_diff_eq!(a.re, b.re, epsilon = 1e-15);
            assert_abs_diff_eq!(a.im, b.im, epsilon = 1e-15);
        }
    }

    #[test]
    fn chirp_magnitude_equals_gaussian_envelope() {
        let g = gaussian_default();
        let c = generate(&GeneratorSpec::new(Waveform::Chirp { rate: 3.0 })).unwrap();
        for (a, b) in g.samples.iter().zip(&c.samples) {
            assert_abs_diff_eq!(a.norm(), b.norm(), epsilon = 1e-14);
        }
        assert_relative_eq!(c.l2_norm(), 1.0, epsilon = 1e-9);
    }

    #[test]
    fn two_pulse_is_unit_norm_and_even() {
        let spec = GeneratorSpec::new(Waveform::TwoPulse { separation: 3.0, pulse_width: 0.5 })
            .with_grid(1025, (-8.0, 8.0));
        let u = generate(&spec).unwrap();
        assert_relative_eq!(u.l2_norm(), 1.0, epsilon = 1e-12);
        let n = u.len();
        for j in 0..n {
            assert_abs_diff_eq!(u.samples[j].re, u.samples[n - 1 - j].re, epsilon = 1e-13);
        }
    }

    /// Grid aligned so the rect(1) jumps at ±1/2 land on nodes.
    fn rect_unit(n: usize, half_window: f64) -> SampledSignal {
        let spec = GeneratorSpec::new(Waveform::Rect { width: 1.0 })
            .with_grid(n, (-half_window, half_window));
        generate(&spec).unwrap()
    }

    #[test]
    fn rect_l1_norm_is_exact_on_aligned_grid() {
        let u = rect_unit(129, 1.0); // dt = 1/64, jumps at ±32 steps
        assert_abs_diff_eq!(u.l1_norm(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn rect_quadrature_energy_converges_to_one_as_dt() {
        // Half-height jumps make the quadrature energy 1 − dt/2 exactly.
        for (n, hw) in [(129, 1.0), (1025, 1.0), (4097, 2.0)] {
            let u = rect_unit(n, hw);
            let e = u.l2_norm().powi(2);
            assert_abs_diff_eq!(e, 1.0 - 0.5 * u.dt, epsilon = 1e-12);
            assert!((e - 1.0).abs() <= u.dt);
        }
    }

    #[test]
    fn rect_rejects_misaligned_grid() {
        let spec =
            GeneratorSpec::new(Waveform::Rect { width: 1.0 }).with_grid(1024, (-8.0, 8.0));
        assert!(matches!(generate(&spec), Err(Error::InvalidGenerator(_))));
    }

    #[test]
    fn rect_rejects_support_touching_window_edge() {
        let spec = GeneratorSpec::new(Waveform::Rect { width: 2.0 }).with_grid(129, (-1.0, 1.0));
        assert!(matches!(generate(&spec), Err(Error::WindowTooSmall { .. })));
    }

    #[test]
    fn gaussian_rejects_window_that_clips_its_tail() {
        let spec = GeneratorSpec::new(Waveform::Gaussian).with_grid(256, (-2.0, 2.0));
        assert!(matches!(generate(&spec), Err(Error::WindowTooSmall { .. })));
        let ok = GeneratorSpec::new(Waveform::Gaussian).with_grid(256, (-4.0, 4.0));
        assert!(generate(&ok).is_ok());
    }

    #[test]
    fn generator_rejects_tiny_sample_counts() {
        let spec = GeneratorSpec::new(Waveform::Gaussian).with_grid(8, (-8.0, 8.0));
        assert!(matches!(generate(&spec), Err(Error::InvalidGenerator(_))));
    }

    #[test]
    fn zero_signal_has_zero_norms() {
        let z = SampledSignal::new(vec![Complex64::new(0.0, 0.0); 16], 0.1, 0.0).unwrap();
        assert_eq!(z.l2_norm(), 0.0);
        assert_eq!(z.l1_norm(), 0.0);
    }

    #[test]
    fn fourier_gaussian_is_self_dual() {
        let u = gaussian_default();
        let hat = fourier(&u);
        let mut worst: f64 = 0.0;
        for (k, z) in hat.samples.iter().enumerate() {
            let xi = hat.t(k);
            let expect = SQRT_2.sqrt() * (-PI * xi * xi).exp();
            worst = worst.max((z - Complex64::new(expect, 0.0)).norm());
        }
        assert!(worst <= 1e-8, "max deviation from self-duality {worst:.3e}");
    }

    #[test]
    fn fourier_grid_covers_required_band() {
        let u = gaussian_default();
        let hat = fourier(&u);
        let n = u.len() as f64;
        let span = (n - 1.0) * u.dt;
        let need = n / (2.0 * span);
        assert!(hat.t0 <= -need && hat.t_end() >= need);
        assert_relative_eq!(hat.dt, 1.0 / (n * u.dt), epsilon = 1e-15);
    }

    #[test]
    fn fourier_rect_matches_sinc() {
        let u = rect_unit(4097, 2.0); // dt = 1/1024
        let hat = fourier(&u);
        let mut worst: f64 = 0.0;
        for (k, z) in hat.samples.iter().enumerate() {
            let xi = hat.t(k);
            let expect = if xi.abs() < 1e-12 { 1.0 } else { (PI * xi).sin() / (PI * xi) };
            worst = worst.max((z - Complex64::new(expect, 0.0)).norm());
        }
        assert!(worst <= 1e-3, "max deviation from sinc {worst:.3e}");
    }

    #[test]
    fn fourier_hermites_are_eigenfunctions() {
        for n in 1..=3u32 {
            let h = generate(&GeneratorSpec::new(Waveform::Hermite { n })).unwrap();
            let hat = fourier(&h);
            // (−i)^n h_n on the frequency grid.
            let eig = Complex64::new(0.0, -1.0).powu(n);
            let mut worst: f64 = 0.0;
            for (k, z) in hat.samples.iter().enumerate() {
                let xi = hat.t(k);
                worst = worst.max((z - eig * hermite_value(n, xi)).norm());
            }
            assert!(worst <= 1e-8, "hermite({n}) eigen-relation error {worst:.3e}");
        }
    }

    #[test]
    fn parseval_holds_for_all_generators() {
        // This includes rect: its sinc² tail does not fit the band in the
        // continuum sense, but the quadrature transform is periodic in ξ and
        // the output grid spans a full period, so the tail aliases back in
        // and the discrete Parseval identity is exact to rounding.
        let mut signals = vec![
            generate(&GeneratorSpec::new(Waveform::Gaussian)).unwrap(),
            generate(&GeneratorSpec::new(Waveform::Hermite { n: 3 })).unwrap(),
            generate(&GeneratorSpec::new(Waveform::Chirp { rate: 2.0 })).unwrap(),
            generate(&GeneratorSpec::new(Waveform::TwoPulse {
                separation: 3.0,
                pulse_width: 0.5,
            }))
            .unwrap(),
        ];
        signals.push(rect_unit(1025, 1.0));
        for u in &signals {
            let hat = fourier(u);
            assert!(
                (hat.l2_norm() - u.l2_norm()).abs() <= 1e-6 * u.l2_norm(),
                "Parseval violated: ‖û‖ = {}, ‖u‖ = {}",
                hat.l2_norm(),
                u.l2_norm()
            );
        }
    }

    #[test]
    fn moment_of_rect_matches_closed_form() {
        // ∫|t|^q over [−1/2, 1/2] = 2^{−q}/(q+1); fine aligned grid so the
        // trapezoid error (dt²/6 at q = 2) sits far below the tolerance.
        let u = rect_unit(2049, 1.0); // dt = 1/1024
        for (q, tol) in [(0.5, 2e-5), (1.0, 1e-9), (2.0, 1e-6), (3.0, 1e-6)] {
            let m = moment_l1(&u, q, 0.0).unwrap();
            let expect = 2f64.powf(-q) / (q + 1.0);
            assert_abs_diff_eq!(m, expect, epsilon = tol);
        }
    }

    #[test]
    fn moment_of_gaussian_power_matches_second_moment() {
        let w = gaussian_default().power();
        let m = moment_l1(&w, 2.0, 0.0).unwrap();
        assert_relative_eq!(m, 1.0 / (4.0 * PI), epsilon = 1e-8);
    }

    #[test]
    fn moment_rejects_bad_weights() {
        let mut w = gaussian_default().power();
        w.samples[10].re = -1e-6;
        assert!(matches!(moment_l1(&w, 2.0, 0.0), Err(Error::NegativeWeight { .. })));
        let mut w = gaussian_default().power();
        w.samples[10].im = 1e-6;
        assert!(matches!(moment_l1(&w, 2.0, 0.0), Err(Error::ComplexWeight { .. })));
        let mut w = gaussian_default().power();
        w.samples[10].re = -1e-13; // rounding noise: clipped, not rejected
        assert!(moment_l1(&w, 2.0, 0.0).is_ok());
        assert!(moment_l1(&w, -1.0, 0.0).is_err());
    }

    #[test]
    fn dispersion_of_gaussian_power_hits_centroid_and_value() {
        let w = gaussian_default().power();
        let d = dispersion_inf(&w, 2.0).unwrap();
        assert_abs_diff_eq!(d.center, 0.0, epsilon = 1e-6);
        assert_relative_eq!(d.value, 1.0 / (4.0 * PI), epsilon = 1e-9);
        // Optimum beats nearby centers.
        for probe in [-0.3, 0.2, 1.0] {
            assert!(d.value <= moment_l1(&w, 2.0, probe).unwrap() + 1e-12);
        }
    }

    #[test]
    fn dispersion_is_translation_equivariant() {
        let w = gaussian_default().power();
        let mut shifted = w.clone();
        shifted.t0 += 0.7;
        for q in [0.5, 1.0, 2.0, 3.0] {
            let a = dispersion_inf(&w, q).unwrap();
            let b = dispersion_inf(&shifted, q).unwrap();
            // At q = 1 the objective is piecewise linear and its minimum can
            // be flat across one grid cell, so centers match only to dt.
            let center_tol = if q == 1.0 { w.dt } else { 1e-6 };
            assert!(
                ((b.center - a.center) - 0.7).abs() <= center_tol,
                "q = {q}: centers {} and {} should differ by 0.7",
                a.center,
                b.center
            );
            assert_relative_eq!(b.value, a.value, epsilon = 1e-8);
        }
    }

    #[test]
    fn dispersion_of_rect_matches_closed_form() {
        let u = rect_unit(2049, 1.0);
        let d = dispersion_inf(&u, 2.0).unwrap();
        assert_abs_diff_eq!(d.center, 0.0, epsilon = 1e-6);
        assert_abs_diff_eq!(d.value, 1.0 / 12.0, epsilon = 1e-6);
    }

    #[test]
    fn dispersion_with_q_below_one_finds_a_pulse() {
        // With q < 1 the optimum rides one of the bumps rather than the
        // valley between them.
        let spec = GeneratorSpec::new(Waveform::TwoPulse { separation: 4.0, pulse_width: 0.3 });
        let w = generate(&spec).unwrap().power();
        let d = dispersion_inf(&w, 0.5).unwrap();
        assert!(
            (d.center.abs() - 2.0).abs() < 0.2,
            "q=0.5 center {} should sit near a bump at ±2",
            d.center
        );
        let valley = moment_l1(&w, 0.5, 0.0).unwrap();
        assert!(d.value < valley, "bump center must beat the valley");
    }

    #[test]
    fn dispersion_rejects_zero_weight() {
        let z = SampledSignal::new(vec![Complex64::new(0.0, 0.0); 16], 0.1, 0.0).unwrap();
        assert!(matches!(dispersion_inf(&z, 2.0), Err(Error::ZeroWeight)));
    }

    #[test]
    fn tail_fraction_separates_convergent_from_truncated_moments() {
        let w = gaussian_default().power();
        let frac = moment_tail_fraction(&w, 2.0, 0.0).unwrap();
        assert!(frac < 1e-12, "gaussian tail fraction {frac:.3e}");
        // A flat weight mimics a truncation-dominated moment: the outer
        // tenth of the window carries 1 − 0.9³ ≈ 27% of ∫t².
        let flat = SampledSignal::new(vec![Complex64::new(1.0, 0.0); 1001], 0.016, -8.0).unwrap();
        let frac = moment_tail_fraction(&flat, 2.0, 0.0).unwrap();
        assert!((frac - 0.271).abs() < 0.01, "flat tail fraction {frac:.3}");
    }

    proptest! {
        /// moment_l1 is monotone: enlarging the weight pointwise cannot
        /// shrink any absolute moment.
        #[test]
        fn moment_is_monotone_in_the_weight(
            base in proptest::collection::vec(0.0f64..1.0, 32..64),
            bump in proptest::collection::vec(0.0f64..0.5, 64),
            q in 0.3f64..4.0,
        ) {
            let n = base.len();
            let w1 = SampledSignal::new(
                base.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
                0.05,
                -1.0,
            ).unwrap();
            let w2 = SampledSignal::new(
                base.iter().zip(&bump).map(|(&v, &b)| Complex64::new(v + b, 0.0)).collect(),
                0.05,
                -1.0,
            ).unwrap();
            prop_assert_eq!(w2.len(), n);
            let m1 = moment_l1(&w1, q, 0.2).unwrap();
            let m2 = moment_l1(&w2, q, 0.2).unwrap();
            prop_assert!(m1 <= m2 + 1e-12);
        }

        /// The dispersion optimum never exceeds the moment at any probe center.
        #[test]
        fn dispersion_is_a_lower_envelope(
            vals in proptest::collection::vec(0.0f64..1.0, 48),
            probe in -2.0f64..2.0,
            q in 0.3f64..4.0,
        ) {
            prop_assume!(vals.iter().any(|&v| v > 1e-3));
            let w = SampledSignal::new(
                vals.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
                0.1,
                -2.0,
            ).unwrap();
            let d = dispersion_inf(&w, q).unwrap();
            let probed = moment_l1(&w, q, probe).unwrap();
            prop_assert!(d.value <= probed + 1e-9 * (1.0 + probed));
        }
    }
}
