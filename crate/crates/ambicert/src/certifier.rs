//! Certified zero-free regions around the origin of the ambiguity surface.
//!
//! Everything here is one inequality wearing different outfits: if `w ≥ 0`
//! and its `q`-th dispersion is finite, then the Fourier transform of `w`
//! cannot vanish at any `|ξ| < τ` with
//!
//! ```text
//! τ = (κ_q · ‖w‖₁ / inf_{t₀} ∫|t−t₀|^q w(t) dt)^{1/q},   κ_q = 1/(c(2π)^q),
//! ```
//!
//! where `(a, c)` is any verified cosine minorant of order `q`. Feeding in
//! `w = |F_{θ−π/2}u|²` turns this into a zero-free radius for `A(u)` along
//! the direction `θ` (the ambiguity surface restricted to a line through the
//! origin is the Fourier transform of exactly that weight); feeding in `|û|²`
//! or `|u|²` rules out orthogonal translates and modulations. The `q = 2`
//! case has a closed form per axis, giving the rhombus construction.
//!
//! Every region can be checked after the fact: [`validate_region`] hunts for
//! actual zeros of `|A(u)|` along each probed direction out to three times
//! the certified radius and compares. A certified radius beyond an observed
//! zero is an implementation bug, never a tolerance issue, and is reported
//! as a failed validation.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

use crate::ambiguity::{first_zero_with, AmbiguityEvaluator};
use crate::error::{Error, Result};
use crate::frft::frft;
use crate::minorant::{minorant_explicit, MinorantCert};
use crate::signal::{dispersion_inf, fourier, moment_tail_fraction, SampledSignal};

/// Maximum fraction of a moment allowed in the outer tenth of the window.
///
/// Beyond this the discrete moment is an artifact of truncation (the
/// underlying integral diverges) and constructions that need a genuinely
/// finite dispersion refuse to certify from it.
pub const TAIL_DOMINANCE_LIMIT: f64 = 1e-6;

/// Slack when comparing certified radii against empirically found zeros.
pub const RADIUS_TOL: f64 = 1e-4;

/// Evenly spaced directions `validate_region` always probes.
pub const VALIDATION_DIRECTIONS: usize = 32;

/// Validation scans out to this multiple of the certified radius.
const VALIDATION_REACH: f64 = 3.0;

/// Two angles are the same undirected ray when they differ by a multiple of
/// π within this tolerance.
const DIRECTION_MATCH_TOL: f64 = 1e-9;

/// Convex hull of `(±dx, 0)` and `(0, ±dy)` in the `(delay, Doppler)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rhombus {
    pub dx: f64,
    pub dy: f64,
    /// `2·dx·dy`, the area of the hull.
    pub area: f64,
}

/// One certified direction: `A(u)` has no zero at `(±r cos θ, ±r sin θ)`
/// for `0 < r < τ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StarRay {
    pub theta: f64,
    pub tau: f64,
}

/// A zero-free region certificate: the minorant it rests on plus a rhombus,
/// a star of per-direction radii, or both.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroFreeRegion {
    pub q: f64,
    pub minorant: MinorantCert,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhombus: Option<Rhombus>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub star: Vec<StarRay>,
}

impl ZeroFreeRegion {
    /// Certified zero-free radius along `theta`, if this region constrains
    /// that direction: the rhombus boundary `1/(|cos θ|/dx + |sin θ|/dy)`
    /// covers every direction, star rays only their own. When both apply the
    /// larger (both are valid certificates) wins.
    pub fn certified_radius(&self, theta: f64) -> Option<f64> {
        let mut best: Option<f64> = None;
        if let Some(r) = &self.rhombus {
            let denom = theta.cos().abs() / r.dx + theta.sin().abs() / r.dy;
            best = Some(1.0 / denom);
        }
        for ray in &self.star {
            if same_direction(ray.theta, theta) {
                best = Some(best.map_or(ray.tau, |b| b.max(ray.tau)));
            }
        }
        best
    }
}

/// Whether two angles name the same undirected ray (mod π).
fn same_direction(a: f64, b: f64) -> bool {
    let d = (a - b).rem_euclid(PI);
    d < DIRECTION_MATCH_TOL || d > PI - DIRECTION_MATCH_TOL
}

/// Reject certificates that did not pass verification.
fn ensure_verified(cert: &MinorantCert) -> Result<()> {
    if !cert.verified {
        return Err(Error::UnverifiedMinorant {
            a: cert.a,
            c: cert.c,
            q: cert.q,
            witness: cert.witness,
        });
    }
    Ok(())
}

/// Smallest `|ξ|` below which the Fourier transform of the non-negative
/// weight `w` provably has no zero:
/// `τ = (κ_q·‖w‖₁ / inf_{t₀}∫|t−t₀|^q w)^{1/q}`.
///
/// No finiteness screening happens here — a window-dominated moment only
/// makes the dispersion larger and the returned radius smaller, so the bound
/// stays sound (just weak). Constructions whose *meaning* depends on a
/// convergent moment (rhombus, orthogonality, Heisenberg) screen for
/// themselves.
pub fn first_zero_bound(w: &SampledSignal, cert: &MinorantCert) -> Result<f64> {
    ensure_verified(cert)?;
    let disp = dispersion_inf(w, cert.q)?;
    Ok((cert.kappa * w.l1_norm() / disp.value).powf(1.0 / cert.q))
}

/// Certified zero-free radius of `A(u)` along direction `theta`.
///
/// The surface restricted to that line through the origin is the Fourier
/// transform of `w = |F_{θ−π/2} u|²`, so the weight bound applies directly.
pub fn direction_bound(u: &SampledSignal, theta: f64, cert: &MinorantCert) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::InvalidParameter(format!("direction angle must be finite, got {theta}")));
    }
    let section = frft(u, theta - FRAC_PI_2)?;
    first_zero_bound(&section.power(), cert)
}

/// Reject `w` whose `q`-th moment about `center` is a truncation artifact.
fn ensure_moment_finite(w: &SampledSignal, q: f64, center: f64) -> Result<()> {
    let tail = moment_tail_fraction(w, q, center)?;
    if tail > TAIL_DOMINANCE_LIMIT {
        return Err(Error::MomentNotFinite { q, tail_fraction: tail });
    }
    Ok(())
}

/// The closed-form `q = 2` region: convex hull of `(±dx, 0)`, `(0, ±dy)`
/// with
///
/// ```text
/// dx = ‖u‖₂ / (2π√c · inf_ω‖(ξ−ω)û‖₂),   dy = ‖u‖₂ / (2π√c · inf_a‖(t−a)u‖₂).
/// ```
///
/// Note the cross-pairing: a zero of `A(u)` on the *delay* axis at `x = a`
/// says `u ⊥ u(·−a)`, which the *frequency* spread forbids below `dx` (and
/// symmetrically for Doppler zeros and the time spread). A signal like the
/// unit rect, whose spectrum decays too slowly for a finite second moment,
/// is rejected rather than silently certified from a window-truncated
/// dispersion.
pub fn rhombus_region(u: &SampledSignal, cert: &MinorantCert) -> Result<ZeroFreeRegion> {
    ensure_verified(cert)?;
    if cert.q != 2.0 {
        return Err(Error::InvalidParameter(format!(
            "the rhombus construction is the closed-form q = 2 route; got a certificate of order {}",
            cert.q
        )));
    }
    let time_w = u.power();
    let freq_w = fourier(u).power();
    let time_disp = dispersion_inf(&time_w, 2.0)?;
    let freq_disp = dispersion_inf(&freq_w, 2.0)?;
    ensure_moment_finite(&time_w, 2.0, time_disp.center)?;
    ensure_moment_finite(&freq_w, 2.0, freq_disp.center)?;

    let energy = time_w.l1_norm();
    let scale = energy.sqrt() / (2.0 * PI * cert.c.sqrt());
    let dx = scale / freq_disp.value.sqrt();
    let dy = scale / time_disp.value.sqrt();
    Ok(ZeroFreeRegion {
        q: 2.0,
        minorant: cert.clone(),
        rhombus: Some(Rhombus { dx, dy, area: 2.0 * dx * dy }),
        star: Vec::new(),
    })
}

/// Per-direction certified radii over an arbitrary set of angles.
pub fn star_region(u: &SampledSignal, cert: &MinorantCert, thetas: &[f64]) -> Result<ZeroFreeRegion> {
    ensure_verified(cert)?;
    if thetas.is_empty() {
        return Err(Error::InvalidParameter("star region needs at least one direction".into()));
    }
    let star = thetas
        .par_iter()
        .map(|&theta| direction_bound(u, theta, cert).map(|tau| StarRay { theta, tau }))
        .collect::<Result<Vec<_>>>()?;
    Ok(ZeroFreeRegion { q: cert.q, minorant: cert.clone(), rhombus: None, star })
}

/// Shared core of the two orthogonality bounds: the weight's transform is
/// the inner-product profile, so its certified zero-free radius is exactly
/// the smallest possible orthogonal shift.
fn orthogonality_bound(w: &SampledSignal, cert: &MinorantCert) -> Result<f64> {
    ensure_verified(cert)?;
    let disp = dispersion_inf(w, cert.q)?;
    ensure_moment_finite(w, cert.q, disp.center)?;
    Ok((cert.kappa * w.l1_norm() / disp.value).powf(1.0 / cert.q))
}

/// Smallest `|a|` at which `f` could be orthogonal to its translate
/// `f(·−a)`: no smaller nonzero shift achieves `⟨f, f(·−a)⟩ = 0`.
///
/// `⟨f, f(·−a)⟩` is the Fourier transform of `|f̂|²` evaluated at `a`, so
/// the frequency spread of `f` controls it. Requires that spread to be
/// genuinely finite.
pub fn translate_orthogonality_bound(f: &SampledSignal, cert: &MinorantCert) -> Result<f64> {
    orthogonality_bound(&fourier(f).power(), cert)
}

/// Smallest `|ω|` at which `f` could be orthogonal to its modulation
/// `e^{2πiωt}f`: the time-side mirror of the translate bound.
pub fn modulation_orthogonality_bound(f: &SampledSignal, cert: &MinorantCert) -> Result<f64> {
    orthogonality_bound(&f.power(), cert)
}

/// The uncertainty diagnostic `ρ` and the area of the default rhombus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeisenbergReport {
    /// `4π·D_t·D_ξ/‖u‖₂²` where `D` are the centred quadratic spreads;
    /// `ρ ≥ 1` always, with equality exactly for (shifted, modulated)
    /// Gaussians.
    pub rho: f64,
    /// `2·dx·dy` of the rhombus built with the classical `(a, c) = (1, 1/2)`
    /// constant — with that normalisation `ρ·area = 4/π`, so tighter
    /// concentration (small `ρ`) means a larger certified area.
    pub rhombus_area: f64,
}

/// Compute `ρ = 4π·D_t·D_ξ/‖u‖₂²` plus the default rhombus area.
///
/// Rejects signals whose time or frequency spread is window-dominated (the
/// rect, say, has no finite frequency spread to report).
pub fn heisenberg_diagnostic(u: &SampledSignal) -> Result<HeisenbergReport> {
    let classical = minorant_explicit(2.0, 1.0, 0.5)?;
    let region = rhombus_region(u, &classical)?;
    let rhombus = region.rhombus.expect("rhombus_region always fills the rhombus");

    let time_disp = dispersion_inf(&u.power(), 2.0)?;
    let freq_disp = dispersion_inf(&fourier(u).power(), 2.0)?;
    let energy = u.power().l1_norm();
    Ok(HeisenbergReport {
        rho: 4.0 * PI * (time_disp.value * freq_disp.value).sqrt() / energy,
        rhombus_area: rhombus.area,
    })
}

/// One probed direction of a validation run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ValidationRow {
    pub theta: f64,
    /// Radius the region claims zero-free along this direction.
    pub tau_cert: f64,
    /// First zero of `|A(u)|` found scanning out to 3× the claim, if any.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tau_empirical: Option<f64>,
    /// `true` unless an empirical zero undercuts the certified radius by
    /// more than [`RADIUS_TOL`].
    pub pass: bool,
}

/// Outcome of brute-force checking a region against the actual surface.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub rows: Vec<ValidationRow>,
    pub pass: bool,
}

/// Brute-force audit of a certified region.
///
/// Probes a 32-direction grid over `[0, π)` plus every star direction of the
/// region (directions the region does not constrain at all are skipped —
/// with a rhombus present that is none of them). Along each, `|A(u)|` is
/// scanned to [`VALIDATION_REACH`]× the certified radius with zero threshold
/// `eps_rel·‖u‖₂²`; a zero below the certified radius (minus [`RADIUS_TOL`])
/// fails the row. Rows are assembled in ascending-angle order regardless of
/// the parallel scan schedule.
pub fn validate_region(
    u: &SampledSignal,
    region: &ZeroFreeRegion,
    eps_rel: f64,
) -> Result<ValidationReport> {
    let mut thetas: Vec<f64> =
        (0..VALIDATION_DIRECTIONS).map(|k| k as f64 * PI / VALIDATION_DIRECTIONS as f64).collect();
    for ray in &region.star {
        let folded = ray.theta.rem_euclid(PI);
        if !thetas.iter().any(|&t| same_direction(t, folded)) {
            thetas.push(folded);
        }
    }
    thetas.sort_by(|x, y| x.partial_cmp(y).expect("angles are finite"));

    let probes: Vec<(f64, f64)> = thetas
        .into_iter()
        .filter_map(|theta| region.certified_radius(theta).map(|tau| (theta, tau)))
        .collect();

    let eval = AmbiguityEvaluator::new(u);
    let rows = probes
        .par_iter()
        .map(|&(theta, tau_cert)| {
            let scan = first_zero_with(&eval, theta, VALIDATION_REACH * tau_cert, eps_rel)?;
            let pass = scan.first_zero.map_or(true, |z| z >= tau_cert - RADIUS_TOL);
            Ok(ValidationRow { theta, tau_cert, tau_empirical: scan.first_zero, pass })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = rows.iter().all(|r| r.pass);
    Ok(ValidationReport { rows, pass })
}
