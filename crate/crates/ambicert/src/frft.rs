//! The fractional Fourier transform `F_α`.
//!
//! `F_α` interpolates continuously between the identity (`α = 0`), the
//! Fourier transform (`α = π/2`), time reversal (`α = π`) and the inverse
//! transform (`α = 3π/2`), forming a one-parameter group:
//! `F_α ∘ F_β = F_{α+β}`. For `α` away from multiples of `π` it is the
//! chirp-modulated integral
//!
//! ```text
//! F_α u(ξ) = c_α e^{iπξ²cot α} ∫ u(t) e^{iπt²cot α} e^{−2πitξ/sin α} dt,
//! ```
//!
//! with `c_α = √(2 / (1 − e^{−2iα}))`, the square root of `1 − i·cot α`
//! chosen so that the group law holds *exactly* across branch points and the
//! Hermite functions are eigenfunctions with eigenvalue `e^{−inα}`. (The
//! more common ad-hoc choice `√(1 − i·cot α)` with the principal branch
//! agrees on `(0, π)` but breaks the group law beyond it.)
//!
//! The ambiguity-plane connection that the certifier exploits: `F_α` rotates
//! the ambiguity surface, `A(F_αu)(x, y) = A(u)(x cos α − y sin α,
//! x sin α + y cos α)`, so moments of `|F_αu|²` see the surface along a
//! rotated direction.

use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::numerics::{modulated_sum, trapezoid_weight};
use crate::signal::{fourier, moment_l1, SampledSignal};

/// Angles within this distance of a multiple of π are treated as exact
/// degeneracies (identity / reflection) rather than quadratures.
pub const DEGENERACY_TOL: f64 = 1e-12;

/// Below this |sin α| the direct quadrature's `1/sin α` factors get large and
/// the output grid undersamples the chirp, so the transform is computed as
/// `F_{α−π/2} ∘ F_{π/2}` instead. Equals sin(π/8); every direct quadrature
/// actually performed then has |sin| ≥ cos(π/8) ≈ 0.92.
pub fn near_degenerate_threshold() -> f64 {
    (PI / 8.0).sin()
}

/// How one `F_α` application will be carried out.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Route {
    Identity,
    Reflection,
    /// Single chirp-quadrature pass.
    Direct,
    /// `F_{π/2}` first, then a direct pass at `α − π/2`.
    ViaFourier,
}

/// A prepared fractional-transform angle: reduced angle, normalisation
/// constant, and the route the evaluation will take.
#[derive(Debug, Clone)]
pub struct FrftPlan {
    /// The angle reduced to `[0, 2π)`.
    pub alpha: f64,
    /// `√(1 − i·cot α)` on the group-law branch; `1` at the degeneracies.
    pub c_alpha: Complex64,
    /// True when `α` is a multiple of π and the transform is the identity or
    /// plain reflection rather than an integral.
    pub degenerate: bool,
    route: Route,
}

impl FrftPlan {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!("transform angle must be finite, got {alpha}")));
        }
        let a = alpha.rem_euclid(2.0 * PI);
        let route = if a <= DEGENERACY_TOL || 2.0 * PI - a <= DEGENERACY_TOL {
            Route::Identity
        } else if (a - PI).abs() <= DEGENERACY_TOL {
            Route::Reflection
        } else if a.sin().abs() < near_degenerate_threshold() {
            Route::ViaFourier
        } else {
            Route::Direct
        };
        let degenerate = matches!(route, Route::Identity | Route::Reflection);
        let c_alpha = if degenerate {
            Complex64::new(1.0, 0.0)
        } else {
            // √(2/(1 − e^{−2iα})) equals √(1 − i·cot α) pointwise but keeps
            // the branch that makes F_α ∘ F_β = F_{α+β} exact for all angles.
            (2.0 / (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, -2.0 * a))).sqrt()
        };
        Ok(Self { alpha: a, c_alpha, degenerate, route })
    }

    /// Apply the transform; the output lives on the input grid.
    pub fn apply(&self, u: &SampledSignal) -> SampledSignal {
        match self.route {
            Route::Identity => u.clone(),
            Route::Reflection => {
                let mut samples = u.samples.clone();
                samples.reverse();
                SampledSignal { samples, dt: u.dt, t0: -u.t_end() }
            }
            Route::Direct => self.direct(u),
            Route::ViaFourier => {
                // Both stages are in the well-conditioned direct regime:
                // |sin(π/2)| = 1 and |sin(α − π/2)| = |cos α| ≥ cos(π/8).
                let quarter = FrftPlan::new(FRAC_PI_2).expect("π/2 is finite");
                let rest = FrftPlan::new(self.alpha - FRAC_PI_2).expect("angle is finite");
                debug_assert_eq!(rest.route, Route::Direct);
                rest.direct(&quarter.direct(u))
            }
        }
    }

    /// Single-pass chirp quadrature, output sampled on the input grid.
    fn direct(&self, u: &SampledSignal) -> SampledSignal {
        let n = u.len();
        let sin_a = self.alpha.sin();
        let cot_a = self.alpha.cos() / sin_a;
        let coeffs: Vec<Complex64> = u
            .samples
            .iter()
            .enumerate()
            .map(|(j, z)| {
                let t = u.t(j);
                z * Complex64::from_polar(trapezoid_weight(j, n) * u.dt, PI * t * t * cot_a)
            })
            .collect();
        let samples: Vec<Complex64> = (0..n)
            .into_par_iter()
            .map(|k| {
                let xi = u.t(k);
                let outer = self.c_alpha * Complex64::from_polar(1.0, PI * xi * xi * cot_a);
                let rate = -2.0 * PI * xi / sin_a;
                outer * modulated_sum(&coeffs, rate * u.t0, rate * u.dt)
            })
            .collect();
        SampledSignal { samples, dt: u.dt, t0: u.t0 }
    }
}

/// Fractional Fourier transform of `u` at angle `alpha`, on the input grid.
pub fn frft(u: &SampledSignal, alpha: f64) -> Result<SampledSignal> {
    Ok(FrftPlan::new(alpha)?.apply(u))
}

/// The moment transfer bound `‖ξ F_αu‖₂ ≤ ‖t u‖₂·|cos α| + ‖ξ û‖₂·|sin α|`,
/// evaluated on the right-hand side from quadrature moments about 0.
///
/// Useful as a grid-free sanity bound on how far `F_α` can spread a signal;
/// the rhombus certificate uses the same two dispersions at `α ∈ {0, π/2}`.
pub fn frft_moment_rhs(u: &SampledSignal, alpha: f64) -> Result<f64> {
    if !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!("transform angle must be finite, got {alpha}")));
    }
    let time_side = moment_l1(&u.power(), 2.0, 0.0)?.sqrt();
    let freq_side = moment_l1(&fourier(u).power(), 2.0, 0.0)?.sqrt();
    Ok(time_side * alpha.cos().abs() + freq_side * alpha.sin().abs())
}
