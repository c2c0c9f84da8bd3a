//! Band-limited interpolation between sample points.
//!
//! The ambiguity quadrature needs `u(t ± x/2)` at off-grid positions. Since
//! the signals here are sampled well above their effective bandwidth, the
//! right notion of "between the samples" is band-limited: upsample by a
//! factor of 16 with zero-padded FFT spectra (exact for anything the original
//! grid can represent), then run a local 4-point cubic through the fine grid,
//! whose error at that spacing sits far below the quadrature noise floor.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::signal::SampledSignal;

/// Fine-grid refinement factor for the FFT upsampling stage.
pub(crate) const UPSAMPLE: usize = 16;

/// Band-limited view of a sampled signal, evaluable anywhere (zero outside
/// the window, like the signal itself).
pub(crate) struct SpectralInterp {
    fine: Vec<Complex64>,
    t0: f64,
    dt_fine: f64,
}

impl SpectralInterp {
    pub fn new(u: &SampledSignal) -> Self {
        let n = u.len();
        let m = n * UPSAMPLE;
        let mut planner = FftPlanner::new();
        let mut spec = u.samples.clone();
        planner.plan_fft_forward(n).process(&mut spec);
        // Re-seat the spectrum in an m-point frame: non-negative frequencies
        // keep their bins, negative ones move to the top, and for even n the
        // Nyquist bin is split evenly between ±n/2 (the symmetric choice that
        // keeps real signals real).
        let mut padded = vec![Complex64::new(0.0, 0.0); m];
        let half = n / 2;
        for (k, &value) in spec.iter().enumerate() {
            if k < half {
                padded[k] = value;
            } else if k == half && n % 2 == 0 {
                padded[half] = 0.5 * value;
                padded[m - half] = 0.5 * value;
            } else {
                padded[m - (n - k)] = value;
            }
        }
        planner.plan_fft_inverse(m).process(&mut padded);
        // Unnormalised transform pair: scale by 1/n so fine nodes reproduce
        // the original samples. Drop the wrap-around segment past the last
        // original sample — the signal is zero there, not periodic.
        let scale = 1.0 / n as f64;
        padded.truncate((n - 1) * UPSAMPLE + 1);
        for z in &mut padded {
            *z *= scale;
        }
        Self { fine: padded, t0: u.t0, dt_fine: u.dt / UPSAMPLE as f64 }
    }

    /// Interpolated value at `t`; exactly zero outside the sampled window.
    #[inline]
    pub fn eval(&self, t: f64) -> Complex64 {
        let x = (t - self.t0) / self.dt_fine;
        let last = (self.fine.len() - 1) as f64;
        if !(0.0..=last).contains(&x) {
            return Complex64::new(0.0, 0.0);
        }
        // 4-point cubic Lagrange on the fine grid, stencil clamped at the
        // window ends; p ∈ [0, 3] is the position within the stencil.
        let base = ((x as isize) - 1).clamp(0, self.fine.len() as isize - 4) as usize;
        let p = x - base as f64;
        let w0 = -(p - 1.0) * (p - 2.0) * (p - 3.0) / 6.0;
        let w1 = p * (p - 2.0) * (p - 3.0) / 2.0;
        let w2 = -p * (p - 1.0) * (p - 3.0) / 2.0;
        let w3 = p * (p - 1.0) * (p - 2.0) / 6.0;
        self.fine[base] * w0
            + self.fine[base + 1] * w1
            + self.fine[base + 2] * w2
            + self.fine[base + 3] * w3
    }
}
