//! Small shared numerical routines: golden-section minimisation, bisection,
//! and a drift-corrected oscillator sum for quadratures against `e^{i k phi}`.

use num_complex::Complex64;

/// (1 + sqrt 5) / 2, used by the golden-section bracket updates.
const GOLDEN_RATIO: f64 = 1.618_033_988_749_895;

/// Interior split ratio `2 - phi ~ 0.382` for golden-section search.
const GOLDEN_SPLIT: f64 = 2.0 - GOLDEN_RATIO;

/// Hard iteration cap so a NaN-producing objective cannot loop forever.
const MAX_GOLDEN_ITERS: usize = 200;

/// Minimise a unimodal function over `[a, b]` by golden-section search.
///
/// Returns `(x_min, f_min)` once the bracket is narrower than `tol`. For a
/// merely piecewise-unimodal objective this still converges to *a* local
/// minimum inside the bracket, which is how the dispersion and ray-scan
/// refinements use it.
pub fn golden_section_min<F>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    debug_assert!(a <= b, "golden_section_min needs an ordered bracket");
    let mut x1 = a + GOLDEN_SPLIT * (b - a);
    let mut x2 = b - GOLDEN_SPLIT * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut iters = 0;
    while b - a > tol && iters < MAX_GOLDEN_ITERS {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + GOLDEN_SPLIT * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - GOLDEN_SPLIT * (b - a);
            f2 = f(x2);
        }
        iters += 1;
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Find a root of `f` on `[lo, hi]` by bisection, assuming a sign change.
///
/// Returns `None` when `f(lo)` and `f(hi)` have the same (nonzero) sign.
pub fn bisect_root<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> Option<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if flo.signum() == fhi.signum() {
        return None;
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// How often the running oscillator is resynchronised from an exact
/// `sin`/`cos` evaluation. Between resyncs the phase advances by a single
/// complex multiply, so the accumulated rounding stays near machine epsilon.
const OSCILLATOR_RESYNC: usize = 256;

/// Evaluate `sum_j coeffs[j] * exp(i * (phase0 + j * dphase))`.
///
/// This is the inner kernel of every discrete transform in the crate. The
/// recurrence `cur *= step` costs one complex multiply per term; periodic
/// resynchronisation keeps the phase error flat instead of growing linearly
/// with the grid length.
#[inline]
pub fn modulated_sum(coeffs: &[Complex64], phase0: f64, dphase: f64) -> Complex64 {
    let step = Complex64::from_polar(1.0, dphase);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1.0, 0.0);
    for (j, &cj) in coeffs.iter().enumerate() {
        if j % OSCILLATOR_RESYNC == 0 {
            cur = Complex64::from_polar(1.0, phase0 + j as f64 * dphase);
        }
        acc += cj * cur;
        cur *= step;
    }
    acc
}

/// Trapezoid quadrature weight for index `j` on a uniform grid of `n` nodes:
/// `1/2` at the two ends, `1` inside. The grid spacing is applied separately.
#[inline]
pub fn trapezoid_weight(j: usize, n: usize) -> f64 {
    if j == 0 || j + 1 == n {
        0.5
    } else {
        1.0
    }
}
