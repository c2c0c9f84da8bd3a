//! The fractional Fourier transform as a rotation: eigenfunctions, the
//! group law, and what it does to the ambiguity surface.
//!
//! ```sh
//! cargo run --release --example frft_rotation
//! ```

use ambicert::ambiguity::ambiguity_point;
use ambicert::frft::{frft, FrftPlan};
use ambicert::signal::{generate, hermite_value, GeneratorSpec};
use ambicert::Waveform::{Chirp, Hermite};
use num_complex::Complex64;
use std::f64::consts::PI;

fn main() -> ambicert::Result<()> {
    let h2 = generate(&GeneratorSpec::new(Hermite { n: 2 }))?;

    println!("eigenrelation F_α hermite(2) = e^(−2iα) hermite(2):");
    for alpha in [0.3, PI / 2.0, 2.0, 5.0] {
        let v = frft(&h2, alpha)?;
        let eigenvalue = Complex64::from_polar(1.0, -2.0 * alpha);
        let worst = (0..v.len())
            .map(|k| (v.samples[k] - eigenvalue * hermite_value(2, v.t(k))).norm())
            .fold(0.0, f64::max);
        println!("  α = {alpha:<8}: max deviation {worst:.3e}");
    }

    println!("\ngroup law F_α(F_β u) = F_(α+β) u, including across branch points:");
    let chirp = generate(&GeneratorSpec::new(Chirp { rate: 1.0 }))?;
    for (alpha, beta) in [(0.4, 0.8), (1.0, 2.5), (2.9, 3.0)] {
        let composed = frft(&frft(&chirp, beta)?, alpha)?;
        let direct = frft(&chirp, alpha + beta)?;
        let worst = composed
            .samples
            .iter()
            .zip(&direct.samples)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max);
        println!("  α = {alpha}, β = {beta} (sum {:.1}): max deviation {worst:.3e}", alpha + beta);
    }

    println!("\nplans route around the degeneracies:");
    for alpha in [0.0, 1e-14, 0.2, PI, 4.0] {
        let plan = FrftPlan::new(alpha)?;
        println!(
            "  α = {alpha:<8}: reduced {:.4}, degenerate = {}, c_α = {:.4}",
            plan.alpha, plan.degenerate, plan.c_alpha
        );
    }

    println!("\nrotation of the surface: |A(F_α u)(x, 0)| = |A(u)(x cos α, x sin α)|");
    let u = generate(&GeneratorSpec::new(Chirp { rate: 2.0 }))?;
    let alpha = 0.9;
    let rotated = frft(&u, alpha)?;
    println!("    x    |A(F_α u)(x, 0)|   |A(u)(x cos α, x sin α)|");
    for x in [0.2, 0.6, 1.0, 1.4] {
        let lhs = ambiguity_point(&rotated, x, 0.0).norm();
        let rhs = ambiguity_point(&u, x * alpha.cos(), x * alpha.sin()).norm();
        println!("  {x:>5}   {lhs:>15.9}   {rhs:>24.9}");
    }
    Ok(())
}
