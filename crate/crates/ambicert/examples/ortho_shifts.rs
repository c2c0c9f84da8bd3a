//! How far must a waveform move — in time or in frequency — before it can
//! be orthogonal to itself?
//!
//! ```sh
//! cargo run --release --example ortho_shifts
//! ```
//!
//! `⟨f, f(·−a)⟩ = A(f)(a, 0)` and `⟨f, e^{2πiω·}f⟩ = conj A(f)(0, ω)`, so
//! certified zero-free radii along the two axes are exactly lower bounds on
//! orthogonal shifts. The translate bound needs moments of |f̂|², the
//! modulation bound moments of |f|².

use ambicert::ambiguity::first_zero_on_ray;
use ambicert::certifier::{modulation_orthogonality_bound, translate_orthogonality_bound};
use ambicert::minorant::minorant_explicit;
use ambicert::signal::{generate, GeneratorSpec};
use ambicert::Waveform::{Gaussian, Hermite, Rect, TwoPulse};
use std::f64::consts::FRAC_PI_2;

fn main() -> ambicert::Result<()> {
    let cert = minorant_explicit(2.0, 1.0, 0.5)?;

    println!(
        "{:<16} {:>16} {:>16} {:>16} {:>18}",
        "waveform", "translate bound", "modulation bound", "delay-axis zero", "Doppler-axis zero"
    );
    for (label, waveform) in [
        ("gaussian", Gaussian),
        ("hermite(1)", Hermite { n: 1 }),
        ("hermite(3)", Hermite { n: 3 }),
        ("two_pulse(3,1)", TwoPulse { separation: 3.0, pulse_width: 1.0 }),
    ] {
        let u = generate(&GeneratorSpec::new(waveform))?;
        let translate = translate_orthogonality_bound(&u, &cert)?;
        let modulation = modulation_orthogonality_bound(&u, &cert)?;
        // The translate bound must sit below the first zero on the delay
        // axis, the modulation bound below the first zero on the Doppler
        // axis. For the rotation-invariant waveforms the axes agree; the
        // pulse pair tells them apart.
        let empirical = |theta: f64| -> ambicert::Result<String> {
            Ok(first_zero_on_ray(&u, theta, 2.5, 1e-6)?
                .first_zero
                .map(|r| format!("{r:.6}"))
                .unwrap_or_else(|| "none ≤ 2.5".into()))
        };
        let delay = empirical(0.0)?;
        let doppler = empirical(FRAC_PI_2)?;
        println!("{label:<16} {translate:>16.6} {modulation:>16.6} {delay:>16} {doppler:>18}");
    }

    // The rect tells the two sides apart: its spectrum decays too slowly
    // for a trustworthy frequency moment, so only the modulation side (which
    // uses the compactly supported |f|²) produces a bound.
    let rect = generate(&GeneratorSpec::new(Rect { width: 1.0 }))?;
    println!();
    match translate_orthogonality_bound(&rect, &cert) {
        Err(err) => println!("rect(1) translate side refused: {err}"),
        Ok(bound) => println!("rect(1) translate bound {bound:.6}"),
    }
    let bound = modulation_orthogonality_bound(&rect, &cert)?;
    let zero = first_zero_on_ray(&rect, FRAC_PI_2, 2.0, 1e-6)?.first_zero.unwrap();
    println!("rect(1) modulation bound {bound:.6} ≤ first orthogonal modulation {zero:.6}");
    Ok(())
}
