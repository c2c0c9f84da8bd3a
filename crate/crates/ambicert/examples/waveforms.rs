//! Generate the built-in waveforms and read off their basic statistics.
//!
//! ```sh
//! cargo run --release --example waveforms
//! ```
//!
//! Each signal is sampled on the default grid (1025 points on [−8, 8], so
//! dt = 1/64 exactly), then summarised: energy, time dispersion (the
//! centred second moment of |u|²), and the matching frequency dispersion.
//! The rect shows up with a finite time spread but a frequency moment the
//! tooling will later refuse to trust — its spectrum decays like 1/ω.

use ambicert::signal::{dispersion_inf, fourier, generate, moment_tail_fraction, GeneratorSpec};
use ambicert::Waveform::{Chirp, Gaussian, Hermite, Rect, TwoPulse};

fn main() -> ambicert::Result<()> {
    let family = [
        Gaussian,
        Hermite { n: 1 },
        Hermite { n: 4 },
        Rect { width: 1.0 },
        Chirp { rate: 2.0 },
        TwoPulse { separation: 3.0, pulse_width: 1.0 },
    ];
    println!(
        "{:<18} {:>9} {:>12} {:>12} {:>16}",
        "waveform", "energy", "time disp", "freq disp", "freq tail share"
    );
    for waveform in family {
        let u = generate(&GeneratorSpec::new(waveform.clone()))?;
        let time = dispersion_inf(&u.power(), 2.0)?;
        let spectrum = fourier(&u).power();
        let freq = dispersion_inf(&spectrum, 2.0)?;
        // How much of the frequency moment lives in the outermost tenth of
        // the window: ≈ 0 for honest moments, O(1e−3) for the rect's
        // window-truncated one.
        let tail = moment_tail_fraction(&spectrum, 2.0, freq.center)?;
        println!(
            "{:<18} {:>9.6} {:>12.6} {:>12.6} {:>16.3e}",
            waveform.to_string(),
            u.l2_norm().powi(2),
            time.value,
            freq.value,
            tail
        );
    }

    println!();
    println!("scaling: hermite(n) time dispersion grows like (2n + 1)/(4π)");
    for n in [0, 1, 2, 3, 8] {
        let u = generate(&GeneratorSpec::new(Hermite { n }))?;
        let measured = dispersion_inf(&u.power(), 2.0)?.value;
        let predicted = (2.0 * n as f64 + 1.0) / (4.0 * std::f64::consts::PI);
        println!("  n = {n}: measured {measured:.6}, closed form {predicted:.6}");
    }
    Ok(())
}
