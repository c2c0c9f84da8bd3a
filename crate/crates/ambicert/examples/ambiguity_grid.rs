//! Render an ambiguity surface on a grid — as ASCII art here, and as the
//! same grid.csv the `scan` subcommand writes.
//!
//! ```sh
//! cargo run --release --example ambiguity_grid
//! ```
//!
//! The two-pulse waveform is the classic picture: a mainlobe at the origin,
//! delay sidelobes at x = ±separation where the pulses line up, and Doppler
//! ripples in between from the interference of the pair.

use ambicert::ambiguity::ambiguity_grid;
use ambicert::io::write_grid_csv;
use ambicert::signal::{generate, GeneratorSpec};
use ambicert::Waveform::TwoPulse;

fn main() -> ambicert::Result<()> {
    let u = generate(&GeneratorSpec::new(TwoPulse { separation: 3.0, pulse_width: 1.0 }))?;

    let nx = 61;
    let ny = 25;
    let xs: Vec<f64> = (0..nx).map(|i| -4.5 + 9.0 * i as f64 / (nx - 1) as f64).collect();
    let ys: Vec<f64> = (0..ny).map(|i| -1.5 + 3.0 * i as f64 / (ny - 1) as f64).collect();
    let grid = ambiguity_grid(&u, &xs, &ys)?;

    // Larger magnitude, darker glyph; rows print top (y max) to bottom.
    let shades = [' ', '.', ':', '-', '=', '+', '*', '#', '%', '@'];
    println!("|A(u)| for two Gaussian pulses 3 apart, x ∈ [−4.5, 4.5], y ∈ [−1.5, 1.5]:");
    for iy in (0..ny).rev() {
        let row: String = (0..nx)
            .map(|ix| {
                let level = (grid.value(ix, iy).norm() * (shades.len() as f64 - 1.0)).round();
                shades[level as usize]
            })
            .collect();
        println!("  |{row}|");
    }
    println!("   (mainlobe at the origin, sidelobes of height ½ at x = ±3)");

    let path = std::env::temp_dir().join("two_pulse_grid.csv");
    let mut file = std::io::BufWriter::new(std::fs::File::create(&path)?);
    write_grid_csv(&grid, &mut file)?;
    std::io::Write::flush(&mut file)?;
    println!("\nwrote the same surface as {}", path.display());
    println!("(columns x,y,re,im,abs — one row per grid node, y varying slowest)");
    Ok(())
}
