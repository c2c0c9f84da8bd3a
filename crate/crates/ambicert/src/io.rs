//! CSV and JSON plumbing: signals in and out, grid/scan/certificate export.
//!
//! Numbers are written with Rust's shortest round-trip formatting, so a
//! written artifact re-read through this module reproduces the original
//! values bit for bit, and identical runs produce byte-identical files.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use num_complex::Complex64;
use serde::Serialize;

use crate::ambiguity::AmbiguityGrid;
use crate::error::{Error, Result};
use crate::minorant::MinorantCert;
use crate::signal::SampledSignal;

/// Maximum relative deviation of any consecutive sample spacing from the
/// mean spacing; beyond this the grid is rejected as non-uniform.
pub const SPACING_JITTER_LIMIT: f64 = 1e-9;

/// Read a signal from `t,re,im` CSV.
pub fn read_signal_csv(path: &Path) -> Result<SampledSignal> {
    let file = File::open(path)?;
    read_signal_from(file)
}

/// Read a signal from any `t,re,im` CSV source.
///
/// The header is mandatory, `t` must be strictly increasing, and the spacing
/// uniform to [`SPACING_JITTER_LIMIT`] relative jitter.
pub fn read_signal_from(reader: impl Read) -> Result<SampledSignal> {
    let mut csv = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
    {
        let headers = csv.headers().map_err(|e| Error::MalformedCsv(e.to_string()))?;
        let got: Vec<&str> = headers.iter().collect();
        if got != ["t", "re", "im"] {
            return Err(Error::MalformedCsv(format!(
                "expected header 't,re,im', got '{}'",
                got.join(",")
            )));
        }
    }
    let mut times = Vec::new();
    let mut samples = Vec::new();
    for (row, record) in csv.records().enumerate() {
        let record = record.map_err(|e| Error::MalformedCsv(e.to_string()))?;
        if record.len() != 3 {
            return Err(Error::MalformedCsv(format!(
                "row {}: expected 3 fields, got {}",
                row + 2,
                record.len()
            )));
        }
        let mut fields = [0.0f64; 3];
        for (k, raw) in record.iter().enumerate() {
            fields[k] = raw.parse().map_err(|_| {
                Error::MalformedCsv(format!("row {}: '{raw}' is not a number", row + 2))
            })?;
        }
        times.push(fields[0]);
        samples.push(Complex64::new(fields[1], fields[2]));
    }
    if times.len() < 2 {
        return Err(Error::TooFewSamples { min: 2, got: times.len() });
    }
    let n = times.len();
    for j in 1..n {
        if times[j] <= times[j - 1] {
            return Err(Error::MalformedCsv(format!(
                "row {}: t must be strictly increasing ({} after {})",
                j + 2,
                times[j],
                times[j - 1]
            )));
        }
    }
    let dt = (times[n - 1] - times[0]) / (n as f64 - 1.0);
    if !dt.is_finite() || dt <= 0.0 {
        return Err(Error::BadSpacing(dt));
    }
    for j in 1..n {
        let step = times[j] - times[j - 1];
        if (step / dt - 1.0).abs() > SPACING_JITTER_LIMIT {
            return Err(Error::MalformedCsv(format!(
                "row {}: spacing {} deviates from the uniform {} beyond the jitter limit",
                j + 2,
                step,
                dt
            )));
        }
    }
    SampledSignal::new(samples, dt, times[0])
}

/// Write a signal as `t,re,im` CSV.
pub fn write_signal_csv(u: &SampledSignal, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    write_signal_to(u, &mut out)
}

/// Write a signal as `t,re,im` CSV to any sink.
pub fn write_signal_to(u: &SampledSignal, out: &mut impl Write) -> Result<()> {
    writeln!(out, "t,re,im")?;
    for (j, v) in u.samples.iter().enumerate() {
        writeln!(out, "{},{},{}", u.t(j), v.re, v.im)?;
    }
    Ok(())
}

/// Write an ambiguity grid as `x,y,re,im,abs` CSV, row-major with `y` as the
/// outer (slow) index.
pub fn write_grid_csv(grid: &AmbiguityGrid, out: &mut impl Write) -> Result<()> {
    writeln!(out, "x,y,re,im,abs")?;
    for (iy, &y) in grid.ys.iter().enumerate() {
        for (ix, &x) in grid.xs.iter().enumerate() {
            let v = grid.value(ix, iy);
            writeln!(out, "{x},{y},{},{},{}", v.re, v.im, v.norm())?;
        }
    }
    Ok(())
}

/// Write minorant certificates as a `q,a,c,kappa,verified` CSV table.
pub fn write_constants_csv(certs: &[MinorantCert], out: &mut impl Write) -> Result<()> {
    writeln!(out, "q,a,c,kappa,verified")?;
    for cert in certs {
        writeln!(out, "{},{},{},{},{}", cert.q, cert.a, cert.c, cert.kappa, cert.verified)?;
    }
    Ok(())
}

/// Pretty-print any serialisable artifact as JSON with a trailing newline.
pub fn write_json<T: Serialize>(value: &T, out: &mut impl Write) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// [`write_json`] straight to a file path.
pub fn write_json_file<T: Serialize>(value: &T, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    write_json(value, &mut out)
}
