//! The acceptance gate: every quantitative guarantee the crate makes, one
//! test per guarantee, with the tolerance spelled out at the assertion site.
//! Each test prints a `PASS` line with the measured numbers (visible under
//! `--nocapture`), so a run doubles as a desk-check report.

use ambicert::ambiguity::{
    ambiguity_grid, ambiguity_point, cross_section, first_zero_on_ray, first_zero_with,
    AmbiguityEvaluator, DEFAULT_EPS_REL,
};
use ambicert::certifier::{
    direction_bound, first_zero_bound, heisenberg_diagnostic, rhombus_region, star_region,
};
use ambicert::frft::frft;
use ambicert::minorant::{
    minorant_exact_concave, minorant_explicit, minorant_optimize, minorant_simple,
    verify_minorant, MinorantCert,
};
use ambicert::signal::{generate, hermite_value, GeneratorSpec, SampledSignal};
use ambicert::Waveform::{self, Chirp, Gaussian, Hermite, Rect, TwoPulse};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

fn sampled(waveform: Waveform) -> SampledSignal {
    generate(&GeneratorSpec::new(waveform)).unwrap()
}

fn directions(count: usize) -> Vec<f64> {
    (0..count).map(|k| k as f64 * PI / count as f64).collect()
}

/// Optimised minorants land on the reference constants: `c` within 0.5%,
/// `a` within 1%, and every returned certificate is verified with a
/// non-negative margin.
#[test]
fn optimizer_reproduces_the_reference_constants() {
    let table = [
        (3.0, 2.134, 3.26),
        (4.0, 1.656, 3.94),
        (5.0, 1.241, 4.61),
        (6.0, 0.908, 5.27),
    ];
    for (q, c_ref, a_ref) in table {
        let cert = minorant_optimize(q).unwrap();
        assert!(cert.verified && cert.margin >= 0.0, "q = {q}: certificate must verify");
        let c_rel = (cert.c / c_ref - 1.0).abs();
        let a_rel = (cert.a / a_ref - 1.0).abs();
        assert!(c_rel <= 5e-3, "q = {q}: c = {} is {c_rel:.2e} from {c_ref}", cert.c);
        assert!(a_rel <= 1e-2, "q = {q}: a = {} is {a_rel:.2e} from {a_ref}", cert.a);
        println!(
            "PASS q = {q}: c = {:.6} (ref {c_ref}, rel {c_rel:.1e}), a = {:.4} (ref {a_ref}, rel {a_rel:.1e}), margin {:.2e}",
            cert.c, cert.a, cert.margin
        );
    }
}

/// The quoted minorant pairs verify — except (1.1, 0.41, 2), which fails
/// with a concrete violating point — and the rhombus multipliers 1/(2π√c)
/// they imply sit next to the often-quoted 0.248.
#[test]
fn quoted_pairs_verify_and_their_multipliers_are_reported() {
    for (a, c, q) in [(1.0, 0.5, 2.0), (1.1, 0.42, 2.0), (1.02, 0.52, 1.5)] {
        let check = verify_minorant(a, c, q).unwrap();
        assert!(check.verified, "(a, c, q) = ({a}, {c}, {q}) must verify");
        assert!(check.margin >= 0.0);
    }

    let failing = verify_minorant(1.1, 0.41, 2.0).unwrap();
    assert!(!failing.verified, "(1.1, 0.41, 2) must not verify");
    let x = failing.witness.expect("a failed verification names a violating point");
    // Recompute the violation from scratch: a·cos x < 1 − c·x² there.
    let residual = 0.1 + 0.41 * x * x - 2.2 * (0.5 * x).sin().powi(2);
    assert!(residual < 0.0, "witness x = {x} leaves residual {residual:.3e}");
    assert!((1.27..=1.31).contains(&x), "violation sits near the known dip, got {x}");

    let classical = 1.0 / (2.0 * PI * 0.5f64.sqrt());
    let improved = 1.0 / (2.0 * PI * 0.42f64.sqrt());
    let optimistic = 1.0 / (2.0 * PI * 0.41f64.sqrt());
    assert_eq!(classical, 0.22507907903927651);
    assert_eq!(improved, 0.2455814088210555);
    assert_eq!(optimistic, 0.24855826185828309);
    println!(
        "PASS multipliers: {classical:.6} (c = 1/2) and {improved:.6} (c = 0.42) verified, \
         vs quoted 0.248; c = 0.41 would give {optimistic:.6} but fails at x ≈ {x:.4} \
         (residual {residual:.2e})"
    );
}

/// Tangency-built minorants for concave orders: c(1) ∈ [0.72, 0.73],
/// c(0.01) ∈ [1.9, 2.1], and `a·cos x` actually touches `1 − c·x^q` — the
/// tangency residual `|sin x₀ − c·q·x₀^{q−1}|` stays below 1e−9 at an
/// independently recovered tangency point.
#[test]
fn tangency_constants_for_concave_orders() {
    for (q, lo, hi) in [(1.0, 0.72, 0.73), (0.01, 1.9, 2.1)] {
        let cert = minorant_exact_concave(q).unwrap();
        assert!(cert.verified, "q = {q}: tangency certificate must verify");
        assert!((lo..=hi).contains(&cert.c), "q = {q}: c = {} outside [{lo}, {hi}]", cert.c);

        // The slopes of a·cos x and 1 − c·x^q match where
        // cos x + (x sin x)/q = 1; re-solve that by bisection on (π/2, π).
        let (mut x_lo, mut x_hi) = (FRAC_PI_2, PI);
        for _ in 0..100 {
            let mid = 0.5 * (x_lo + x_hi);
            if mid.cos() + mid * mid.sin() / q > 1.0 {
                x_lo = mid;
            } else {
                x_hi = mid;
            }
        }
        let x0 = 0.5 * (x_lo + x_hi);
        let residual = (x0.sin() - cert.c * q * x0.powf(q - 1.0)).abs();
        assert!(residual <= 1e-9, "q = {q}: tangency residual {residual:.3e}");
        println!("PASS q = {q}: c = {:.6}, tangency at x₀ = {x0:.6}, residual {residual:.2e}", cert.c);
    }
}

/// Transform laws at 2048 samples on the Gaussian (= hermite 0) and
/// hermite(1..3): unitarity, the group law across branch points, the
/// translation/modulation covariance laws against closed forms, and the
/// oscillator-generator identity by finite differences. Pointwise
/// tolerance 1e−4, relaxed to 1e−3 for the finite-difference check.
#[test]
fn transform_laws_hold_at_high_resolution() {
    let inputs: Vec<(u32, SampledSignal)> = (0..=3)
        .map(|n| {
            (n, generate(&GeneratorSpec::new(Hermite { n }).with_grid(2048, (-8.0, 8.0))).unwrap())
        })
        .collect();
    let (mut unitary, mut group, mut covariance, mut derivative) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);

    for (n, u) in &inputs {
        let n = *n;
        for alpha in [0.8, 2.0, 4.9] {
            unitary = unitary.max((frft(u, alpha).unwrap().l2_norm() - u.l2_norm()).abs());
        }

        for (alpha, beta) in [(1.0, 2.5), (2.2, 2.8), (3.3, 3.3)] {
            let composed = frft(&frft(u, beta).unwrap(), alpha).unwrap();
            let direct = frft(u, alpha + beta).unwrap();
            for k in 0..u.len() {
                group = group.max((composed.samples[k] - direct.samples[k]).norm());
            }
        }

        // Covariance against fully closed-form right-hand sides.
        let alpha = 1.2f64;
        let (sin_a, cos_a) = alpha.sin_cos();
        let eigen = Complex64::from_polar(1.0, -(n as f64) * alpha);
        let (a, b) = (0.7, 0.9);
        let translated = SampledSignal::new(
            (0..u.len()).map(|j| Complex64::new(hermite_value(n, u.t(j) - a), 0.0)).collect(),
            u.dt,
            u.t0,
        )
        .unwrap();
        let lhs = frft(&translated, alpha).unwrap();
        for k in 0..u.len() {
            let xi = u.t(k);
            let phase = PI * a * a * sin_a * cos_a - 2.0 * PI * a * xi * sin_a;
            let rhs = Complex64::from_polar(1.0, phase) * eigen * hermite_value(n, xi - a * cos_a);
            covariance = covariance.max((lhs.samples[k] - rhs).norm());
        }
        let modulated = SampledSignal::new(
            (0..u.len())
                .map(|j| {
                    let t = u.t(j);
                    Complex64::from_polar(1.0, 2.0 * PI * b * t) * hermite_value(n, t)
                })
                .collect(),
            u.dt,
            u.t0,
        )
        .unwrap();
        let lhs = frft(&modulated, alpha).unwrap();
        for k in 0..u.len() {
            let xi = u.t(k);
            let phase = -PI * b * b * sin_a * cos_a + 2.0 * PI * b * xi * cos_a;
            let rhs = Complex64::from_polar(1.0, phase) * eigen * hermite_value(n, xi - b * sin_a);
            covariance = covariance.max((lhs.samples[k] - rhs).norm());
        }

        // d/dα F_α u = −i(πt² − ∂²/(4π) − ½)F_α u, both sides by central
        // differences (step 1e−4 in α, the sample grid in t).
        let h = 1e-4;
        for alpha in [0.7, 2.1] {
            let plus = frft(u, alpha + h).unwrap();
            let minus = frft(u, alpha - h).unwrap();
            let at = frft(u, alpha).unwrap();
            for k in 1..u.len() - 1 {
                let t = at.t(k);
                let second =
                    (at.samples[k - 1] - 2.0 * at.samples[k] + at.samples[k + 1]) / (at.dt * at.dt);
                let action = PI * t * t * at.samples[k] - second / (4.0 * PI) - 0.5 * at.samples[k];
                let rhs = Complex64::new(0.0, -1.0) * action;
                let lhs = (plus.samples[k] - minus.samples[k]) / (2.0 * h);
                derivative = derivative.max((lhs - rhs).norm());
            }
        }
    }

    assert!(unitary <= 1e-4, "unitarity drift {unitary:.3e}");
    assert!(group <= 1e-4, "group-law error {group:.3e}");
    assert!(covariance <= 1e-4, "covariance error {covariance:.3e}");
    assert!(derivative <= 1e-3, "generator-identity error {derivative:.3e}");
    println!(
        "PASS transform laws: unitarity {unitary:.1e}, group law {group:.1e}, \
         covariance {covariance:.1e}, derivative {derivative:.1e}"
    );
}

/// Surface identities: the origin value is the energy (within 1e−6), the
/// squared surface integrates to ‖u‖₂⁴ (within 0.1%), `F_α` rotates the
/// surface rigidly (within 1e−4), and transform-based sections agree with
/// direct evaluation (within 1e−4).
#[test]
fn surface_identities_hold() {
    for waveform in [
        Gaussian,
        Hermite { n: 1 },
        Hermite { n: 3 },
        Rect { width: 1.0 },
        Chirp { rate: 2.0 },
        TwoPulse { separation: 3.0, pulse_width: 1.0 },
    ] {
        let u = sampled(waveform.clone());
        let origin = ambiguity_point(&u, 0.0, 0.0);
        let energy = u.l2_norm().powi(2);
        let drift = (origin - Complex64::new(energy, 0.0)).norm();
        assert!(drift <= 1e-6, "A(0,0) off by {drift:.3e} for {waveform}");
    }

    let mut worst_moyal = 0.0f64;
    let volume_cases: [(Waveform, (f64, f64), usize, (f64, f64), usize); 5] = [
        (Gaussian, (-4.0, 4.0), 65, (-4.0, 4.0), 65),
        (Hermite { n: 1 }, (-5.0, 5.0), 81, (-5.0, 5.0), 81),
        (Hermite { n: 2 }, (-5.0, 5.0), 81, (-5.0, 5.0), 81),
        (TwoPulse { separation: 3.0, pulse_width: 1.0 }, (-6.0, 6.0), 97, (-6.0, 6.0), 97),
        (Chirp { rate: 2.0 }, (-4.0, 4.0), 65, (-10.0, 10.0), 161),
    ];
    for (waveform, (x_lo, x_hi), nx, (y_lo, y_hi), ny) in volume_cases {
        let u = sampled(waveform.clone());
        let xs: Vec<f64> =
            (0..nx).map(|i| x_lo + i as f64 * (x_hi - x_lo) / (nx as f64 - 1.0)).collect();
        let ys: Vec<f64> =
            (0..ny).map(|i| y_lo + i as f64 * (y_hi - y_lo) / (ny as f64 - 1.0)).collect();
        let grid = ambiguity_grid(&u, &xs, &ys).unwrap();
        let mut volume = 0.0;
        for iy in 0..ny {
            for ix in 0..nx {
                let wx = if ix == 0 || ix + 1 == nx { 0.5 } else { 1.0 };
                let wy = if iy == 0 || iy + 1 == ny { 0.5 } else { 1.0 };
                volume += wx * wy * grid.value(ix, iy).norm_sqr();
            }
        }
        volume *= (xs[1] - xs[0]) * (ys[1] - ys[0]);
        let rel = (volume - u.l2_norm().powi(4)).abs() / u.l2_norm().powi(4);
        assert!(rel <= 1e-3, "volume off by {rel:.2e} for {waveform}");
        worst_moyal = worst_moyal.max(rel);
    }

    let mut worst_rotation = 0.0f64;
    for waveform in [Hermite { n: 1 }, Chirp { rate: 1.0 }] {
        let u = sampled(waveform);
        let original = AmbiguityEvaluator::new(&u);
        for alpha in [0.5, 2.0] {
            let rotated = AmbiguityEvaluator::new(&frft(&u, alpha).unwrap());
            let (sin_a, cos_a) = alpha.sin_cos();
            for r in [0.4, 1.0] {
                for phi in [0.0f64, 1.1, 2.3, 4.0] {
                    let (x, y) = (r * phi.cos(), r * phi.sin());
                    let lhs = rotated.point(x, y);
                    let rhs = original.point(x * cos_a - y * sin_a, x * sin_a + y * cos_a);
                    worst_rotation = worst_rotation.max((lhs - rhs).norm());
                }
            }
        }
    }
    assert!(worst_rotation <= 1e-4, "rotation covariance error {worst_rotation:.3e}");

    let mut worst_section = 0.0f64;
    let radii: Vec<f64> = (0..17).map(|i| i as f64 * 0.1).collect();
    for waveform in [Gaussian, TwoPulse { separation: 2.0, pulse_width: 1.0 }] {
        let u = sampled(waveform);
        let eval = AmbiguityEvaluator::new(&u);
        for theta in [0.0, 0.4, FRAC_PI_2] {
            let section = cross_section(&u, theta, &radii).unwrap();
            for (i, &r) in radii.iter().enumerate() {
                let direct = eval.point(r * theta.cos(), r * theta.sin());
                worst_section = worst_section.max((section[i] - direct).norm());
            }
        }
    }
    assert!(worst_section <= 1e-4, "section error {worst_section:.3e}");
    println!(
        "PASS surface identities: Moyal {worst_moyal:.1e}, rotation {worst_rotation:.1e}, \
         sections {worst_section:.1e}"
    );
}

/// Closed-form zero locations against certified radii: the rect's Doppler
/// zero at 1.000 with bound √6/π ≈ 0.7797, hermite(1)'s zero circle at
/// 1/√π ≈ 0.5642 with rhombus half-diagonal √(2/(3π)) ≈ 0.4607, and the
/// Gaussian's radius √(2/π) ≈ 0.7979 with no zero out to r = 2.5.
#[test]
fn certified_radii_sit_inside_known_zero_sets() {
    let classical = minorant_explicit(2.0, 1.0, 0.5).unwrap();

    // Unit rect on a fine grid that keeps the jump points on nodes.
    let rect = generate(&GeneratorSpec::new(Rect { width: 1.0 }).with_grid(4097, (-2.0, 2.0)))
        .unwrap();
    let doppler_zero = first_zero_on_ray(&rect, FRAC_PI_2, 1.5, DEFAULT_EPS_REL)
        .unwrap()
        .first_zero
        .expect("the rect has Doppler zeros at every integer");
    assert!((doppler_zero - 1.0).abs() <= 1e-3, "Doppler zero at {doppler_zero}");
    let doppler_bound = direction_bound(&rect, FRAC_PI_2, &classical).unwrap();
    let sinc_bound = 6.0f64.sqrt() / PI;
    assert!((doppler_bound - sinc_bound).abs() <= 1e-3, "bound {doppler_bound} vs √6/π = {sinc_bound}");
    assert!(doppler_bound <= doppler_zero);

    let h1 = sampled(Hermite { n: 1 });
    let circle = 1.0 / PI.sqrt();
    let mut worst_circle = 0.0f64;
    for theta in [0.0, 0.6, FRAC_PI_2, 2.2] {
        let zero = first_zero_on_ray(&h1, theta, 1.5, DEFAULT_EPS_REL)
            .unwrap()
            .first_zero
            .expect("hermite(1) vanishes on a circle");
        worst_circle = worst_circle.max((zero - circle).abs());
    }
    assert!(worst_circle <= 1e-3, "zero circle drift {worst_circle:.3e} from 1/√π = {circle:.4}");
    let h1_rhombus = rhombus_region(&h1, &classical).unwrap().rhombus.unwrap();
    let half_diagonal = (2.0 / (3.0 * PI)).sqrt();
    assert!((h1_rhombus.dx - half_diagonal).abs() <= 1e-3);
    assert!((h1_rhombus.dy - half_diagonal).abs() <= 1e-3);
    assert!(h1_rhombus.dx.max(h1_rhombus.dy) < circle, "the rhombus stays inside the zero circle");

    let gaussian = sampled(Gaussian);
    let g_rhombus = rhombus_region(&gaussian, &classical).unwrap().rhombus.unwrap();
    let g_radius = (2.0 / PI).sqrt();
    assert!((g_rhombus.dx - g_radius).abs() <= 1e-3, "dx = {} vs √(2/π) = {g_radius}", g_rhombus.dx);
    for theta in [0.0, 0.9, FRAC_PI_2, 2.5] {
        let scan = first_zero_on_ray(&gaussian, theta, 2.5, DEFAULT_EPS_REL).unwrap();
        assert!(scan.first_zero.is_none(), "the Gaussian surface is zero-free; θ = {theta}");
    }
    println!(
        "PASS zero checks: rect Doppler zero {doppler_zero:.4} ≥ bound {doppler_bound:.4}; \
         hermite circle drift {worst_circle:.1e} ≥ rhombus {:.4}; Gaussian radius {:.4}, \
         no zero to 2.5",
        h1_rhombus.dx, g_rhombus.dx
    );
}

/// The soundness sweep: every generator × q ∈ {0.5, 1, 2, 3} × 32
/// directions × both minorant families. No certified radius may pass an
/// observed zero (tolerance 1e−4), and the CLI must never report a
/// soundness violation (exit code 3).
#[test]
fn no_certificate_passes_an_observed_zero() {
    let generators: [(&str, Waveform); 5] = [
        ("gaussian", Gaussian),
        ("hermite(1)", Hermite { n: 1 }),
        ("rect(1)", Rect { width: 1.0 }),
        ("chirp(2)", Chirp { rate: 2.0 }),
        ("two_pulse(3,1)", TwoPulse { separation: 3.0, pulse_width: 1.0 }),
    ];
    let certificates: Vec<(f64, Vec<MinorantCert>)> = [0.5, 1.0, 2.0, 3.0]
        .into_iter()
        .map(|q| {
            let best = if q <= 1.0 { minorant_exact_concave(q) } else { minorant_optimize(q) };
            (q, vec![minorant_simple(q).unwrap(), best.unwrap()])
        })
        .collect();

    let mut combinations = 0usize;
    let mut min_slack = f64::INFINITY;
    for (name, waveform) in &generators {
        let u = sampled(waveform.clone());
        let eval = AmbiguityEvaluator::new(&u);
        for &theta in &directions(32) {
            // One empirical scan per direction adjudicates all certificates.
            let scan = first_zero_with(&eval, theta, 3.0, DEFAULT_EPS_REL).unwrap();
            let w = frft(&u, theta - FRAC_PI_2).unwrap().power();
            for (q, pair) in &certificates {
                for cert in pair {
                    let tau = first_zero_bound(&w, cert).unwrap();
                    combinations += 1;
                    if let Some(zero) = scan.first_zero {
                        assert!(
                            tau <= zero + 1e-4,
                            "{name}, θ = {theta:.4}, q = {q}, c = {:.4}: certified {tau:.6} \
                             passes the observed zero {zero:.6}",
                            cert.c
                        );
                        min_slack = min_slack.min(zero - tau);
                    }
                }
            }
        }
    }

    for gen in ["gaussian", "hermite:1", "rect:1", "chirp:2", "two_pulse:3,1"] {
        let output = std::process::Command::new(env!("CARGO_BIN_EXE_ambicert"))
            .args(["certify", "--gen", gen, "--mode", "star", "--q", "1", "--dirs", "8"])
            .output()
            .unwrap();
        let code = output.status.code().unwrap();
        assert_ne!(code, 3, "certify {gen} reported a soundness violation");
        assert!(code == 0 || code == 4, "certify {gen} exited {code}");
    }
    println!(
        "PASS soundness: {combinations} certificates, none past an observed zero \
         (min slack {min_slack:.4}); certify never exits 3"
    );
}

/// `u(t − 0.5)` on the grid; the default spacing is 1/64, so the shift is
/// exactly 32 samples and the discrete signal represents the translate with
/// no interpolation.
fn shifted_by_half(u: &SampledSignal) -> SampledSignal {
    let offset = (0.5 / u.dt).round() as usize;
    assert!(
        (offset as f64 * u.dt - 0.5).abs() < 1e-12,
        "test setup: the shift must be grid-aligned"
    );
    let mut samples = vec![Complex64::new(0.0, 0.0); u.len()];
    for j in offset..u.len() {
        samples[j] = u.samples[j - offset];
    }
    SampledSignal::new(samples, u.dt, u.t0).unwrap()
}

/// `e^{2πiωt}u(t)`, sample by sample.
fn modulated(u: &SampledSignal, omega: f64) -> SampledSignal {
    SampledSignal::new(
        (0..u.len())
            .map(|j| u.samples[j] * Complex64::from_polar(1.0, 2.0 * PI * omega * u.t(j)))
            .collect(),
        u.dt,
        u.t0,
    )
    .unwrap()
}

/// Time shifts and modulations move the surface's phase, not its zero set:
/// certified radii (star and rhombus) change by at most 1e−6. The
/// Heisenberg diagnostic stays ≥ 1 − 1e−9 and equals 1 on the Gaussian to
/// 1e−6. The rect is checked along the Doppler axis, the one direction
/// where its moments genuinely converge.
#[test]
fn certificates_are_shift_and_modulation_invariant() {
    let classical = minorant_explicit(2.0, 1.0, 0.5).unwrap();
    let dirs = directions(16);
    let decaying = [
        Gaussian,
        Hermite { n: 1 },
        Hermite { n: 2 },
        Chirp { rate: 2.0 },
        TwoPulse { separation: 2.0, pulse_width: 1.0 },
    ];

    let mut worst_drift = 0.0f64;
    for waveform in &decaying {
        let u = sampled(waveform.clone());
        let base_star = star_region(&u, &classical, &dirs).unwrap();
        let base_rhombus = rhombus_region(&u, &classical).unwrap().rhombus.unwrap();
        for variant in [shifted_by_half(&u), modulated(&u, 0.75)] {
            let star = star_region(&variant, &classical, &dirs).unwrap();
            for (original, moved) in base_star.star.iter().zip(&star.star) {
                worst_drift = worst_drift.max((original.tau - moved.tau).abs());
            }
            let rhombus = rhombus_region(&variant, &classical).unwrap().rhombus.unwrap();
            worst_drift = worst_drift
                .max((rhombus.dx - base_rhombus.dx).abs())
                .max((rhombus.dy - base_rhombus.dy).abs());
        }
    }

    let rect = sampled(Rect { width: 1.0 });
    let rect_base = direction_bound(&rect, FRAC_PI_2, &classical).unwrap();
    for variant in [shifted_by_half(&rect), modulated(&rect, 0.75)] {
        let tau = direction_bound(&variant, FRAC_PI_2, &classical).unwrap();
        worst_drift = worst_drift.max((tau - rect_base).abs());
    }
    assert!(worst_drift <= 1e-6, "certified radius drifted by {worst_drift:.3e}");

    let mut rho_floor = f64::INFINITY;
    for waveform in &decaying {
        let rho = heisenberg_diagnostic(&sampled(waveform.clone())).unwrap().rho;
        assert!(rho >= 1.0 - 1e-9, "ρ = {rho} below the uncertainty floor for {waveform}");
        rho_floor = rho_floor.min(rho);
    }
    let rho_gaussian = heisenberg_diagnostic(&sampled(Gaussian)).unwrap().rho;
    assert!((rho_gaussian - 1.0).abs() <= 1e-6, "Gaussian ρ = {rho_gaussian}");
    println!(
        "PASS invariance: max radius drift {worst_drift:.1e}; ρ ≥ {rho_floor:.6} with \
         Gaussian at {rho_gaussian:.9}"
    );
}
