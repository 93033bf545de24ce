//! Zero-point energy and the leading cutoff correction to F.

use crate::bath::{free_energy_integrand, omega1_arccos, CanonicalBath, Cutoff};
use crate::quadrature::{integrate, Estimate, QuadratureSpec, TailCut};
use crate::{Error, Result};
use std::f64::consts::PI;

/// Leading low-temperature effect of finite cutoffs on F:
/// `πθ²/6 · (1/Ω − 1/Ω′)`, with 1/∞ = 0.
pub fn srt_correction(bath: &CanonicalBath, theta: f64) -> f64 {
    PI * theta * theta / 6.0 * (bath.omega.reciprocal() - bath.omega_prime.reciprocal())
}

fn srt_cutoffs(bath: &CanonicalBath) -> Result<(f64, f64)> {
    match (bath.omega, bath.omega_prime) {
        (Cutoff::Infinite, Cutoff::Infinite) => Err(Error::Divergent(
            "zero-point energy of the Ohmic model diverges logarithmically; \
             use zero_point_ohmic_asymptotic with a finite relaxation time"
                .into(),
        )),
        (Cutoff::Finite(omega), Cutoff::Finite(omega_prime))
            if ((omega_prime + bath.gamma) - omega).abs() <= 1e-12 * omega =>
        {
            Ok((omega, omega_prime))
        }
        _ => Err(Error::Divergent("zero-point energy diverges for the QED model, whatever the cutoff".into())),
    }
}

/// Ground-state energy of the relaxation-time model:
///
/// ```text
/// (1/2π)[Ω′ log((Ω′+γ)/Ω′) + γ log((Ω′+γ)/ω₀) + 2ω₁ arccos(γ/2ω₀)]
/// ```
///
/// Only baths with Ω = Ω′ + γ have a finite zero-point energy; Ohmic and
/// QED baths give [`Error::Divergent`].
pub fn zero_point(bath: &CanonicalBath) -> Result<f64> {
    let (_, omega_prime) = srt_cutoffs(bath)?;
    let g = bath.gamma;
    Ok((omega_prime * (g / omega_prime).ln_1p()
        + g * ((omega_prime + g) / bath.omega0).ln()
        + 2.0 * omega1_arccos(bath.omega0, g))
        / (2.0 * PI))
}

/// Small-τ form for an Ohmic bath regularised by a relaxation time:
/// `(1/2π)[γ(1 − log ω₀τ) + 2ω₁ arccos(γ/2ω₀)]`. Diverges like −log τ.
pub fn zero_point_ohmic_asymptotic(omega0: f64, gamma: f64, tau: f64) -> Result<f64> {
    for (name, v) in [("omega0", omega0), ("gamma", gamma), ("tau", tau)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::InvalidParameter(format!("{name} must be finite and > 0, got {v}")));
        }
    }
    Ok((gamma * (1.0 - (omega0 * tau).ln()) + 2.0 * omega1_arccos(omega0, gamma)) / (2.0 * PI))
}

/// `(1/π)∫₀^∞ (ω/2)·g(ω) dω` by quadrature, as an oracle for
/// [`zero_point`]. The algebraic tail beyond `W = 10⁴·max(ω₀, γ, Ω)` is
/// added analytically from its 1/ω³ leading term.
pub fn zero_point_quadrature(bath: &CanonicalBath) -> Result<Estimate> {
    let (omega, omega_prime) = srt_cutoffs(bath)?;
    let (w0, g) = (bath.omega0, bath.gamma);
    let big = 1e4 * w0.max(g).max(omega);
    // g(ω) ~ k4/ω⁴ with k4 = Ω³ − Ω′³ + γ(3ω₀² − γ²)
    let k4 = omega.powi(3) - omega_prime.powi(3) + g * (3.0 * w0 * w0 - g * g);
    let tail = k4 / (4.0 * PI * big * big);
    let tail_bound = tail.abs() * 1e-6 + f64::EPSILON * tail.abs();
    let spec = QuadratureSpec::default()
        .with_relative_tolerance(1e-12)
        .with_absolute_tolerance(1e-14)
        .with_tail_cut(TailCut::Truncate { upper: big, tail_bound })
        .with_max_subdivisions(4000);
    let integrand = |w: f64| w * free_energy_integrand(bath, w) / (2.0 * PI);
    // resolve the resonance and the cutoff separately
    let knots = [0.0, 4.0 * w0.max(g), 4.0 * omega.max(w0), big];
    let mut total = Estimate { value: tail, error: tail_bound, subdivisions: 0, evaluations: 0 };
    for pair in knots.windows(2) {
        if pair[1] <= pair[0] {
            continue;
        }
        let e = integrate(integrand, pair[0], pair[1], &spec)?;
        total.value += e.value;
        total.error += e.error;
        total.subdivisions += e.subdivisions;
        total.evaluations += e.evaluations;
    }
    Ok(total)
}
