//! Heat-bath models and the canonical susceptibility
//!
//! ```text
//! α(z) = (z + iΩ) / (−m (z + iΩ′)(z² + iγz − ω₀²))
//! ```
//!
//! shared by the three memory kernels
//!
//! ```text
//! Ohmic                    μ̃(z) = ζ
//! single relaxation time   μ̃(z) = ζ / (1 − izτ)
//! QED (blackbody)          μ̃(z) = 2e²zΩ² / (3c³(z + iΩ))
//! ```
//!
//! All functions take frequencies in one common unit (usually ω₀ = 1).
//! Masses never enter the thermodynamics; they only appear in
//! [`susceptibility`] and [`memory_susceptibility`], which exist to check
//! the canonical form against the kernel form.

use crate::{Error, Result};
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// A bath cutoff frequency. The Ohmic limit is represented exactly rather
/// than by a large number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cutoff {
    Finite(f64),
    Infinite,
}

impl Cutoff {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Cutoff::Infinite)
    }

    pub fn finite(&self) -> Option<f64> {
        match *self {
            Cutoff::Finite(v) => Some(v),
            Cutoff::Infinite => None,
        }
    }

    /// 1/Ω, zero for an infinite cutoff.
    pub fn reciprocal(&self) -> f64 {
        match *self {
            Cutoff::Finite(v) => 1.0 / v,
            Cutoff::Infinite => 0.0,
        }
    }

    /// `a/(ω² + a²)`, the spectral Lorentzian; zero for an infinite cutoff.
    fn lorentzian(&self, omega: f64) -> f64 {
        match *self {
            Cutoff::Finite(a) => a / (omega * omega + a * a),
            Cutoff::Infinite => 0.0,
        }
    }
}

/// User-facing bath description. `gamma` is the damping rate of the
/// canonical form; `tau_scaled = τω₀`, `omega_prime_scaled = Ω′/ω₀`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BathSpec {
    Ohmic {
        omega0: f64,
        gamma: f64,
    },
    SingleRelaxationTime {
        omega0: f64,
        gamma: f64,
        tau_scaled: f64,
    },
    Qed {
        omega0: f64,
        gamma: f64,
        omega_prime_scaled: f64,
        /// Ω′ → ∞: zero bare mass, Ω = ω₀²/γ = 1/τ_e.
        large_cutoff_limit: bool,
    },
}

impl BathSpec {
    pub fn omega0(&self) -> f64 {
        match *self {
            BathSpec::Ohmic { omega0, .. }
            | BathSpec::SingleRelaxationTime { omega0, .. }
            | BathSpec::Qed { omega0, .. } => omega0,
        }
    }

    pub fn gamma(&self) -> f64 {
        match *self {
            BathSpec::Ohmic { gamma, .. }
            | BathSpec::SingleRelaxationTime { gamma, .. }
            | BathSpec::Qed { gamma, .. } => gamma,
        }
    }

    pub fn model_name(&self) -> &'static str {
        match self {
            BathSpec::Ohmic { .. } => "ohmic",
            BathSpec::SingleRelaxationTime { .. } => "srt",
            BathSpec::Qed { .. } => "qed",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("{name} must be finite and > 0, got {v}")))
            }
        };
        positive("omega0", self.omega0())?;
        positive("gamma", self.gamma())?;
        match *self {
            BathSpec::Ohmic { .. } => Ok(()),
            BathSpec::SingleRelaxationTime { tau_scaled, .. } => positive("tau", tau_scaled),
            BathSpec::Qed { omega_prime_scaled, large_cutoff_limit, .. } => {
                if large_cutoff_limit {
                    Ok(())
                } else {
                    positive("omega_prime", omega_prime_scaled)
                }
            }
        }
    }

    /// Advisory diagnostics that do not block evaluation.
    ///
    /// The relaxation-time model assumes a short relaxation time, written
    /// in the literature as "τ ≪ ζ/m"; dimensionally the meaningful
    /// reading is τ ≪ m/ζ, i.e. τγ ≪ 1, which is what is checked here.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let BathSpec::SingleRelaxationTime { omega0, gamma, tau_scaled } = *self {
            let tau = tau_scaled / omega0;
            if tau * gamma > 0.1 {
                out.push(format!("relaxation time is not small: tau*gamma = {:.3} (expected << 1)", tau * gamma));
            }
        }
        out
    }
}

/// The (ω₀, γ, Ω, Ω′) parametrisation of the combined susceptibility.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalBath {
    pub omega0: f64,
    pub gamma: f64,
    pub omega: Cutoff,
    pub omega_prime: Cutoff,
}

impl CanonicalBath {
    pub fn new(omega0: f64, gamma: f64, omega: Cutoff, omega_prime: Cutoff) -> Result<Self> {
        let ok = |v: f64| v > 0.0 && v.is_finite();
        if !ok(omega0) || !ok(gamma) {
            return Err(Error::InvalidParameter(format!(
                "omega0 and gamma must be finite and > 0, got {omega0}, {gamma}"
            )));
        }
        for c in [omega, omega_prime] {
            if let Cutoff::Finite(v) = c {
                if !ok(v) {
                    return Err(Error::InvalidParameter(format!("cutoff must be finite and > 0, got {v}")));
                }
            }
        }
        Ok(Self { omega0, gamma, omega, omega_prime })
    }

    pub fn ohmic(omega0: f64, gamma: f64) -> Result<Self> {
        Self::new(omega0, gamma, Cutoff::Infinite, Cutoff::Infinite)
    }

    pub fn is_ohmic(&self) -> bool {
        self.omega.is_infinite() && self.omega_prime.is_infinite()
    }

    pub fn roots(&self) -> RootPair {
        roots_unchecked(self.omega0, self.gamma)
    }

    /// The Ohmic bath with the same oscillator parameters.
    pub fn ohmic_part(&self) -> Self {
        Self { omega: Cutoff::Infinite, omega_prime: Cutoff::Infinite, ..*self }
    }
}

/// Maps a physical model to the canonical form.
///
/// * Ohmic → (ω₀, γ, ∞, ∞)
/// * relaxation time τ → Ω = 1/τ, Ω′ = 1/τ − γ
/// * QED → 1/Ω = 1/Ω′ + γ/ω₀²; in the large-cutoff limit Ω′ = ∞, Ω = ω₀²/γ
pub fn canonicalize(spec: &BathSpec) -> Result<CanonicalBath> {
    spec.validate()?;
    match *spec {
        BathSpec::Ohmic { omega0, gamma } => CanonicalBath::ohmic(omega0, gamma),
        BathSpec::SingleRelaxationTime { omega0, gamma, tau_scaled } => {
            let omega = omega0 / tau_scaled;
            let omega_prime = omega - gamma;
            if !(omega_prime > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "relaxation time too long: 1/tau = {omega} must exceed gamma = {gamma}"
                )));
            }
            CanonicalBath::new(omega0, gamma, Cutoff::Finite(omega), Cutoff::Finite(omega_prime))
        }
        BathSpec::Qed { omega0, gamma, omega_prime_scaled, large_cutoff_limit } => {
            if large_cutoff_limit {
                CanonicalBath::new(omega0, gamma, Cutoff::Finite(omega0 * omega0 / gamma), Cutoff::Infinite)
            } else {
                let omega_prime = omega_prime_scaled * omega0;
                let omega = 1.0 / (1.0 / omega_prime + gamma / (omega0 * omega0));
                CanonicalBath::new(omega0, gamma, Cutoff::Finite(omega), Cutoff::Finite(omega_prime))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Underdamped,
    Critical,
    Overdamped,
}

/// Roots z₁, z₁* of `z² − γz + ω₀²` (the poles of α sit at −iz₁, −iz₁*).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootPair {
    pub z1: Complex64,
    pub z1_conj: Complex64,
    /// |ω₁| = √|ω₀² − γ²/4|; ω₁ is imaginary unless underdamped.
    pub omega1: f64,
    pub regime: Regime,
}

/// Underdamped: z₁ = γ/2 + iω₁. Overdamped: z₁ = γ/2 − |ω₁|, z₁* = γ/2 + |ω₁|.
/// Critical damping (γ = 2ω₀ exactly) uses the overdamped branch with ω₁ = 0.
pub fn roots(omega0: f64, gamma: f64) -> Result<RootPair> {
    if !(omega0 > 0.0 && gamma > 0.0 && omega0.is_finite() && gamma.is_finite()) {
        return Err(Error::InvalidParameter(format!("roots need omega0 > 0 and gamma > 0, got {omega0}, {gamma}")));
    }
    Ok(roots_unchecked(omega0, gamma))
}

fn roots_unchecked(omega0: f64, gamma: f64) -> RootPair {
    let half = 0.5 * gamma;
    // factored to keep precision near critical damping
    let disc = (omega0 - half) * (omega0 + half);
    if disc > 0.0 {
        let omega1 = disc.sqrt();
        RootPair {
            z1: Complex64::new(half, omega1),
            z1_conj: Complex64::new(half, -omega1),
            omega1,
            regime: Regime::Underdamped,
        }
    } else {
        let omega1 = (-disc).sqrt();
        let large = half + omega1;
        // small root from the product to avoid cancellation
        let small = omega0 * omega0 / large;
        RootPair {
            z1: Complex64::new(small, 0.0),
            z1_conj: Complex64::new(large, 0.0),
            omega1,
            regime: if disc == 0.0 { Regime::Critical } else { Regime::Overdamped },
        }
    }
}

/// ω₁·arccos(γ/2ω₀), continued to the overdamped side as
/// |ω₁|·log(γ/2ω₀ − |ω₁|/ω₀).
pub fn omega1_arccos(omega0: f64, gamma: f64) -> f64 {
    let x = gamma / (2.0 * omega0);
    let r = roots_unchecked(omega0, gamma);
    match r.regime {
        Regime::Underdamped => r.omega1 * x.acos(),
        Regime::Critical => 0.0,
        Regime::Overdamped => r.omega1 * (r.z1.re / omega0).ln(),
    }
}

/// ζ/m and K/m of the relaxation-time model for given canonical
/// parameters.
pub fn srt_memory(omega0: f64, gamma: f64, omega_prime: f64) -> (f64, f64) {
    let total = omega_prime + gamma;
    let zeta_over_m = gamma * (omega_prime * omega_prime + gamma * omega_prime + omega0 * omega0) / (total * total);
    let k_over_m = omega0 * omega0 * omega_prime / total;
    (zeta_over_m, k_over_m)
}

/// Renormalised-to-bare mass ratio M/m of the QED model.
pub fn qed_mass_ratio(omega0: f64, gamma: f64, omega_prime: f64) -> f64 {
    (omega0 * omega0 + gamma * omega_prime) * (omega_prime + gamma) / (omega0 * omega0 * omega_prime)
}

/// μ̃(z) per unit reference mass (the bare mass m; the observed mass M in
/// the large-cutoff QED limit, where m = 0). Defined for Im z ≥ 0.
pub fn mu_tilde(spec: &BathSpec, z: Complex64) -> Result<Complex64> {
    spec.validate()?;
    if !(z.im >= 0.0) || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("memory kernel is defined for Im z >= 0, got {z}")));
    }
    let canon = canonicalize(spec)?;
    Ok(match *spec {
        BathSpec::Ohmic { gamma, .. } => Complex64::new(gamma, 0.0),
        BathSpec::SingleRelaxationTime { omega0, gamma, tau_scaled } => {
            let tau = tau_scaled / omega0;
            let omega_prime = canon.omega_prime.finite().unwrap_or(f64::INFINITY);
            let (zeta, _) = srt_memory(omega0, gamma, omega_prime);
            zeta / (1.0 - I * z * tau)
        }
        BathSpec::Qed { gamma, large_cutoff_limit, .. } => {
            let omega = canon.omega.finite().unwrap_or(f64::INFINITY);
            // 2e²Ω/(3c³) = M − m per reference mass
            let strength = if large_cutoff_limit {
                omega
            } else {
                let omega_prime = canon.omega_prime.finite().unwrap_or(f64::INFINITY);
                gamma + omega_prime - omega
            };
            strength * z / (z + I * omega)
        }
    })
}

/// α(z)·m from the memory-kernel form 1/(−mz² − izμ̃(z) + K).
pub fn memory_susceptibility(spec: &BathSpec, z: Complex64) -> Result<Complex64> {
    let mu = mu_tilde(spec, z)?;
    let canon = canonicalize(spec)?;
    let w2 = canon.omega0 * canon.omega0;
    let (inertia, stiffness) = match *spec {
        BathSpec::Ohmic { .. } => (1.0, w2),
        BathSpec::SingleRelaxationTime { .. } => {
            let (_, k) = srt_memory(canon.omega0, canon.gamma, canon.omega_prime.finite().unwrap_or(f64::INFINITY));
            (1.0, k)
        }
        BathSpec::Qed { large_cutoff_limit: true, .. } => (0.0, w2),
        BathSpec::Qed { .. } => {
            let omega_prime = canon.omega_prime.finite().unwrap_or(f64::INFINITY);
            (1.0, w2 + canon.gamma * omega_prime)
        }
    };
    let denom = -inertia * z * z - I * z * mu + stiffness;
    invert(denom, z)
}

/// The canonical susceptibility `(z+iΩ)/(−m(z+iΩ′)(z²+iγz−ω₀²))`.
///
/// With both cutoffs infinite the ratio (z+iΩ)/(z+iΩ′) is 1. With only Ω′
/// infinite (large-cutoff QED) the bare mass vanishes and m(z+iΩ′) → iMΩ;
/// `mass_scale` is then read as the observed mass M.
pub fn susceptibility(bath: &CanonicalBath, mass_scale: f64, z: Complex64) -> Result<Complex64> {
    if !(z.im >= 0.0) {
        return Err(Error::Domain(format!("susceptibility is evaluated in the closed upper half plane, got {z}")));
    }
    let oscillator = z * z + I * bath.gamma * z - bath.omega0 * bath.omega0;
    let denom = match (bath.omega, bath.omega_prime) {
        (Cutoff::Infinite, Cutoff::Infinite) => -mass_scale * oscillator,
        (Cutoff::Finite(omega), Cutoff::Finite(omega_prime)) => {
            return invert(-mass_scale * (z + I * omega_prime) * oscillator, z).map(|a| a * (z + I * omega));
        }
        (Cutoff::Finite(omega), Cutoff::Infinite) => {
            return invert(-I * mass_scale * omega * oscillator, z).map(|a| a * (z + I * omega));
        }
        (Cutoff::Infinite, Cutoff::Finite(_)) => {
            return Err(Error::InvalidParameter("Omega infinite with finite Omega' has no model".into()));
        }
    };
    invert(denom, z)
}

fn invert(denom: Complex64, z: Complex64) -> Result<Complex64> {
    let a = denom.inv();
    if denom == Complex64::new(0.0, 0.0) || !a.re.is_finite() || !a.im.is_finite() {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    Ok(a)
}

/// The spectral factor Im{d log α(ω+i0⁺)/dω}:
///
/// ```text
/// −Ω/(ω²+Ω²) + Ω′/(ω²+Ω′²) + γ(ω²+ω₀²)/((ω²−ω₀²)² + γ²ω²)
/// ```
///
/// Infinite cutoffs drop their Lorentzians.
pub fn free_energy_integrand(bath: &CanonicalBath, omega: f64) -> f64 {
    let w2 = omega * omega;
    let o2 = bath.omega0 * bath.omega0;
    let detune = w2 - o2;
    let resonance = bath.gamma * (w2 + o2) / (detune * detune + bath.gamma * bath.gamma * w2);
    let cutoffs = match (bath.omega, bath.omega_prime) {
        // combined to avoid cancelling two O(1/ω²) terms at large ω
        (Cutoff::Finite(a), Cutoff::Finite(b)) => (a - b) * (a * b - w2) / ((w2 + a * a) * (w2 + b * b)),
        (omega_c, omega_prime_c) => omega_prime_c.lorentzian(omega) - omega_c.lorentzian(omega),
    };
    cutoffs + resonance
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_examples() {
        let c = canonicalize(&BathSpec::Ohmic { omega0: 1.0, gamma: 1.0 }).unwrap();
        assert_eq!(
            c,
            CanonicalBath { omega0: 1.0, gamma: 1.0, omega: Cutoff::Infinite, omega_prime: Cutoff::Infinite }
        );
        assert!(c.is_ohmic());

        let c = canonicalize(&BathSpec::SingleRelaxationTime { omega0: 1.0, gamma: 1.0, tau_scaled: 0.01 }).unwrap();
        assert_eq!(c.omega, Cutoff::Finite(100.0));
        assert_eq!(c.omega_prime, Cutoff::Finite(99.0));

        let c = canonicalize(&BathSpec::Qed {
            omega0: 1.0,
            gamma: 0.1,
            omega_prime_scaled: 1000.0,
            large_cutoff_limit: false,
        })
        .unwrap();
        let omega = c.omega.finite().unwrap();
        assert!((omega - 9.900_990_099_009_9).abs() < 1e-10);
        assert!((1.0 / omega - 1e-3 - 0.1).abs() < 1e-14);

        let c =
            canonicalize(&BathSpec::Qed { omega0: 2.0, gamma: 0.1, omega_prime_scaled: 0.0, large_cutoff_limit: true })
                .unwrap();
        assert_eq!(c.omega, Cutoff::Finite(40.0));
        assert!(c.omega_prime.is_infinite());
    }

    #[test]
    fn srt_needs_short_relaxation() {
        let err = canonicalize(&BathSpec::SingleRelaxationTime { omega0: 1.0, gamma: 2.0, tau_scaled: 0.5 });
        assert!(matches!(err, Err(Error::InvalidParameter(_))));
        let spec = BathSpec::SingleRelaxationTime { omega0: 1.0, gamma: 1.0, tau_scaled: 0.5 };
        assert_eq!(spec.warnings().len(), 1);
        let spec = BathSpec::SingleRelaxationTime { omega0: 1.0, gamma: 1.0, tau_scaled: 0.01 };
        assert!(spec.warnings().is_empty());
    }

    #[test]
    fn invalid_specs() {
        assert!(BathSpec::Ohmic { omega0: 0.0, gamma: 1.0 }.validate().is_err());
        assert!(BathSpec::Ohmic { omega0: 1.0, gamma: -1.0 }.validate().is_err());
        assert!(BathSpec::Qed { omega0: 1.0, gamma: 0.1, omega_prime_scaled: 0.0, large_cutoff_limit: false }
            .validate()
            .is_err());
        assert!(CanonicalBath::new(1.0, 1.0, Cutoff::Finite(f64::NAN), Cutoff::Infinite).is_err());
        assert!(roots(1.0, 0.0).is_err());
    }

    #[test]
    fn root_examples() {
        let r = roots(1.0, 2.0).unwrap();
        assert_eq!(r.regime, Regime::Critical);
        assert_eq!(r.z1, Complex64::new(1.0, 0.0));
        assert_eq!(r.z1_conj, Complex64::new(1.0, 0.0));
        assert_eq!(r.omega1, 0.0);

        let r = roots(1.0, 4.0).unwrap();
        assert_eq!(r.regime, Regime::Overdamped);
        let s3 = 3f64.sqrt();
        assert!((r.omega1 - s3).abs() < 1e-15);
        assert!((r.z1.re - (2.0 - s3)).abs() < 1e-15);
        assert!((r.z1_conj.re - (2.0 + s3)).abs() < 1e-15);
        assert!((r.z1 * r.z1_conj - 1.0).norm() < 1e-15);

        // γ → 0: z₁ → γ/2 + i(1 − γ²/8 + …)
        let g = 1e-4;
        let r = roots(1.0, g).unwrap();
        assert_eq!(r.regime, Regime::Underdamped);
        assert_eq!(r.z1.re, g / 2.0);
        assert!((r.z1.im - (1.0 - g * g / 8.0)).abs() < 1e-15);
    }

    #[test]
    fn omega1_arccos_is_continuous_through_critical() {
        let below = omega1_arccos(1.0, 2.0 - 1e-9);
        let above = omega1_arccos(1.0, 2.0 + 1e-9);
        assert!(below.abs() < 1e-8 && above.abs() < 1e-8);
        assert!((omega1_arccos(1.0, 1e-12) - std::f64::consts::FRAC_PI_2).abs() < 1e-11);
        // overdamped value equals −|ω₁| arccosh(γ/2ω₀)
        let g = 5.0;
        let x: f64 = g / 2.0;
        let w1 = (x * x - 1.0).sqrt();
        assert!((omega1_arccos(1.0, g) + w1 * (x + w1).ln()).abs() < 1e-14);
    }

    #[test]
    fn mu_tilde_examples() {
        let ohmic = BathSpec::Ohmic { omega0: 1.0, gamma: 0.7 };
        for z in [Complex64::new(0.0, 0.0), Complex64::new(3.0, 2.0)] {
            assert_eq!(mu_tilde(&ohmic, z).unwrap(), Complex64::new(0.7, 0.0));
        }
        let srt = BathSpec::SingleRelaxationTime { omega0: 1.0, gamma: 1.0, tau_scaled: 0.01 };
        let (zeta, _) = srt_memory(1.0, 1.0, 99.0);
        assert_eq!(mu_tilde(&srt, Complex64::new(0.0, 0.0)).unwrap(), Complex64::new(zeta, 0.0));
        // no pole in the closed upper half plane (pole at −i/τ)
        for k in 0..50 {
            let z = Complex64::new(-200.0 + 8.0 * k as f64, 0.5 * k as f64);
            assert!(mu_tilde(&srt, z).unwrap().norm() <= zeta * 1.000_001);
        }
        assert!(mu_tilde(&srt, Complex64::new(0.0, -1.0)).is_err());
    }

    #[test]
    fn static_susceptibility() {
        let bath = CanonicalBath::ohmic(2.0, 0.3).unwrap();
        let a = susceptibility(&bath, 1.5, Complex64::new(0.0, 0.0)).unwrap();
        assert!((a - Complex64::new(1.0 / (1.5 * 4.0), 0.0)).norm() < 1e-15);
        assert!(susceptibility(&bath, 1.0, Complex64::new(0.0, -1.0)).is_err());
    }

    #[test]
    fn pole_is_reported() {
        let bath = CanonicalBath::ohmic(1.0, 1.0).unwrap();
        assert!(matches!(susceptibility(&bath, 0.0, Complex64::new(1.0, 0.5)), Err(Error::Pole { .. })));
    }

    #[test]
    fn integrand_example_and_partial_fractions() {
        let bath = CanonicalBath::ohmic(1.0, 1.0).unwrap();
        assert!((free_energy_integrand(&bath, 1.0) - 2.0).abs() < 1e-15);

        for &(g, w) in &[(0.3, 0.7), (1.0, 2.5), (2.0, 1.0), (4.0, 0.2), (0.01, 1.0)] {
            let bath = CanonicalBath::ohmic(1.0, g).unwrap();
            let r = bath.roots();
            let w2 = Complex64::new(w * w, 0.0);
            let pf = r.z1 / (w2 + r.z1 * r.z1) + r.z1_conj / (w2 + r.z1_conj * r.z1_conj);
            let third = free_energy_integrand(&bath, w);
            assert!(pf.im.abs() < 1e-12 * third);
            assert!((pf.re - third).abs() < 1e-12 * third, "g={g} w={w}: {} vs {third}", pf.re);
        }
    }
}
