//! SI constants for converting reduced quantities.

/// Reduced Planck constant, J·s (CODATA 2018, exact).
pub const HBAR: f64 = 1.054_571_817e-34;

/// Boltzmann constant, J/K (CODATA 2018, exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Electron radiation time τ_e = 2e²/(3Mc³), rounded to the customary 6·10⁻²⁴ s.
pub const TAU_E_SECONDS: f64 = 6e-24;

/// Angular frequency ω₀ = 2πf₀ for an oscillator frequency given in Hz.
pub fn angular_frequency(f0_hz: f64) -> f64 {
    2.0 * std::f64::consts::PI * f0_hz
}

/// Temperature in kelvin for a reduced temperature θ = kT/(ħω₀).
pub fn kelvin(theta: f64, omega0_rad_s: f64) -> f64 {
    theta * HBAR * omega0_rad_s / BOLTZMANN
}

/// Reduced damping γ/ω₀ = ω₀τ_e in the large-cutoff QED limit.
pub fn qed_large_cutoff_gamma(omega0_rad_s: f64) -> f64 {
    omega0_rad_s * TAU_E_SECONDS
}
