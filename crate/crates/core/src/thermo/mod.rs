//! Free energy, entropy, internal energy and heat capacity.
//!
//! Two exact routes give F(θ):
//!
//! * [`free_energy_exact`]: `θ[J(Ω̂) − J(Ω̂′) − J(ẑ₁) − J(ẑ₁*)]` with
//!   `x̂ = x/(2πθ)`;
//! * [`free_energy_quadrature`]: `(θ/π)∫₀^∞ log(1 − e^{−ω/θ})·g(ω) dω`
//!   with `g` from [`bath::free_energy_integrand`](crate::bath::free_energy_integrand).
//!
//! [`thermo_point`] differentiates the exact route numerically. The series
//! in [`series`] give the low- and high-temperature expansions, and
//! [`zero_point`](mod@zero_point) the ground-state energy the thermal
//! functions leave out.

pub mod series;
pub mod zero_point;

pub use series::{ohmic_high_t, ohmic_low_t, qed_high_t, qed_low_t, ExpansionModel, ExpansionSpec, Regime};
pub use zero_point::{srt_correction, zero_point, zero_point_ohmic_asymptotic, zero_point_quadrature};

use crate::bath::{canonicalize, free_energy_integrand, BathSpec, CanonicalBath, Cutoff};
use crate::quadrature::{integrate_semi_infinite, QuadratureSpec, TailCut};
use crate::stieltjes::{self, j_asymptotic_optimal, j_loggamma, j_series_small_auto};
use crate::{Complex64, Error, Result};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// How a [`ThermoPoint`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    ExactJ,
    ExactQuadrature,
    LowTSeries,
    HighTSeries,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::ExactJ, Method::ExactQuadrature, Method::LowTSeries, Method::HighTSeries];

    pub fn name(self) -> &'static str {
        match self {
            Method::ExactJ => "exact_j",
            Method::ExactQuadrature => "exact_quadrature",
            Method::LowTSeries => "low_T_series",
            Method::HighTSeries => "high_T_series",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        Method::ALL.into_iter().find(|m| m.name().eq_ignore_ascii_case(t)).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "unknown method '{t}' (expected exact_j, exact_quadrature, low_T_series or high_T_series)"
            ))
        })
    }
}

/// Thermodynamic functions at one temperature, with ħ = k = 1: F and U in
/// frequency units, S and C dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoPoint {
    pub theta: f64,
    pub free_energy: f64,
    pub entropy: f64,
    pub internal_energy: f64,
    pub heat_capacity: f64,
    pub method: Method,
}

impl ThermoPoint {
    /// |U − F − θS|.
    pub fn consistency_residual(&self) -> f64 {
        (self.internal_energy - self.free_energy - self.theta * self.entropy).abs()
    }

    fn scaled(self, omega0: f64) -> Self {
        Self {
            theta: self.theta * omega0,
            free_energy: self.free_energy * omega0,
            internal_energy: self.internal_energy * omega0,
            ..self
        }
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if theta > 0.0 && theta.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("temperature must be finite and > 0, got {theta} (use zero_point for theta = 0)")))
    }
}

/// J(a) − J(b) for two positive reals. Close arguments share one method so
/// that a dispatch boundary between them cannot put a step into the
/// difference; distant ones are evaluated independently, since loggamma at
/// large argument loses digits to cancellation.
fn cutoff_difference(a: f64, b: f64) -> Result<f64> {
    let (a, b) = (Complex64::new(a, 0.0), Complex64::new(b, 0.0));
    let (lo, hi) = (a.re.min(b.re), a.re.max(b.re));
    let d = if hi > 2.0 * lo {
        stieltjes::j_right(a)?.value - stieltjes::j_right(b)?.value
    } else if lo >= stieltjes::ASYMPTOTIC_RADIUS {
        j_asymptotic_optimal(a)?.0 - j_asymptotic_optimal(b)?.0
    } else if hi < stieltjes::SERIES_RADIUS {
        j_series_small_auto(a)? - j_series_small_auto(b)?
    } else {
        j_loggamma(a)? - j_loggamma(b)?
    };
    Ok(d.re)
}

/// Free energy from the four-J closed form. Infinite cutoffs contribute
/// nothing; the imaginary parts of the conjugate root pair must cancel.
pub fn free_energy_exact(bath: &CanonicalBath, theta: f64) -> Result<f64> {
    check_theta(theta)?;
    let scale = 1.0 / (2.0 * PI * theta);
    let roots = bath.roots();
    let oscillator = stieltjes::j_right(roots.z1 * scale)?.value + stieltjes::j_right(roots.z1_conj * scale)?.value;
    if oscillator.im.abs() > 1e-12 * (1.0 + oscillator.re.abs()) {
        return Err(Error::Numerical(format!(
            "imaginary residue {:e} in the free energy at theta = {theta}",
            oscillator.im
        )));
    }
    let cutoffs = match (bath.omega, bath.omega_prime) {
        (Cutoff::Finite(a), Cutoff::Finite(b)) => cutoff_difference(a * scale, b * scale)?,
        (Cutoff::Finite(a), Cutoff::Infinite) => stieltjes::j_right(Complex64::new(a * scale, 0.0))?.value.re,
        (Cutoff::Infinite, Cutoff::Finite(b)) => -stieltjes::j_right(Complex64::new(b * scale, 0.0))?.value.re,
        (Cutoff::Infinite, Cutoff::Infinite) => 0.0,
    };
    let f = theta * (cutoffs - oscillator.re);
    if !f.is_finite() {
        return Err(Error::NonFinite(format!("free energy at theta = {theta}")));
    }
    Ok(f)
}

/// Free energy by direct quadrature of the spectral integral.
pub fn free_energy_quadrature(bath: &CanonicalBath, theta: f64) -> Result<f64> {
    free_energy_quadrature_with(bath, theta, &QuadratureSpec::default())
}

/// [`free_energy_quadrature`] with explicit tolerances; the tail mapping
/// scale is set to θ.
pub fn free_energy_quadrature_with(bath: &CanonicalBath, theta: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_theta(theta)?;
    let spec = (*spec).with_tail_cut(TailCut::Compactify { scale: theta });
    let integrand = |w: f64| {
        if w == 0.0 {
            // integrable log singularity; never sampled by Gauss-Kronrod nodes
            return 0.0;
        }
        let thermal = (-(-w / theta).exp_m1()).ln();
        if thermal == 0.0 {
            0.0
        } else {
            thermal * free_energy_integrand(bath, w)
        }
    };
    let estimate = integrate_semi_infinite(integrand, &spec)?;
    Ok(theta / PI * estimate.value)
}

const FIRST_STEP: f64 = 1e-3;
const SECOND_STEP: f64 = 5e-3;

/// F, S, U, C from the exact route. Derivatives are five-point central
/// differences in x = ln θ: S = −F_x/θ, C = (F_x − F_xx)/θ, U = F + θS.
pub fn thermo_point(bath: &CanonicalBath, theta: f64) -> Result<ThermoPoint> {
    differentiate(theta, Method::ExactJ, |t| free_energy_exact(bath, t))
}

/// Like [`thermo_point`] but differentiating the quadrature route.
pub fn thermo_point_quadrature(bath: &CanonicalBath, theta: f64) -> Result<ThermoPoint> {
    differentiate(theta, Method::ExactQuadrature, |t| free_energy_quadrature(bath, t))
}

fn differentiate<F>(theta: f64, method: Method, free_energy: F) -> Result<ThermoPoint>
where
    F: Fn(f64) -> Result<f64>,
{
    check_theta(theta)?;
    let x = theta.ln();
    let at = |dx: f64| -> Result<f64> {
        let v = free_energy((x + dx).exp())?;
        if v == 0.0 || v.abs() < f64::MIN_POSITIVE * 1e10 {
            return Err(Error::StepUnderflow { theta });
        }
        Ok(v)
    };
    let f0 = at(0.0)?;
    let h = FIRST_STEP;
    let (p1, m1, p2, m2) = (at(h)?, at(-h)?, at(2.0 * h)?, at(-2.0 * h)?);
    let f_x = (8.0 * (p1 - m1) - (p2 - m2)) / (12.0 * h);
    let k = SECOND_STEP;
    let (q1, n1, q2, n2) = (at(k)?, at(-k)?, at(2.0 * k)?, at(-2.0 * k)?);
    let f_xx = (16.0 * (q1 + n1) - (q2 + n2) - 30.0 * f0) / (12.0 * k * k);
    if p1 == m1 && q1 == n1 && f_x == 0.0 {
        return Err(Error::StepUnderflow { theta });
    }
    let entropy = -f_x / theta;
    let point = ThermoPoint {
        theta,
        free_energy: f0,
        entropy,
        internal_energy: f0 + theta * entropy,
        heat_capacity: (f_x - f_xx) / theta,
        method,
    };
    if [point.entropy, point.internal_energy, point.heat_capacity].iter().all(|v| v.is_finite()) {
        Ok(point)
    } else {
        Err(Error::NonFinite(format!("derivatives at theta = {theta}")))
    }
}

/// One row of a temperature table for a physical model. `n_terms` applies
/// to the series methods (defaults: 3 low-T, 6 high-T for Ohmic; 2 for QED).
///
/// The relaxation-time model uses the Ohmic series plus
/// [`srt_correction`], which assumes θ ≪ Ω, Ω′.
pub fn evaluate(spec: &BathSpec, theta: f64, method: Method, n_terms: Option<usize>) -> Result<ThermoPoint> {
    let bath = canonicalize(spec)?;
    match method {
        Method::ExactJ => thermo_point(&bath, theta),
        Method::ExactQuadrature => thermo_point_quadrature(&bath, theta),
        Method::LowTSeries | Method::HighTSeries => {
            check_theta(theta)?;
            let regime = if method == Method::LowTSeries { Regime::LowT } else { Regime::HighT };
            let model = match spec {
                BathSpec::Qed { .. } => ExpansionModel::Qed,
                BathSpec::SingleRelaxationTime { .. } => ExpansionModel::Srt,
                BathSpec::Ohmic { .. } => ExpansionModel::Ohmic,
            };
            let expansion = ExpansionSpec::new(regime, model, n_terms)?;
            let w0 = bath.omega0;
            let reduced = CanonicalBath::new(
                1.0,
                bath.gamma / w0,
                scale_cutoff(bath.omega, w0),
                scale_cutoff(bath.omega_prime, w0),
            )?;
            Ok(expansion.evaluate(&reduced, theta / w0)?.scaled(w0))
        }
    }
}

fn scale_cutoff(c: Cutoff, w0: f64) -> Cutoff {
    match c {
        Cutoff::Finite(v) => Cutoff::Finite(v / w0),
        Cutoff::Infinite => Cutoff::Infinite,
    }
}
