//! Low- and high-temperature expansions, in reduced units (ω₀ = 1).
//!
//! Low temperature (θ ≪ 1/2π), Ohmic:
//!
//! ```text
//! F = −Σₙ bₙ θ^{2n+2},  bₙ = B_{2n+2}/((2n+1)(2n+2)) · (2π)^{2n+1} · 2T_{2n+1}(γ/2)
//! ```
//!
//! whose first terms are πγθ²/6 and π³γ(3 − γ²)θ⁴/45. QED drops n = 0.
//!
//! High temperature (θ ≫ 1/2π), Ohmic:
//!
//! ```text
//! F = −θ log θ − (γ/2π) log 2πθ − ω₁φ/π − (γ/2π)(1 − γ_E)
//!     − 2θ Σ_{n≥2} (−1)ⁿ ζ(n)/n · Tₙ(γ/2)/(2πθ)ⁿ
//! ```
//!
//! with ω₁φ = ω₁ arccos(γ/2), continued past critical damping.

use super::{srt_correction, Method, ThermoPoint};
use crate::bath::{omega1_arccos, CanonicalBath};
use crate::stieltjes::{bernoulli, zeta, BernoulliTable, EULER_GAMMA};
use crate::{Error, Result};
use std::f64::consts::PI;

/// Largest low-temperature order available from the Bernoulli table.
pub const MAX_LOW_T_TERMS: usize = BernoulliTable::MAX_INDEX / 2;
/// Practical cap on the high-temperature ζ-series.
pub const MAX_HIGH_T_TERMS: usize = 200;
pub const DEFAULT_OHMIC_LOW_T_TERMS: usize = 3;
pub const DEFAULT_OHMIC_HIGH_T_TERMS: usize = 6;
pub const QED_TERMS: usize = 2;

/// Chebyshev polynomial Tₙ(x) by recurrence; for |x| > 1 this is the
/// cosh continuation.
pub fn chebyshev_t(n: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, x);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn point(theta: f64, f: f64, s: f64, u: f64, c: f64, method: Method) -> ThermoPoint {
    ThermoPoint { theta, free_energy: f, entropy: s, internal_energy: u, heat_capacity: c, method }
}

fn check(theta: f64, gamma: f64) -> Result<()> {
    if !(theta > 0.0 && theta.is_finite()) {
        return Err(Error::Domain(format!("temperature must be finite and > 0, got {theta}")));
    }
    if !(gamma >= 0.0 && gamma.is_finite()) {
        return Err(Error::InvalidParameter(format!("gamma must be finite and >= 0, got {gamma}")));
    }
    Ok(())
}

fn low_t_sum(theta: f64, gamma: f64, orders: std::ops::Range<usize>) -> ThermoPoint {
    let (mut f, mut s, mut u, mut c) = (0.0, 0.0, 0.0, 0.0);
    let x = gamma / 2.0;
    for n in orders {
        let k = 2 * n + 2;
        let b = bernoulli(k) / ((k - 1) * k) as f64 * (2.0 * PI).powi(k as i32 - 1) * 2.0 * chebyshev_t(k - 1, x);
        let tk = theta.powi(k as i32);
        f -= b * tk;
        s += k as f64 * b * tk / theta;
        u += (k - 1) as f64 * b * tk;
        c += ((k - 1) * k) as f64 * b * tk / theta;
    }
    point(theta, f, s, u, c, Method::LowTSeries)
}

fn check_terms(n_terms: usize, max: usize, what: &str) -> Result<()> {
    if (1..=max).contains(&n_terms) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{what} takes 1..={max} terms, got {n_terms}")))
    }
}

/// Ohmic low-temperature series with `n_terms` orders (θ², θ⁴, θ⁶, …).
pub fn ohmic_low_t(theta: f64, gamma: f64, n_terms: usize) -> Result<ThermoPoint> {
    check(theta, gamma)?;
    check_terms(n_terms, MAX_LOW_T_TERMS, "ohmic low-T series")?;
    Ok(low_t_sum(theta, gamma, 0..n_terms))
}

/// QED low-temperature series: the Ohmic series without its θ² order, so
/// it starts at θ⁴.
pub fn qed_low_t(theta: f64, gamma: f64, n_terms: usize) -> Result<ThermoPoint> {
    check(theta, gamma)?;
    check_terms(n_terms, MAX_LOW_T_TERMS - 1, "QED low-T series")?;
    Ok(low_t_sum(theta, gamma, 1..n_terms + 1))
}

/// Ohmic high-temperature series with `n_terms` ζ-terms beyond the closed
/// part (n_terms = 0 keeps only the logarithmic terms).
pub fn ohmic_high_t(theta: f64, gamma: f64, n_terms: usize) -> Result<ThermoPoint> {
    check(theta, gamma)?;
    if n_terms > MAX_HIGH_T_TERMS {
        return Err(Error::InvalidParameter(format!(
            "ohmic high-T series takes at most {MAX_HIGH_T_TERMS} terms, got {n_terms}"
        )));
    }
    let g = gamma;
    let ln2pt = (2.0 * PI * theta).ln();
    let phase = if g > 0.0 { omega1_arccos(1.0, g) } else { PI / 2.0 };
    let mut f = -theta * theta.ln() - g / (2.0 * PI) * ln2pt - phase / PI - g / (2.0 * PI) * (1.0 - EULER_GAMMA);
    let mut s = theta.ln() + 1.0 + g / (2.0 * PI * theta);
    let mut u = theta - g / (2.0 * PI) * (ln2pt - EULER_GAMMA) - phase / PI;
    let mut c = 1.0 - g / (2.0 * PI * theta);
    let y = 1.0 / (2.0 * PI * theta);
    let x = g / 2.0;
    let mut yn = y;
    for n in 2..n_terms + 2 {
        yn *= y;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let a = sign * zeta(n) * yn * chebyshev_t(n, x);
        let nf = n as f64;
        f -= 2.0 * theta * a / nf;
        s -= 2.0 * (nf - 1.0) * a / nf;
        u -= 2.0 * theta * a;
        c += 2.0 * (nf - 1.0) * a;
    }
    Ok(point(theta, f, s, u, c, Method::HighTSeries))
}

/// QED high-temperature expansion: `F = −θ log θ + πγθ²/6` (one or both
/// terms), with S, U and C its derivatives.
pub fn qed_high_t(theta: f64, gamma: f64, n_terms: usize) -> Result<ThermoPoint> {
    check(theta, gamma)?;
    check_terms(n_terms, QED_TERMS, "QED high-T expansion")?;
    let (mut f, mut s, mut u, mut c) = (-theta * theta.ln(), theta.ln() + 1.0, theta, 1.0);
    if n_terms == 2 {
        f += PI * theta * theta * gamma / 6.0;
        s -= PI * theta * gamma / 3.0;
        u -= PI * theta * theta * gamma / 6.0;
        c -= PI * theta * gamma / 3.0;
    }
    Ok(point(theta, f, s, u, c, Method::HighTSeries))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    LowT,
    HighT,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionModel {
    Ohmic,
    Qed,
    /// Ohmic series plus the leading cutoff correction.
    Srt,
}

/// A choice of expansion; evaluates against a bath in reduced units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionSpec {
    pub regime: Regime,
    pub model: ExpansionModel,
    pub n_terms: usize,
}

impl ExpansionSpec {
    pub fn new(regime: Regime, model: ExpansionModel, n_terms: Option<usize>) -> Result<Self> {
        let default = match (regime, model) {
            (_, ExpansionModel::Qed) => QED_TERMS,
            (Regime::LowT, _) => DEFAULT_OHMIC_LOW_T_TERMS,
            (Regime::HighT, _) => DEFAULT_OHMIC_HIGH_T_TERMS,
        };
        let spec = Self { regime, model, n_terms: n_terms.unwrap_or(default) };
        // validate eagerly with a harmless point
        spec.raw(1.0, 1.0)?;
        Ok(spec)
    }

    fn raw(&self, theta: f64, gamma: f64) -> Result<ThermoPoint> {
        match (self.regime, self.model) {
            (Regime::LowT, ExpansionModel::Qed) => qed_low_t(theta, gamma, self.n_terms),
            (Regime::HighT, ExpansionModel::Qed) => qed_high_t(theta, gamma, self.n_terms),
            (Regime::LowT, _) => ohmic_low_t(theta, gamma, self.n_terms),
            (Regime::HighT, _) => ohmic_high_t(theta, gamma, self.n_terms),
        }
    }

    /// Expansion at θ for a bath with ω₀ = 1.
    pub fn evaluate(&self, bath: &CanonicalBath, theta: f64) -> Result<ThermoPoint> {
        if bath.omega0 != 1.0 {
            return Err(Error::InvalidParameter(format!(
                "expansions work in reduced units (omega0 = 1), got omega0 = {}",
                bath.omega0
            )));
        }
        let mut p = self.raw(theta, bath.gamma)?;
        if self.model == ExpansionModel::Srt {
            let df = srt_correction(bath, theta);
            // δF ∝ θ²: δS = −2δF/θ, δU = −δF, δC = −2δF/θ
            p.free_energy += df;
            p.entropy -= 2.0 * df / theta;
            p.internal_energy -= df;
            p.heat_capacity -= 2.0 * df / theta;
        }
        Ok(p)
    }

    /// Advisory notes when θ lies outside the expansion's regime.
    pub fn warnings(&self, theta: f64) -> Vec<String> {
        let crossover = 1.0 / (2.0 * PI);
        match self.regime {
            Regime::LowT if theta > 0.5 * crossover => {
                vec![format!("low-T series used at theta = {theta}, not << 1/(2 pi)")]
            }
            Regime::HighT if theta < 2.0 * crossover => {
                vec![format!("high-T series used at theta = {theta}, not >> 1/(2 pi)")]
            }
            _ => Vec::new(),
        }
    }
}
