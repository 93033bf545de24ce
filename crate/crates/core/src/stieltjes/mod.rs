//! The Stieltjes J-function
//!
//! ```text
//! J(z) = −(1/π) ∫₀^∞ dt log(1 − e^{−2πt}) z/(z² + t²),   Re z > 0
//!      = log Γ(z+1) − log √(2π) − (z + ½) log z + z
//! ```
//!
//! evaluated by independent routes:
//!
//! | route                       | region                         |
//! |-----------------------------|--------------------------------|
//! | [`j_quadrature`]            | `Re z > 0`                     |
//! | [`j_loggamma`]              | plane cut along `(−∞, 0]`      |
//! | [`j_lanczos`]               | `Re z > 0`                     |
//! | [`j_series_small`]          | `|z| < 1`, off the cut         |
//! | [`j_asymptotic`]            | large `|z|`, `Re z ≥ 0`        |
//! | [`j_continue_left`]         | `Re z ≤ 0`, off the cut        |
//!
//! The integral representation is stated in the literature both with
//! `Im z > 0` and with `Re z > 0`; the integral converges for `Re z > 0`,
//! which is the condition enforced here. The imaginary axis is a natural
//! boundary of the integral (not of J), so left-half-plane values come from
//! the reflection identity in [`j_continue_left`].

mod asymptotic;
mod bernoulli;
mod continuation;
mod integral;
mod lanczos;
mod loggamma;
mod series;
mod zeta;

pub use asymptotic::{j_asymptotic, j_asymptotic_optimal, MAX_ASYMPTOTIC_TERMS};
pub use bernoulli::{bernoulli, BernoulliTable, BERNOULLI};
pub use continuation::j_continue_left;
pub use integral::{j_quadrature, j_quadrature_estimates, j_quadrature_with};
pub use lanczos::{j_lanczos, LanczosCoefficients, LANCZOS_G5_N6};
pub use loggamma::{j_loggamma, ln_gamma};
pub use series::{j_series_small, j_series_small_auto};
pub use zeta::{zeta, ZETA_TABLE_LEN};

use crate::{Error, Result};
use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

/// Euler's constant to full double precision.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `log √(2π)`.
pub const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Below this modulus the power series is used by the dispatcher.
pub(crate) const SERIES_RADIUS: f64 = 0.5;
/// Above this modulus the asymptotic series is used by the dispatcher.
pub(crate) const ASYMPTOTIC_RADIUS: f64 = 8.0;

/// A complex number with finite components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexValue(Complex64);

impl ComplexValue {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        Self::try_from(Complex64::new(re, im))
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    pub fn get(&self) -> Complex64 {
        self.0
    }
}

impl TryFrom<Complex64> for ComplexValue {
    type Error = Error;

    fn try_from(z: Complex64) -> Result<Self> {
        if z.re.is_finite() && z.im.is_finite() {
            Ok(Self(z))
        } else {
            Err(Error::NonFinite(format!("complex value {z}")))
        }
    }
}

impl From<ComplexValue> for Complex64 {
    fn from(z: ComplexValue) -> Self {
        z.0
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.0.re, self.0.im)
    }
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` (also with `j`), e.g. `1.5e-3-2i`, `-i`.
impl FromStr for ComplexValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("cannot parse {s:?} as a complex number"));
        let s = s.trim();
        if s.is_empty() {
            return Err(bad());
        }
        let parse_real = |t: &str| -> Result<f64> {
            if t.is_empty() || t.starts_with(['+', '-']) && t[1..].starts_with(['+', '-']) {
                return Err(bad());
            }
            t.parse::<f64>().map_err(|_| bad())
        };
        let parse_imag = |t: &str| -> Result<f64> {
            match t {
                "" | "+" => Ok(1.0),
                "-" => Ok(-1.0),
                _ => parse_real(t),
            }
        };

        let (re, im) = match s.strip_suffix(['i', 'j']) {
            Some(body) => {
                let bytes = body.as_bytes();
                let split = (1..bytes.len())
                    .rev()
                    .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
                match split {
                    Some(k) => (parse_real(&body[..k])?, parse_imag(&body[k..])?),
                    None => (0.0, parse_imag(body)?),
                }
            }
            None => (parse_real(s)?, 0.0),
        };
        Self::new(re, im).map_err(|_| bad())
    }
}

/// Selects how J is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JMethod {
    Quadrature,
    LogGamma,
    Lanczos,
    SeriesSmall,
    Asymptotic,
    Auto,
}

impl JMethod {
    pub const ALL: [JMethod; 6] = [
        JMethod::Quadrature,
        JMethod::LogGamma,
        JMethod::Lanczos,
        JMethod::SeriesSmall,
        JMethod::Asymptotic,
        JMethod::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            JMethod::Quadrature => "quadrature",
            JMethod::LogGamma => "loggamma",
            JMethod::Lanczos => "lanczos",
            JMethod::SeriesSmall => "series",
            JMethod::Asymptotic => "asymptotic",
            JMethod::Auto => "auto",
        }
    }
}

impl fmt::Display for JMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for JMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "quadrature" => Ok(JMethod::Quadrature),
            "loggamma" | "log_gamma" | "log-gamma" => Ok(JMethod::LogGamma),
            "lanczos" => Ok(JMethod::Lanczos),
            "series" | "series_small" | "series-small" => Ok(JMethod::SeriesSmall),
            "asymptotic" => Ok(JMethod::Asymptotic),
            "auto" => Ok(JMethod::Auto),
            other => Err(Error::Domain(format!(
                "unknown J method {other:?} (expected quadrature, loggamma, lanczos, series, asymptotic or auto)"
            ))),
        }
    }
}

/// The route that actually produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Quadrature,
    LogGamma,
    Lanczos,
    SeriesSmall,
    Asymptotic,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Quadrature => "quadrature",
            Route::LogGamma => "loggamma",
            Route::Lanczos => "lanczos",
            Route::SeriesSmall => "series",
            Route::Asymptotic => "asymptotic",
        }
    }
}

/// A J value together with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JValue {
    pub value: Complex64,
    pub route: Route,
    /// Reached through the left-half-plane reflection identity.
    pub continued: bool,
    /// Magnitude of the first omitted asymptotic term, when applicable.
    pub truncation_bound: Option<f64>,
}

impl JValue {
    fn plain(value: Complex64, route: Route) -> Self {
        Self { value, route, continued: false, truncation_bound: None }
    }

    pub fn route_name(&self) -> String {
        if self.continued {
            format!("continuation({})", self.route.name())
        } else {
            self.route.name().to_string()
        }
    }
}

pub(crate) fn check_finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(format!("J argument {z}")))
    }
}

pub(crate) fn on_cut(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0
}

pub(crate) fn require_right_half(z: Complex64, method: &str) -> Result<()> {
    check_finite(z)?;
    if z.re > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{method} needs Re z > 0, got {z}; use the continuation (auto) or loggamma route")))
    }
}

/// Right-half-plane dispatch (closed, excluding 0): power series near the
/// origin, asymptotic series far out, log-gamma identity in between.
pub(crate) fn j_right(z: Complex64) -> Result<JValue> {
    check_finite(z)?;
    if z.re < 0.0 || (z.re == 0.0 && z.im == 0.0) {
        return Err(Error::Domain(format!("right-half-plane dispatch called with {z}")));
    }
    let r = z.norm();
    if r < SERIES_RADIUS {
        Ok(JValue::plain(j_series_small_auto(z)?, Route::SeriesSmall))
    } else if r >= ASYMPTOTIC_RADIUS {
        let (value, bound) = j_asymptotic_optimal(z)?;
        Ok(JValue { value, route: Route::Asymptotic, continued: false, truncation_bound: Some(bound) })
    } else {
        Ok(JValue::plain(j_loggamma(z)?, Route::LogGamma))
    }
}

/// J(z) anywhere off the cut along the non-positive real axis.
pub fn j_auto(z: Complex64) -> Result<Complex64> {
    j_auto_report(z).map(|v| v.value)
}

/// Like [`j_auto`] but reports the dispatched route.
pub fn j_auto_report(z: Complex64) -> Result<JValue> {
    check_finite(z)?;
    if on_cut(z) {
        return Err(Error::BranchCut { re: z.re, im: z.im });
    }
    if z.re > 0.0 {
        j_right(z)
    } else {
        continuation::j_continue_left_report(z)
    }
}

/// Evaluates J with an explicit method. `terms` is used by the series
/// methods (defaults: converge to precision / optimal truncation).
pub fn evaluate(z: Complex64, method: JMethod, terms: Option<usize>) -> Result<JValue> {
    match method {
        JMethod::Quadrature => Ok(JValue::plain(j_quadrature(z)?, Route::Quadrature)),
        JMethod::LogGamma => Ok(JValue::plain(j_loggamma(z)?, Route::LogGamma)),
        JMethod::Lanczos => Ok(JValue::plain(j_lanczos(z)?, Route::Lanczos)),
        JMethod::SeriesSmall => {
            let value = match terms {
                Some(n) => j_series_small(z, n)?,
                None => j_series_small_auto(z)?,
            };
            Ok(JValue::plain(value, Route::SeriesSmall))
        }
        JMethod::Asymptotic => {
            let (value, bound) = match terms {
                Some(n) => j_asymptotic(z, n)?,
                None => j_asymptotic_optimal(z)?,
            };
            Ok(JValue { value, route: Route::Asymptotic, continued: false, truncation_bound: Some(bound) })
        }
        JMethod::Auto => j_auto_report(z),
    }
}
