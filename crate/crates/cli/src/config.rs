//! Sweep settings: a `key = value` config file merged with command-line
//! flags, then validated into a [`SweepConfig`].

use crate::error::CliError;
use oscbath::thermo::Method;
use oscbath::units::{angular_frequency, qed_large_cutoff_gamma};
use oscbath::BathSpec;
use std::fmt;
use std::str::FromStr;

/// Upper limit on grid points, to keep a hostile config from allocating
/// unbounded memory.
pub const MAX_POINTS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Ohmic,
    Srt,
    Qed,
}

impl FromStr for ModelKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ohmic" => Ok(ModelKind::Ohmic),
            "srt" | "single_relaxation_time" => Ok(ModelKind::Srt),
            "qed" => Ok(ModelKind::Qed),
            other => Err(format!("unknown model '{other}' (expected ohmic, srt or qed)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format '{other}' (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitsKind {
    Reduced,
    Si,
}

impl FromStr for UnitsKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "reduced" => Ok(UnitsKind::Reduced),
            "si" => Ok(UnitsKind::Si),
            other => Err(format!("unknown units '{other}' (expected reduced or si)")),
        }
    }
}

/// Output units. SI mode scales F and U by ħω₀, S and C by k, and adds the
/// temperature in kelvin; `omega0_hz` is the ordinary frequency f₀ = ω₀/2π.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Units {
    Reduced,
    Si { omega0_hz: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaGrid {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl ThetaGrid {
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                let t = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.min + t * (self.max - self.min),
                    Spacing::Log => (self.min.ln() + t * (self.max.ln() - self.min.ln())).exp(),
                }
            })
            .collect()
    }
}

/// A validated sweep request.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub model: BathSpec,
    pub grid: ThetaGrid,
    pub methods: Vec<Method>,
    pub format: Format,
    pub units: Units,
    /// Order of the series methods; `None` uses their defaults.
    pub n_terms: Option<usize>,
}

/// Partially specified settings, from a config file or from flags.
/// Parameters are dimensionless: `gamma = γ/ω₀`, `tau = τω₀`,
/// `omega_prime = Ω′/ω₀`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepSettings {
    pub model: Option<ModelKind>,
    pub gamma: Option<f64>,
    pub tau: Option<f64>,
    pub omega_prime: Option<f64>,
    pub large_cutoff: Option<bool>,
    pub theta_min: Option<f64>,
    pub theta_max: Option<f64>,
    pub points: Option<usize>,
    pub log: Option<bool>,
    pub methods: Option<Vec<Method>>,
    pub format: Option<Format>,
    pub units: Option<UnitsKind>,
    pub omega0_hz: Option<f64>,
    pub terms: Option<usize>,
}

/// A config-file syntax or value error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ConfigError {}

/// Parses a comma-separated method list such as `exact_j,high_T_series`.
/// Duplicates are dropped; order is kept.
pub fn parse_method_list(s: &str) -> Result<Vec<Method>, String> {
    let mut out: Vec<Method> = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let m: Method = item.parse().map_err(|e: oscbath::Error| e.to_string())?;
        if !out.contains(&m) {
            out.push(m);
        }
    }
    if out.is_empty() {
        return Err("method list is empty".into());
    }
    Ok(out)
}

fn parse_bool(s: &str) -> Result<bool, String> {
    match s.trim().to_ascii_lowercase().as_str() {
        "true" | "yes" | "on" | "1" => Ok(true),
        "false" | "no" | "off" | "0" => Ok(false),
        other => Err(format!("expected a boolean, got '{other}'")),
    }
}

fn parse_num<T: FromStr>(s: &str) -> Result<T, String> {
    s.trim().parse().map_err(|_| format!("expected a number, got '{}'", s.trim()))
}

/// Parses `key = value` lines. `#` starts a comment; keys may use `-` or
/// `_`; a repeated key keeps the last value.
pub fn parse_config(text: &str) -> Result<SweepSettings, ConfigError> {
    let mut s = SweepSettings::default();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| ConfigError { line, message: format!("expected 'key = value', got '{content}'") })?;
        let key = key.trim().to_ascii_lowercase().replace('-', "_");
        let value = value.trim();
        let err = |message: String| ConfigError { line, message: format!("{key}: {message}") };
        match key.as_str() {
            "model" => s.model = Some(value.parse().map_err(err)?),
            "gamma" => s.gamma = Some(parse_num(value).map_err(err)?),
            "tau" => s.tau = Some(parse_num(value).map_err(err)?),
            "omega_prime" => s.omega_prime = Some(parse_num(value).map_err(err)?),
            "large_cutoff" => s.large_cutoff = Some(parse_bool(value).map_err(err)?),
            "theta_min" => s.theta_min = Some(parse_num(value).map_err(err)?),
            "theta_max" => s.theta_max = Some(parse_num(value).map_err(err)?),
            "points" => s.points = Some(parse_num(value).map_err(err)?),
            "log" => s.log = Some(parse_bool(value).map_err(err)?),
            "method" | "methods" => s.methods = Some(parse_method_list(value).map_err(err)?),
            "format" => s.format = Some(value.parse().map_err(err)?),
            "units" => s.units = Some(value.parse().map_err(err)?),
            "omega0_hz" => s.omega0_hz = Some(parse_num(value).map_err(err)?),
            "terms" => s.terms = Some(parse_num(value).map_err(err)?),
            _ => return Err(ConfigError { line, message: format!("unknown key '{key}'") }),
        }
    }
    Ok(s)
}

impl SweepSettings {
    /// Fields set in `over` replace those in `self`.
    pub fn merge(self, over: SweepSettings) -> SweepSettings {
        SweepSettings {
            model: over.model.or(self.model),
            gamma: over.gamma.or(self.gamma),
            tau: over.tau.or(self.tau),
            omega_prime: over.omega_prime.or(self.omega_prime),
            large_cutoff: over.large_cutoff.or(self.large_cutoff),
            theta_min: over.theta_min.or(self.theta_min),
            theta_max: over.theta_max.or(self.theta_max),
            points: over.points.or(self.points),
            log: over.log.or(self.log),
            methods: over.methods.or(self.methods),
            format: over.format.or(self.format),
            units: over.units.or(self.units),
            omega0_hz: over.omega0_hz.or(self.omega0_hz),
            terms: over.terms.or(self.terms),
        }
    }

    fn units(&self) -> Result<Units, CliError> {
        match self.units.unwrap_or(UnitsKind::Reduced) {
            UnitsKind::Reduced => Ok(Units::Reduced),
            UnitsKind::Si => match self.omega0_hz {
                Some(f) if f > 0.0 && f.is_finite() => Ok(Units::Si { omega0_hz: f }),
                Some(f) => Err(CliError::Config(format!("omega0_hz must be finite and > 0, got {f}"))),
                None => Err(CliError::Config("si units need omega0_hz".into())),
            },
        }
    }

    /// The bath model alone (used by `zeropoint` as well as `sweep`).
    pub fn bath(&self) -> Result<BathSpec, CliError> {
        let units = self.units()?;
        let model = self.model.unwrap_or(ModelKind::Ohmic);
        let need = |name: &str, v: Option<f64>| {
            v.ok_or_else(|| CliError::Config(format!("model {model:?} needs {name}").to_lowercase()))
        };
        let large_cutoff = self.large_cutoff.unwrap_or(false);
        let gamma = match (self.gamma, model, large_cutoff, units) {
            (Some(g), ..) => g,
            (None, ModelKind::Qed, true, Units::Si { omega0_hz }) => {
                qed_large_cutoff_gamma(angular_frequency(omega0_hz))
            }
            (None, ..) => need("gamma", None)?,
        };
        let spec = match model {
            ModelKind::Ohmic => BathSpec::Ohmic { omega0: 1.0, gamma },
            ModelKind::Srt => BathSpec::SingleRelaxationTime { omega0: 1.0, gamma, tau_scaled: need("tau", self.tau)? },
            ModelKind::Qed => BathSpec::Qed {
                omega0: 1.0,
                gamma,
                omega_prime_scaled: if large_cutoff { f64::INFINITY } else { need("omega_prime", self.omega_prime)? },
                large_cutoff_limit: large_cutoff,
            },
        };
        oscbath::bath::canonicalize(&spec).map_err(|e| CliError::Config(e.to_string()))?;
        Ok(spec)
    }

    /// Validates and fills defaults: Ohmic, θ ∈ [0.01, 10], 50 linear
    /// points, exact_j, CSV, reduced units.
    pub fn build(&self) -> Result<SweepConfig, CliError> {
        let model = self.bath()?;
        let grid = ThetaGrid {
            min: self.theta_min.unwrap_or(0.01),
            max: self.theta_max.unwrap_or(10.0),
            count: self.points.unwrap_or(50),
            spacing: if self.log.unwrap_or(false) { Spacing::Log } else { Spacing::Linear },
        };
        if !(grid.min > 0.0 && grid.min.is_finite() && grid.max.is_finite()) {
            return Err(CliError::Config(format!("theta_min must be finite and > 0, got {}", grid.min)));
        }
        if grid.max < grid.min {
            return Err(CliError::Config(format!("theta_max {} is below theta_min {}", grid.max, grid.min)));
        }
        if grid.count == 0 || grid.count > MAX_POINTS {
            return Err(CliError::Config(format!("points must be in 1..={MAX_POINTS}, got {}", grid.count)));
        }
        Ok(SweepConfig {
            model,
            grid,
            methods: self.methods.clone().unwrap_or_else(|| vec![Method::ExactJ]),
            format: self.format.unwrap_or(Format::Csv),
            units: self.units()?,
            n_terms: self.terms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_comments_and_dashes() {
        let text = "# sweep\nmodel = srt\ngamma=1  # damping\ntau = 0.01\ntheta-min = 0.1\n\npoints = 5\nlog = yes\nmethod = exact_j, high_T_series\n";
        let s = parse_config(text).unwrap();
        assert_eq!(s.model, Some(ModelKind::Srt));
        assert_eq!(s.theta_min, Some(0.1));
        assert_eq!(s.points, Some(5));
        assert_eq!(s.log, Some(true));
        assert_eq!(s.methods, Some(vec![Method::ExactJ, Method::HighTSeries]));
        let c = s.build().unwrap();
        assert_eq!(c.grid.values().len(), 5);
        assert!(matches!(c.model, BathSpec::SingleRelaxationTime { tau_scaled, .. } if tau_scaled == 0.01));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_config("model = ohmic\n\ngamma = fast\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.to_string().starts_with("line 3: gamma"));
        assert_eq!(parse_config("oops\n").unwrap_err().line, 1);
        assert_eq!(parse_config("a = 1").unwrap_err().message, "unknown key 'a'");
    }

    #[test]
    fn flags_override_file() {
        let file = parse_config("gamma = 0.5\npoints = 7\n").unwrap();
        let flags = SweepSettings { gamma: Some(2.0), ..Default::default() };
        let merged = file.merge(flags);
        assert_eq!(merged.gamma, Some(2.0));
        assert_eq!(merged.points, Some(7));
    }

    #[test]
    fn method_lists() {
        assert_eq!(parse_method_list("exact_j,exact_j").unwrap(), vec![Method::ExactJ]);
        assert!(parse_method_list(" , ").is_err());
        assert!(parse_method_list("exact_j,bogus").is_err());
    }

    #[test]
    fn grid_spacing() {
        let g = ThetaGrid { min: 0.01, max: 10.0, count: 4, spacing: Spacing::Log };
        let v = g.values();
        assert!((v[1] - 0.1).abs() < 1e-15 && (v[3] - 10.0).abs() < 1e-13);
        let g = ThetaGrid { min: 1.0, max: 2.0, count: 3, spacing: Spacing::Linear };
        assert_eq!(g.values(), vec![1.0, 1.5, 2.0]);
    }

    #[test]
    fn invalid_configs() {
        for text in [
            "theta_min = 0",
            "theta_min = 2\ntheta_max = 1",
            "points = 0",
            "units = si",
            "model = srt\ngamma = 1",
            "model = srt\ngamma = 2\ntau = 1",
            "gamma = nan",
            "model = qed\ngamma = 0.1",
        ] {
            let s = parse_config(text).unwrap();
            let s =
                if s.gamma.is_none() { s.merge(SweepSettings { gamma: Some(1.0), ..Default::default() }) } else { s };
            assert!(matches!(s.build(), Err(CliError::Config(_))), "{text}");
        }
    }

    #[test]
    fn si_large_cutoff_gamma_default() {
        let s = parse_config("model = qed\nlarge_cutoff = true\nunits = si\nomega0_hz = 1e14\n").unwrap();
        match s.build().unwrap().model {
            BathSpec::Qed { gamma, large_cutoff_limit: true, .. } => {
                assert!((gamma - 2.0 * std::f64::consts::PI * 1e14 * 6e-24).abs() < 1e-22)
            }
            other => panic!("{other:?}"),
        }
    }
}
