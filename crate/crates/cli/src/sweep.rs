//! Temperature sweeps and their CSV/JSON rendering.

use crate::config::{Format, SweepConfig, Units};
use crate::error::CliError;
use oscbath::thermo::{self, ExpansionModel, ExpansionSpec, Method, Regime, ThermoPoint};
use oscbath::units::{angular_frequency, BOLTZMANN, HBAR};
use oscbath::BathSpec;
use rayon::prelude::*;
use std::fmt::Write;

pub const CSV_HEADER: &str = "theta,F,S,U,C,method,model";

/// One output row, already converted to the requested units.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub theta: f64,
    pub free_energy: f64,
    pub entropy: f64,
    pub internal_energy: f64,
    pub heat_capacity: f64,
    pub method: Method,
    pub model: &'static str,
    pub t_kelvin: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutput {
    pub rows: Vec<Row>,
    pub warnings: Vec<String>,
}

fn to_row(p: ThermoPoint, model: &'static str, units: Units) -> Row {
    let mut row = Row {
        theta: p.theta,
        free_energy: p.free_energy,
        entropy: p.entropy,
        internal_energy: p.internal_energy,
        heat_capacity: p.heat_capacity,
        method: p.method,
        model,
        t_kelvin: None,
    };
    if let Units::Si { omega0_hz } = units {
        let energy = HBAR * angular_frequency(omega0_hz);
        row.free_energy *= energy;
        row.internal_energy *= energy;
        row.entropy *= BOLTZMANN;
        row.heat_capacity *= BOLTZMANN;
        row.t_kelvin = Some(p.theta * energy / BOLTZMANN);
    }
    row
}

fn expansion_model(spec: &BathSpec) -> ExpansionModel {
    match spec {
        BathSpec::Ohmic { .. } => ExpansionModel::Ohmic,
        BathSpec::SingleRelaxationTime { .. } => ExpansionModel::Srt,
        BathSpec::Qed { .. } => ExpansionModel::Qed,
    }
}

fn regime_warnings(config: &SweepConfig, thetas: &[f64]) -> Result<Vec<String>, CliError> {
    let mut out = Vec::new();
    for &method in &config.methods {
        let regime = match method {
            Method::LowTSeries => Regime::LowT,
            Method::HighTSeries => Regime::HighT,
            _ => continue,
        };
        let spec = ExpansionSpec::new(regime, expansion_model(&config.model), config.n_terms)?;
        let outside = thetas.iter().filter(|&&t| !spec.warnings(t).is_empty()).count();
        if outside > 0 {
            out.push(format!("{method} used outside its regime at {outside} of {} temperatures", thetas.len()));
        }
    }
    Ok(out)
}

/// Evaluates every (θ, method) pair, in parallel; rows come out ordered by
/// θ index, then by the order of `config.methods`.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutput, CliError> {
    let thetas = config.grid.values();
    let mut warnings = config.model.warnings();
    warnings.extend(regime_warnings(config, &thetas)?);
    let model = config.model.model_name();
    let tasks: Vec<(f64, Method)> = thetas.iter().flat_map(|&t| config.methods.iter().map(move |&m| (t, m))).collect();
    let results: Vec<_> = tasks
        .par_iter()
        .map(|&(theta, method)| thermo::evaluate(&config.model, theta, method, config.n_terms))
        .collect();
    let mut rows = Vec::with_capacity(results.len());
    for (result, &(theta, method)) in results.into_iter().zip(&tasks) {
        let point = result.map_err(|e| match CliError::from(e) {
            CliError::Numerical(m) => CliError::Numerical(format!("{method} at theta = {theta}: {m}")),
            other => other,
        })?;
        rows.push(to_row(point, model, config.units));
    }
    Ok(SweepOutput { rows, warnings })
}

/// 12 significant digits.
pub fn format_csv(rows: &[Row], units: Units) -> String {
    let si = matches!(units, Units::Si { .. });
    let mut out = String::from(CSV_HEADER);
    if si {
        out.push_str(",T_kelvin");
    }
    out.push('\n');
    for r in rows {
        let _ = write!(
            out,
            "{:.11e},{:.11e},{:.11e},{:.11e},{:.11e},{},{}",
            r.theta, r.free_energy, r.entropy, r.internal_energy, r.heat_capacity, r.method, r.model
        );
        if let Some(t) = r.t_kelvin {
            let _ = write!(out, ",{t:.11e}");
        }
        out.push('\n');
    }
    out
}

/// JSON array of row objects, numbers with 17 significant digits so that
/// they parse back to the same doubles.
pub fn format_json(rows: &[Row]) -> String {
    let mut out = String::from("[\n");
    for (i, r) in rows.iter().enumerate() {
        let _ = write!(
            out,
            "  {{\"theta\": {:.16e}, \"F\": {:.16e}, \"S\": {:.16e}, \"U\": {:.16e}, \"C\": {:.16e}, \"method\": {}, \"model\": {}",
            r.theta,
            r.free_energy,
            r.entropy,
            r.internal_energy,
            r.heat_capacity,
            serde_json::Value::from(r.method.name()),
            serde_json::Value::from(r.model),
        );
        if let Some(t) = r.t_kelvin {
            let _ = write!(out, ", \"T_kelvin\": {t:.16e}");
        }
        out.push('}');
        if i + 1 < rows.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("]\n");
    out
}

pub fn render(config: &SweepConfig, output: &SweepOutput) -> String {
    match config.format {
        Format::Csv => format_csv(&output.rows, config.units),
        Format::Json => format_json(&output.rows),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;

    #[test]
    fn csv_shape() {
        let cfg =
            parse_config("gamma = 1\ntheta_min = 0.1\ntheta_max = 2\npoints = 3\nmethod = exact_j,high_T_series\n")
                .unwrap()
                .build()
                .unwrap();
        let out = run_sweep(&cfg).unwrap();
        assert_eq!(out.rows.len(), 6);
        assert_eq!(out.rows[0].method, Method::ExactJ);
        assert_eq!(out.rows[1].method, Method::HighTSeries);
        assert_eq!(out.warnings.len(), 1);
        let csv = format_csv(&out.rows, cfg.units);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(first.len(), 7);
        assert_eq!(first[0], "1.00000000000e-1");
        assert_eq!(&first[5..], &["exact_j", "ohmic"]);
    }

    #[test]
    fn si_columns() {
        let cfg = parse_config("gamma = 1\ntheta_min = 1\ntheta_max = 1\npoints = 1\nunits = si\nomega0_hz = 1e12\n")
            .unwrap()
            .build()
            .unwrap();
        let out = run_sweep(&cfg).unwrap();
        let reduced = thermo::evaluate(&cfg.model, 1.0, Method::ExactJ, None).unwrap();
        let w = 2.0 * std::f64::consts::PI * 1e12;
        let r = &out.rows[0];
        assert!((r.free_energy / (reduced.free_energy * HBAR * w) - 1.0).abs() < 1e-14);
        assert!((r.entropy / (reduced.entropy * BOLTZMANN) - 1.0).abs() < 1e-14);
        assert!((r.t_kelvin.unwrap() - HBAR * w / BOLTZMANN).abs() < 1e-12);
        let csv = format_csv(&out.rows, cfg.units);
        assert!(csv.starts_with("theta,F,S,U,C,method,model,T_kelvin\n"));
        assert!(format_json(&out.rows).contains("\"T_kelvin\""));
    }
}
