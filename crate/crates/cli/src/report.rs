//! Text reports for the `jfun` and `zeropoint` subcommands.

use crate::config::{ModelKind, SweepSettings};
use crate::error::CliError;
use oscbath::bath::canonicalize;
use oscbath::stieltjes::{evaluate, ComplexValue, JMethod};
use oscbath::thermo::{zero_point, zero_point_ohmic_asymptotic};
use oscbath::Error;

/// J(z) with 15 significant digits, the route taken and, for the
/// asymptotic series, the truncation bound.
pub fn jfun_report(z: ComplexValue, method: JMethod, terms: Option<usize>) -> Result<String, CliError> {
    let v = evaluate(z.get(), method, terms).map_err(|e| {
        let hint = match (&e, method) {
            (Error::BranchCut { .. }, _) => "J is cut along the non-positive real axis; move z off the axis",
            (Error::Domain(_), JMethod::SeriesSmall) => "the power series needs |z| < 1; try --method auto",
            (Error::Domain(_), JMethod::Asymptotic) => {
                "the asymptotic series needs Re z >= 0 and large |z|; try --method auto"
            }
            (Error::Domain(_), _) => "try --method auto",
            _ => "",
        };
        let base = CliError::from(e);
        if hint.is_empty() || base.to_string().contains("--method") {
            base
        } else {
            match base {
                CliError::Config(m) => CliError::Config(format!("{m} ({hint})")),
                other => other,
            }
        }
    })?;
    let mut out = format!(
        "z = {z}\nJ = {:.14e} {} {:.14e}i\nroute: {}\n",
        v.value.re,
        if v.value.im.is_sign_negative() { '-' } else { '+' },
        v.value.im.abs(),
        v.route_name()
    );
    if let Some(b) = v.truncation_bound {
        out.push_str(&format!("truncation bound: {b:.3e}\n"));
    }
    Ok(out)
}

/// Zero-point energy in units of ħω₀. Ohmic baths use the small-τ
/// asymptotic form and need `tau`; QED baths report divergence.
pub fn zero_point_report(settings: &SweepSettings) -> Result<String, CliError> {
    let spec = settings.bath()?;
    match settings.model.unwrap_or(ModelKind::Ohmic) {
        ModelKind::Ohmic => {
            let tau = settings.tau.ok_or_else(|| {
                CliError::Divergent(
                    "zero-point energy of the Ohmic model diverges; pass --tau for the small-tau asymptotic form"
                        .into(),
                )
            })?;
            let e = zero_point_ohmic_asymptotic(1.0, spec.gamma(), tau)?;
            Ok(format!("model: ohmic (asymptotic, tau = {tau:e})\nzero-point energy: {e:.14e}\n"))
        }
        ModelKind::Srt | ModelKind::Qed => {
            let bath = canonicalize(&spec)?;
            let e = zero_point(&bath)?;
            Ok(format!("model: {}\nzero-point energy: {e:.14e}\n", spec.model_name()))
        }
    }
}
