use super::require_right_half;
use crate::quadrature::{integrate_semi_infinite, Estimate, QuadratureSpec};
use crate::Result;
use num_complex::Complex64;
use std::f64::consts::PI;

/// −(1/π) log(1 − e^{−2πt}), positive for t > 0.
fn thermal_weight(t: f64) -> f64 {
    -(-(-2.0 * PI * t).exp_m1()).ln() / PI
}

/// J(z) from its defining integral, real and imaginary parts integrated
/// separately. Re z > 0.
pub fn j_quadrature(z: Complex64) -> Result<Complex64> {
    j_quadrature_with(z, &QuadratureSpec::default())
}

pub fn j_quadrature_with(z: Complex64, spec: &QuadratureSpec) -> Result<Complex64> {
    let (re, im) = j_quadrature_estimates(z, spec)?;
    Ok(Complex64::new(re.value, im.value))
}

/// Real and imaginary integrals with their error estimates.
pub fn j_quadrature_estimates(z: Complex64, spec: &QuadratureSpec) -> Result<(Estimate, Estimate)> {
    require_right_half(z, "the J integral")?;
    let z2 = z * z;
    let kernel = move |t: f64| z / (z2 + t * t);
    let re = integrate_semi_infinite(|t| thermal_weight(t) * kernel(t).re, spec)?;
    let im = integrate_semi_infinite(|t| thermal_weight(t) * kernel(t).im, spec)?;
    Ok((re, im))
}
