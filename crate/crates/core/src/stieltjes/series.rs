use super::{check_finite, on_cut, zeta, EULER_GAMMA, LN_SQRT_2PI, ZETA_TABLE_LEN};
use crate::{Error, Result};
use num_complex::Complex64;

fn validate(z: Complex64) -> Result<()> {
    check_finite(z)?;
    if on_cut(z) {
        return Err(Error::BranchCut { re: z.re, im: z.im });
    }
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "the small-argument series needs |z| < 1, got |z| = {}; use loggamma or asymptotic",
            z.norm()
        )));
    }
    Ok(())
}

fn closed_part(z: Complex64) -> Complex64 {
    -LN_SQRT_2PI - (z + 0.5) * z.ln() + z - EULER_GAMMA * z
}

/// J(z) = −log√(2π) − (z+½) log z + z − γ_E z + Σ_{n=2}^{n_terms} (−1)ⁿ ζ(n)/n · zⁿ
pub fn j_series_small(z: Complex64, n_terms: usize) -> Result<Complex64> {
    validate(z)?;
    if n_terms < 2 {
        return Err(Error::InvalidParameter(format!("series needs n_terms >= 2, got {n_terms}")));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut power = z;
    for n in 2..=n_terms {
        power *= z;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * zeta(n) / n as f64 * power;
    }
    Ok(closed_part(z) + sum)
}

/// The series summed until the terms drop below the rounding level of the
/// result.
pub fn j_series_small_auto(z: Complex64) -> Result<Complex64> {
    validate(z)?;
    let head = closed_part(z);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut power = z;
    for n in 2..ZETA_TABLE_LEN {
        power *= z;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * zeta(n) / n as f64 * power;
        sum += term;
        if term.norm() <= 0.25 * f64::EPSILON * (head + sum).norm() {
            return Ok(head + sum);
        }
    }
    Err(Error::Numerical(format!("small-argument series did not converge at |z| = {}", z.norm())))
}
