use super::{bernoulli, check_finite};
use crate::{Error, Result};
use num_complex::Complex64;

/// Largest number of terms the Bernoulli table supports.
pub const MAX_ASYMPTOTIC_TERMS: usize = 11;

/// |B_{2n+2}/((2n+1)(2n+2))|·|z|^{−(2n+1)}
fn term_modulus(n: usize, modulus: f64) -> f64 {
    coefficient(n).abs() * modulus.powi(-(2 * n as i32 + 1))
}

fn coefficient(n: usize) -> f64 {
    bernoulli(2 * n + 2) / ((2 * n + 1) as f64 * (2 * n + 2) as f64)
}

fn validate(z: Complex64) -> Result<()> {
    check_finite(z)?;
    if z.re < 0.0 || z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain(format!(
            "the asymptotic series needs Re z >= 0 and z != 0, got {z}; use the continuation route"
        )));
    }
    Ok(())
}

/// Partial sum `Σ_{n<n_terms} B_{2n+2}/((2n+1)(2n+2)) z^{−(2n+1)}` and the
/// modulus of the first omitted term.
pub fn j_asymptotic(z: Complex64, n_terms: usize) -> Result<(Complex64, f64)> {
    validate(z)?;
    if n_terms == 0 || n_terms > MAX_ASYMPTOTIC_TERMS {
        return Err(Error::InvalidParameter(format!(
            "asymptotic series takes 1..={MAX_ASYMPTOTIC_TERMS} terms, got {n_terms}"
        )));
    }
    let r = z.norm();
    let bound = term_modulus(n_terms, r);
    if bound > term_modulus(n_terms - 1, r) {
        return Err(Error::DivergentSeries { n_terms, modulus: r });
    }
    let inv = z.inv();
    let inv2 = inv * inv;
    // Horner in 1/z²
    let mut acc = Complex64::new(0.0, 0.0);
    for n in (0..n_terms).rev() {
        acc = acc * inv2 + coefficient(n);
    }
    Ok((acc * inv, bound))
}

/// Asymptotic series truncated at its smallest available term.
pub fn j_asymptotic_optimal(z: Complex64) -> Result<(Complex64, f64)> {
    validate(z)?;
    let r = z.norm();
    let best =
        (1..=MAX_ASYMPTOTIC_TERMS).min_by(|&a, &b| term_modulus(a, r).total_cmp(&term_modulus(b, r))).unwrap_or(1);
    // terms shrink up to the optimum, so the divergence check cannot fire
    j_asymptotic(z, best)
}
