use super::{check_finite, j_right, JValue};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// J(w) for Re w ≤ 0 through the reflection identity
///
/// ```text
/// J(z e^{±iπ}) = −J(z) − log(1 − e^{∓2πiz}),   Re z > 0
/// ```
///
/// with `z = −w`; the upper sign is taken for Im w > 0. J(z) comes from the
/// right-half-plane dispatcher.
pub fn j_continue_left(w: Complex64) -> Result<Complex64> {
    j_continue_left_report(w).map(|v| v.value)
}

pub(crate) fn j_continue_left_report(w: Complex64) -> Result<JValue> {
    check_finite(w)?;
    if w.im == 0.0 {
        return Err(Error::BranchCut { re: w.re, im: w.im });
    }
    if w.re > 0.0 {
        return Err(Error::Domain(format!("continuation is for Re w <= 0, got {w}; evaluate directly")));
    }
    let z = -w;
    let inner = j_right(z)?;
    // |e^{∓2πiz}| = e^{−2π|Im z|} < 1 for the chosen sign
    let phase = if w.im > 0.0 { Complex64::new(0.0, -2.0 * PI) * z } else { Complex64::new(0.0, 2.0 * PI) * z };
    let log_term = (Complex64::new(1.0, 0.0) - phase.exp()).ln();
    Ok(JValue {
        value: -inner.value - log_term,
        route: inner.route,
        continued: true,
        truncation_bound: inner.truncation_bound,
    })
}
