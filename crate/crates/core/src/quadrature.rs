//! Adaptive Gauss–Kronrod integration on `(0, ∞)`.
//!
//! This is the oracle the closed forms are checked against, so it is kept
//! generic: no knowledge of the integrands beyond "integrable logarithmic
//! singularity at the origin, exponential or power-law decay at infinity".
//! The 15-point Kronrod rule never evaluates the panel endpoints, which is
//! what lets the logarithmic endpoint through without singularity
//! subtraction; global bisection of the worst panel does the rest.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use thiserror::Error;

/// Kronrod abscissae on [-1, 1] (positive half, descending). Odd indices are
/// shared with the 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

/// 7-point Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

/// How the semi-infinite range is made finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailCut {
    /// Map `[0, ∞)` onto `[0, 1)` with `t = scale·u/(1 − u)`. Handles both
    /// exponential and inverse-power tails; `scale` should be of the order of
    /// the integrand's largest characteristic length.
    Compactify { scale: f64 },
    /// Integrate over `[0, upper]` only. `tail_bound` is the caller's
    /// analytic bound on `|∫_upper^∞ f|` and is added to the error estimate.
    Truncate { upper: f64, tail_bound: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub relative_tolerance: f64,
    pub absolute_tolerance: f64,
    /// Maximum number of panels in the final partition.
    pub max_subdivisions: usize,
    pub tail_cut: TailCut,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            relative_tolerance: 1e-12,
            absolute_tolerance: 1e-15,
            max_subdivisions: 2000,
            tail_cut: TailCut::Compactify { scale: 1.0 },
        }
    }
}

impl QuadratureSpec {
    pub fn with_relative_tolerance(mut self, tol: f64) -> Self {
        self.relative_tolerance = tol;
        self
    }

    pub fn with_absolute_tolerance(mut self, tol: f64) -> Self {
        self.absolute_tolerance = tol;
        self
    }

    pub fn with_tail_cut(mut self, tail_cut: TailCut) -> Self {
        self.tail_cut = tail_cut;
        self
    }

    pub fn with_max_subdivisions(mut self, max: usize) -> Self {
        self.max_subdivisions = max;
        self
    }

    pub fn validate(&self) -> Result<(), QuadratureError> {
        if !(self.relative_tolerance > 0.0) {
            return Err(QuadratureError::InvalidSpec("relative_tolerance must be > 0"));
        }
        if !(self.absolute_tolerance > 0.0) {
            return Err(QuadratureError::InvalidSpec("absolute_tolerance must be > 0"));
        }
        if self.max_subdivisions < 1 {
            return Err(QuadratureError::InvalidSpec("max_subdivisions must be >= 1"));
        }
        match self.tail_cut {
            TailCut::Compactify { scale } if !(scale > 0.0 && scale.is_finite()) => {
                Err(QuadratureError::InvalidSpec("compactification scale must be finite and > 0"))
            }
            TailCut::Truncate { upper, tail_bound } if !(upper > 0.0 && upper.is_finite() && tail_bound >= 0.0) => {
                Err(QuadratureError::InvalidSpec("truncation point must be finite and > 0, tail bound >= 0"))
            }
            _ => Ok(()),
        }
    }

    fn tolerance(&self, value: f64) -> f64 {
        self.absolute_tolerance.max(self.relative_tolerance * value.abs())
    }
}

/// An integral estimate with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub subdivisions: usize,
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(&'static str),
    #[error("no convergence with {subdivisions} subdivisions: best estimate {estimate:e} ± {error:e}")]
    NonConvergence { estimate: f64, error: f64, subdivisions: usize },
    #[error("integrand returned {value} at x = {abscissa:e}")]
    NonFinite { abscissa: f64, value: f64 },
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error).then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Integrates `f` over `(0, ∞)`.
///
/// The returned error is the sum of the per-panel Kronrod–Gauss estimates
/// (QUADPACK scaling) plus, for [`TailCut::Truncate`], the supplied tail bound.
pub fn integrate_semi_infinite<F>(f: F, spec: &QuadratureSpec) -> Result<Estimate, QuadratureError>
where
    F: Fn(f64) -> f64,
{
    spec.validate()?;
    match spec.tail_cut {
        TailCut::Compactify { scale } => {
            let map = |u: f64| scale * u / (1.0 - u);
            let g = |u: f64| {
                let one_minus = 1.0 - u;
                f(map(u)) * scale / (one_minus * one_minus)
            };
            adaptive(g, 0.0, 1.0, spec, map)
        }
        TailCut::Truncate { upper, tail_bound } => {
            let mut est = adaptive(&f, 0.0, upper, spec, |x| x)?;
            est.error += tail_bound;
            Ok(est)
        }
    }
}

/// Integrates `f` over the finite interval `[a, b]`.
pub fn integrate<F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<Estimate, QuadratureError>
where
    F: Fn(f64) -> f64,
{
    spec.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(QuadratureError::InvalidSpec("finite integration limits required"));
    }
    if a == b {
        return Ok(Estimate { value: 0.0, error: 0.0, subdivisions: 1, evaluations: 0 });
    }
    if a > b {
        let mut est = adaptive(&f, b, a, spec, |x| x)?;
        est.value = -est.value;
        return Ok(est);
    }
    adaptive(&f, a, b, spec, |x| x)
}

fn adaptive<G, M>(g: G, a: f64, b: f64, spec: &QuadratureSpec, map: M) -> Result<Estimate, QuadratureError>
where
    G: Fn(f64) -> f64,
    M: Fn(f64) -> f64,
{
    let mut evaluations = 0usize;
    let first = kronrod_panel(&g, a, b, &map, &mut evaluations)?;
    let mut total = first.value;
    let mut total_error = first.error;
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Panel> = Vec::new();
    heap.push(first);

    while total_error > spec.tolerance(total) {
        let Some(worst) = heap.pop() else {
            // every remaining panel is at the resolution limit
            return Err(QuadratureError::NonConvergence {
                estimate: total,
                error: total_error,
                subdivisions: frozen.len(),
            });
        };
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) || (worst.b - worst.a) < 64.0 * f64::EPSILON * mid.abs() {
            frozen.push(worst);
            continue;
        }
        if heap.len() + frozen.len() + 2 > spec.max_subdivisions {
            heap.push(worst);
            break;
        }
        let left = kronrod_panel(&g, worst.a, mid, &map, &mut evaluations)?;
        let right = kronrod_panel(&g, mid, worst.b, &map, &mut evaluations)?;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // resum from scratch to shed the drift of the running totals
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.extend(frozen);
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value: f64 = panels.iter().map(|p| p.value).sum();
    let error: f64 = panels.iter().map(|p| p.error).sum();
    let subdivisions = panels.len();
    if error > spec.tolerance(value) {
        return Err(QuadratureError::NonConvergence { estimate: value, error, subdivisions });
    }
    Ok(Estimate { value, error, subdivisions, evaluations })
}

fn kronrod_panel<G, M>(g: &G, a: f64, b: f64, map: &M, evaluations: &mut usize) -> Result<Panel, QuadratureError>
where
    G: Fn(f64) -> f64,
    M: Fn(f64) -> f64,
{
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| -> Result<f64, QuadratureError> {
        let v = g(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(QuadratureError::NonFinite { abscissa: map(x), value: v })
        }
    };

    let fc = eval(centre)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = kronrod.abs();
    let mut values = [(0.0f64, 0.0f64); 7];
    for (j, &x) in XGK[..7].iter().enumerate() {
        let dx = half * x;
        let f1 = eval(centre - dx)?;
        let f2 = eval(centre + dx)?;
        values[j] = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    *evaluations += 15;

    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for (j, &(f1, f2)) in values.iter().enumerate() {
        asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }

    let value = kronrod * half;
    let res_abs = abs_sum * half.abs();
    let res_asc = asc * half.abs();
    let error = rescale_error((kronrod - gauss) * half, res_abs, res_asc);
    Ok(Panel { a, b, value, error })
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut err = err.abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    err
}
