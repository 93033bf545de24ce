use super::bernoulli;
use std::sync::OnceLock;

/// Number of tabulated ζ(n) values, n = 0 … ZETA_TABLE_LEN-1 (0 and 1 unused).
pub const ZETA_TABLE_LEN: usize = 512;

static TABLE: OnceLock<Vec<f64>> = OnceLock::new();

/// Riemann ζ(n) for integer n ≥ 2.
pub fn zeta(n: usize) -> f64 {
    assert!(n >= 2, "zeta(n) needs n >= 2");
    let table = TABLE.get_or_init(|| {
        let mut t = vec![f64::NAN; ZETA_TABLE_LEN];
        for (k, slot) in t.iter_mut().enumerate().skip(2) {
            *slot = zeta_euler_maclaurin(k);
        }
        t
    });
    if n < ZETA_TABLE_LEN {
        table[n]
    } else {
        1.0
    }
}

/// Σ_{k<N} k⁻ⁿ plus the Euler–Maclaurin tail at N = 16 through B₁₂.
fn zeta_euler_maclaurin(n: usize) -> f64 {
    const N: usize = 16;
    let s = n as f64;
    let nf = N as f64;
    let mut head = 0.0;
    for k in (1..N).rev() {
        head += (k as f64).powf(-s);
    }
    let mut tail = nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powf(-s);
    // B_{2j}/(2j)! · s(s+1)…(s+2j−2) · N^{−s−2j+1}
    let mut rising = s;
    let mut factorial = 2.0;
    for j in 1..=6usize {
        let two_j = 2 * j;
        if j > 1 {
            rising *= (s + two_j as f64 - 3.0) * (s + two_j as f64 - 2.0);
            factorial *= (two_j as f64 - 1.0) * two_j as f64;
        }
        tail += bernoulli(two_j) / factorial * rising * nf.powf(-s - two_j as f64 + 1.0);
    }
    head + tail
}
