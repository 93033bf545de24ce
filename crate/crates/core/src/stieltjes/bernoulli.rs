/// Even-index Bernoulli numbers as exact rationals `(numerator, denominator)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BernoulliTable {
    /// `entries[k] = B_{2k+2}`.
    pub entries: [(i64, i64); 12],
}

/// B₂ … B₂₂, plus B₂₄ which is only used to bound the error after the
/// eleventh asymptotic term.
pub const BERNOULLI: BernoulliTable = BernoulliTable {
    entries: [
        (1, 6),
        (-1, 30),
        (1, 42),
        (-1, 30),
        (5, 66),
        (-691, 2730),
        (7, 6),
        (-3617, 510),
        (43867, 798),
        (-174611, 330),
        (854513, 138),
        (-236364091, 2730),
    ],
};

impl BernoulliTable {
    /// Largest even index held.
    pub const MAX_INDEX: usize = 24;

    /// `B_index` for even `index` in `2..=24`.
    pub fn get(&self, index: usize) -> Option<f64> {
        if !(2..=Self::MAX_INDEX).contains(&index) || index % 2 == 1 {
            return None;
        }
        let (num, den) = self.entries[index / 2 - 1];
        Some(num as f64 / den as f64)
    }
}

/// `B_index` from [`BERNOULLI`]; panics outside `2..=24` even.
pub fn bernoulli(index: usize) -> f64 {
    BERNOULLI.get(index).unwrap_or_else(|| panic!("Bernoulli number B_{index} not tabulated"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    /// Akiyama–Tanigawa, exact.
    fn bernoulli_exact(n: usize) -> BigRational {
        let mut a: Vec<BigRational> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            a.push(BigRational::new(BigInt::from(1), BigInt::from(m as i64 + 1)));
            for j in (1..=m).rev() {
                let diff = &a[j - 1] - &a[j];
                a[j - 1] = diff * BigRational::from_integer(BigInt::from(j as i64));
            }
        }
        a[0].clone()
    }

    #[test]
    fn table_matches_exact_recurrence() {
        for (k, &(num, den)) in BERNOULLI.entries.iter().enumerate() {
            let index = 2 * k + 2;
            let exact = bernoulli_exact(index);
            assert_eq!(exact, BigRational::new(BigInt::from(num), BigInt::from(den)), "B_{index}");
        }
    }

    #[test]
    fn lookup() {
        assert_eq!(bernoulli(2), 1.0 / 6.0);
        assert_eq!(bernoulli(12), -691.0 / 2730.0);
        assert_eq!(BERNOULLI.get(3), None);
        assert_eq!(BERNOULLI.get(26), None);
        assert_eq!(BERNOULLI.get(0), None);
    }
}
