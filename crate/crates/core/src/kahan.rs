//! Compensated (Neumaier) summation.
//!
//! Sweeps reach K = 10^6 terms; naive left-to-right accumulation loses
//! digits that the 1e-12 working tolerance needs, so every multi-term
//! sum in the crate goes through [`KahanSum`].

/// Running compensated sum (Neumaier variant of Kahan's algorithm).
///
/// The Neumaier update also handles the case where the incoming term is
/// larger than the running sum, which happens in head sums with growing
/// weights such as `n^{s/p-1}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    /// Empty sum.
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds one term.
    pub fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.comp += (self.sum - t) + term;
        } else {
            self.comp += (term - t) + self.sum;
        }
        self.sum = t;
    }

    /// Current compensated value.
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl std::iter::FromIterator<f64> for KahanSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = KahanSum::new();
        for term in iter {
            acc.add(term);
        }
        acc
    }
}

/// Compensated sum of an iterator of terms.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    terms.into_iter().collect::<KahanSum>().value()
}
