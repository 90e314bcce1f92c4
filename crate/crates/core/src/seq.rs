//! Finitely supported nonnegative sequences and their basic operators:
//! nonincreasing rearrangement, partial sums, Cesàro averaging, the
//! indicator family u^K, and seeded random generators for tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::kahan::KahanSum;

/// A sequence x = (x_1, x_2, ...) stored as its support prefix.
///
/// Entry `values[i]` is x_{i+1}; every index beyond the stored prefix is
/// an implicit zero.  All entries are finite and nonnegative — that is
/// enforced at construction.  The empty prefix encodes the zero
/// sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Seq {
    values: Vec<f64>,
}

impl Seq {
    /// Wraps a prefix of nonnegative finite values.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidEntry { index: i, value: v });
            }
        }
        Ok(Self { values })
    }

    /// The zero sequence.
    pub fn zero() -> Self {
        Self { values: Vec::new() }
    }

    /// The indicator prefix u^K: ones at positions 1..=K, zero beyond.
    ///
    /// K = 0 is rejected — the extremal family starts at u^1.
    pub fn indicator(k: usize) -> Self {
        assert!(k >= 1, "indicator requires K >= 1");
        Self {
            values: vec![1.0; k],
        }
    }

    /// Stored support length N (trailing stored zeros count).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// True for the empty prefix.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The stored prefix as a slice.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// x_n for any n >= 1 (zero beyond the stored prefix).
    pub fn get(&self, n: usize) -> f64 {
        assert!(n >= 1, "sequences are 1-indexed");
        self.values.get(n - 1).copied().unwrap_or(0.0)
    }

    /// True if the stored prefix is nonincreasing.
    pub fn is_nonincreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] >= w[1])
    }

    /// The nonincreasing rearrangement x* of this sequence.
    pub fn sorted_decreasing(&self) -> Seq {
        decreasing_rearrangement(&self.values)
    }

    /// Entrywise scaling by a nonnegative factor.
    pub fn scaled(&self, c: f64) -> Result<Seq> {
        Seq::new(self.values.iter().map(|&v| c * v).collect())
    }

    /// Partial sums X_n = x_1 + ... + x_n, accumulated left to right
    /// with compensated summation.
    pub fn partial_sums(&self) -> PartialSums {
        let mut acc = KahanSum::new();
        let sums: Vec<f64> = self
            .values
            .iter()
            .map(|&v| {
                acc.add(v);
                acc.value()
            })
            .collect();
        let total = sums.last().copied().unwrap_or(0.0);
        PartialSums { sums, total }
    }

    /// First `m` Cesàro averages (Cx)_n = X_{min(n,N)} / n.
    ///
    /// Cx is not finitely supported — beyond the support it decays like
    /// total/n — so norms of Cx must go through the exact-tail routine
    /// in the norms module rather than through a truncation of this
    /// prefix.
    pub fn cesaro_prefix(&self, m: usize) -> Vec<f64> {
        assert!(m >= 1, "cesaro_prefix needs at least one entry");
        let ps = self.partial_sums();
        (1..=m)
            .map(|n| {
                let x_n = if ps.sums.is_empty() {
                    0.0
                } else {
                    ps.sums[n.min(ps.sums.len()) - 1]
                };
                x_n / n as f64
            })
            .collect()
    }
}

/// Partial sums X_1..X_N of a sequence prefix.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialSums {
    /// X_1..X_N.
    pub sums: Vec<f64>,
    /// X_N, or 0 for the zero sequence.
    pub total: f64,
}

impl PartialSums {
    /// X_n for n >= 1; constant `total` beyond the prefix.
    pub fn get(&self, n: usize) -> f64 {
        assert!(n >= 1, "partial sums are 1-indexed");
        if self.sums.is_empty() {
            0.0
        } else {
            self.sums[n.min(self.sums.len()) - 1]
        }
    }
}

/// Nonincreasing rearrangement of |x|: the entries by absolute value,
/// sorted in nonincreasing order.  This is the only operation that
/// accepts negative input; everything downstream works on the result.
pub fn decreasing_rearrangement(values: &[f64]) -> Seq {
    let mut v: Vec<f64> = values.iter().map(|&x| x.abs()).collect();
    v.sort_by(|a, b| b.partial_cmp(a).expect("entries are finite"));
    Seq { values: v }
}

/// Families of random nonincreasing test sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dist {
    /// Suffix sums of i.i.d. uniform decrements — smooth, strictly
    /// decreasing profiles.
    UniformGaps,
    /// Sorted Pareto variates — a few large entries over a thin tail.
    HeavyTail,
    /// Piecewise-constant profiles with a random number of constancy
    /// blocks (the shape the pooling arguments reduce to).
    Step,
}

impl std::str::FromStr for Dist {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform-gaps" => Ok(Dist::UniformGaps),
            "heavy-tail" => Ok(Dist::HeavyTail),
            "step" => Ok(Dist::Step),
            other => Err(Error::InvalidInput(format!(
                "unknown distribution '{other}' (expected uniform-gaps, heavy-tail, or step)"
            ))),
        }
    }
}

/// Deterministic random nonincreasing nonnegative sequence of support
/// length `n`, normalized to x_1 = 1.
pub fn random_decreasing(n: usize, seed: u64, dist: Dist) -> Seq {
    assert!(n >= 1, "random_decreasing needs n >= 1");
    // Mix the distribution into the stream so the three families are
    // independent at equal seeds.
    let stream = seed ^ ((dist as u64 + 1) << 56);
    let mut rng = ChaCha8Rng::seed_from_u64(stream);
    let mut values = match dist {
        Dist::UniformGaps => {
            let gaps: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
            let mut acc = 0.0;
            let mut v = vec![0.0; n];
            for i in (0..n).rev() {
                acc += gaps[i];
                v[i] = acc;
            }
            v
        }
        Dist::HeavyTail => {
            let mut v: Vec<f64> = (0..n)
                .map(|_| {
                    let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
                    u.powf(-1.0 / 1.5)
                })
                .collect();
            v.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
            v
        }
        Dist::Step => {
            let blocks = rng.gen_range(1..=n.min(8));
            // Split n positions into `blocks` nonempty runs.
            let mut cuts: Vec<usize> = (1..n).collect();
            for i in (1..cuts.len()).rev() {
                let j = rng.gen_range(0..=i);
                cuts.swap(i, j);
            }
            let mut cuts: Vec<usize> = cuts.into_iter().take(blocks - 1).collect();
            cuts.push(0);
            cuts.push(n);
            cuts.sort_unstable();
            let mut levels: Vec<f64> = (0..blocks).map(|_| rng.gen::<f64>() + 1e-3).collect();
            levels.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
            let mut v = Vec::with_capacity(n);
            for (b, w) in cuts.windows(2).enumerate() {
                for _ in w[0]..w[1] {
                    v.push(levels[b]);
                }
            }
            v
        }
    };
    let scale = values[0];
    if scale > 0.0 {
        for v in &mut values {
            *v /= scale;
        }
    }
    Seq { values }
}
