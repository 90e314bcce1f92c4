//! Certified evaluation of the infinite power sums behind the norms:
//! head sums S_n(q) = sum_{k<=n} k^{-q}, tail sums T_n(q) =
//! sum_{k>n} k^{-q}, and the Riemann zeta values they combine into.
//!
//! Every infinite quantity is returned as an [`Enclosure`] so that
//! inequality checks can compare certified bounds instead of noisy
//! floats.  Directed rounding is not used; instead each arithmetic
//! stage pads the interval by a few units in the last place, orders of
//! magnitude below the 1e-12 working tolerance.

use crate::error::{Error, Result};
use crate::kahan::KahanSum;

/// Default enclosure width target, overridable per call and from the CLI.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Relative padding applied per arithmetic stage (4 ulps).
const STAGE_PAD: f64 = 4.0 * f64::EPSILON;

/// Explicit-summation cutoff budget for [`tail_sum`].
const MAX_CUTOFF: usize = 1 << 22;

fn pad_down(v: f64) -> f64 {
    v - v.abs().max(f64::MIN_POSITIVE) * STAGE_PAD
}

fn pad_up(v: f64) -> f64 {
    if v == 0.0 {
        f64::MIN_POSITIVE
    } else {
        v + v.abs() * STAGE_PAD
    }
}

/// A closed interval [lo, hi] guaranteed to contain the true value of
/// the quantity it stands for.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    lo: f64,
    hi: f64,
}

impl Enclosure {
    /// Interval from certified bounds.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "enclosure bounds out of order: [{lo}, {hi}]");
        Self { lo, hi }
    }

    /// Degenerate interval around an exactly known value.
    pub fn point(v: f64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    fn padded(self) -> Self {
        Self {
            lo: pad_down(self.lo),
            hi: pad_up(self.hi),
        }
    }

    /// Interval sum, padded one rounding stage.
    pub fn add(&self, rhs: &Enclosure) -> Enclosure {
        Enclosure::new(self.lo + rhs.lo, self.hi + rhs.hi).padded()
    }

    /// Adds an exactly known offset.
    pub fn add_scalar(&self, v: f64) -> Enclosure {
        self.add(&Enclosure::point(v))
    }

    /// Scales by a nonnegative factor.
    pub fn scale(&self, c: f64) -> Enclosure {
        assert!(c >= 0.0, "scale factor must be nonnegative");
        Enclosure::new(self.lo * c, self.hi * c).padded()
    }

    /// Product of two nonnegative intervals.
    pub fn mul(&self, rhs: &Enclosure) -> Enclosure {
        assert!(self.lo >= 0.0 && rhs.lo >= 0.0, "mul requires nonnegative intervals");
        Enclosure::new(self.lo * rhs.lo, self.hi * rhs.hi).padded()
    }

    /// Monotone power of a nonnegative interval (either sign of `e`).
    pub fn powf(&self, e: f64) -> Enclosure {
        assert!(self.lo >= 0.0, "powf requires a nonnegative interval");
        let (a, b) = (self.lo.powf(e), self.hi.powf(e));
        if e >= 0.0 {
            Enclosure::new(a, b).padded()
        } else {
            Enclosure::new(b, a).padded()
        }
    }

    /// `num / self` for a strictly positive interval.
    pub fn div_from(&self, num: f64) -> Enclosure {
        assert!(self.lo > 0.0, "division requires a positive interval");
        assert!(num >= 0.0, "numerator must be nonnegative");
        Enclosure::new(num / self.hi, num / self.lo).padded()
    }

    /// Clamps the lower bound up to zero — valid only for quantities
    /// known to be nonnegative.
    pub fn clamp_nonnegative(self) -> Enclosure {
        Enclosure::new(self.lo.max(0.0), self.hi.max(0.0))
    }
}

/// Finite head sum S_n(q) = sum_{k=1}^n k^{-q}, compensated.
///
/// Any real `q` is allowed — the sum is finite.  `head_sum(0, q) = 0`.
pub fn head_sum(n: usize, q: f64) -> f64 {
    let mut acc = KahanSum::new();
    for k in 1..=n {
        acc.add((k as f64).powf(-q));
    }
    acc.value()
}

/// Euler–Maclaurin bracket for sum_{k=start}^infty k^{-q}.
///
/// Returns (center, err) with the true sum in [center-err, center+err]:
/// t^{-q} is completely monotone, so the truncated expansion envelopes
/// the sum and the first omitted Bernoulli term bounds the remainder.
fn em_tail_from(start: f64, q: f64) -> (f64, f64) {
    let t0 = start.powf(1.0 - q) / (q - 1.0);
    let t1 = 0.5 * start.powf(-q);
    let t2 = q / 12.0 * start.powf(-q - 1.0);
    let t3 = -q * (q + 1.0) * (q + 2.0) / 720.0 * start.powf(-q - 3.0);
    let t4 = q * (q + 1.0) * (q + 2.0) * (q + 3.0) * (q + 4.0) / 30240.0 * start.powf(-q - 5.0);
    let err = (q * (q + 1.0) * (q + 2.0) * (q + 3.0) * (q + 4.0) * (q + 5.0) * (q + 6.0)
        / 1_209_600.0)
        * start.powf(-q - 7.0);
    (t0 + t1 + t2 + t3 + t4, err.abs())
}

/// Certified tail sum T_n(q) = sum_{k=n+1}^infty k^{-q}, width <= tol.
///
/// Sums explicitly to a cutoff m chosen so the Euler–Maclaurin bracket
/// beyond m is tighter than tol, then adds the bracket.  Rejects q <= 1
/// (divergent) and reports an unreachable tolerance as an error rather
/// than silently widening.
pub fn tail_sum(n: usize, q: f64, tol: f64) -> Result<Enclosure> {
    if !(q > 1.0) {
        return Err(Error::DivergentSeries { q });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "tolerance must be positive, got {tol}"
        )));
    }

    // Find the explicit cutoff: the bracket from m+1 must contribute
    // at most tol/4 of width.
    let mut m = n.max(16);
    let (mut center, mut err) = em_tail_from((m + 1) as f64, q);
    while 2.0 * err > 0.25 * tol {
        if m >= MAX_CUTOFF {
            return Err(Error::ToleranceUnreachable {
                tol,
                width: 2.0 * err,
            });
        }
        m *= 2;
        let t = em_tail_from((m + 1) as f64, q);
        center = t.0;
        err = t.1;
    }

    let mut acc = KahanSum::new();
    for k in (n + 1)..=m {
        acc.add((k as f64).powf(-q));
    }
    let explicit = acc.value();

    let enc = Enclosure::new(explicit + (center - err), explicit + (center + err))
        .padded()
        .padded() // one stage for the explicit compensated sum, one for assembly
        .clamp_nonnegative();
    if enc.width() > tol {
        return Err(Error::ToleranceUnreachable {
            tol,
            width: enc.width(),
        });
    }
    Ok(enc)
}

/// Certified Riemann zeta value for q > 1, width <= tol.
pub fn zeta(q: f64, tol: f64) -> Result<Enclosure> {
    tail_sum(0, q, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values computed independently with 40-digit arithmetic.
    const ZETA_2: f64 = 1.6449340668482264; // pi^2/6
    const ZETA_3: f64 = 1.2020569031595943;
    const ZETA_2_5: f64 = 1.3414872572509171;

    #[test]
    fn head_sums_match_hand_values() {
        assert!((head_sum(3, 1.0) - 11.0 / 6.0).abs() < 1e-15);
        assert_eq!(head_sum(1, 5.0), 1.0);
        assert_eq!(head_sum(0, 2.0), 0.0);
    }

    #[test]
    fn zeta_encloses_reference_values() {
        for (q, reference) in [(2.0, ZETA_2), (3.0, ZETA_3), (2.5, ZETA_2_5)] {
            let z = zeta(q, 1e-12).unwrap();
            assert!(z.contains(reference), "zeta({q}) = {z:?} misses {reference}");
            assert!(z.width() <= 1e-12, "width {} too wide", z.width());
        }
    }

    #[test]
    fn tail_from_one_is_zeta_minus_one() {
        let t = tail_sum(1, 2.0, 1e-12).unwrap();
        assert!(t.contains(ZETA_2 - 1.0));
        assert!(t.width() <= 1e-12);
    }

    #[test]
    fn splitting_identity() {
        for n in [0usize, 1, 10, 1000] {
            for q in [1.25, 2.0, 3.5] {
                let z = zeta(q, 1e-12).unwrap();
                let split = tail_sum(n, q, 1e-12).unwrap().add_scalar(head_sum(n, q));
                assert!(
                    split.lo() <= z.hi() && z.lo() <= split.hi(),
                    "split at n={n}, q={q} disagrees: {split:?} vs {z:?}"
                );
            }
        }
    }

    #[test]
    fn tails_shrink_in_n() {
        let mut prev = f64::INFINITY;
        for n in 0..20 {
            let t = tail_sum(n, 2.0, 1e-12).unwrap();
            assert!(t.hi() <= prev);
            prev = t.hi();
        }
    }

    #[test]
    fn loose_and_tight_cutoffs_agree() {
        let z = zeta(10.0, 1e-12).unwrap();
        let split = tail_sum(100, 10.0, 1e-12)
            .unwrap()
            .add_scalar(head_sum(100, 10.0));
        assert!((z.mid() - split.mid()).abs() < 1e-12);
    }

    #[test]
    fn divergent_exponent_is_rejected() {
        assert!(matches!(
            tail_sum(0, 1.0, 1e-12),
            Err(Error::DivergentSeries { .. })
        ));
        assert!(matches!(zeta(0.5, 1e-12), Err(Error::DivergentSeries { .. })));
    }

    #[test]
    fn unreachable_tolerance_is_an_error_not_a_wider_interval() {
        match zeta(1.0001, 1e-18) {
            Err(Error::ToleranceUnreachable { width, .. }) => assert!(width > 1e-18),
            other => panic!("expected ToleranceUnreachable, got {other:?}"),
        }
    }

    #[test]
    fn tail_lower_bound_beats_integral_ratio() {
        // n^r * T_{n-1}(r+1) > 1/r for all n >= 1, r > 0: the discrete
        // tail strictly dominates the integral from n.
        for r in [0.1, 0.5, 1.0, 2.0, 5.0] {
            for n in 1..=200usize {
                let t = tail_sum(n - 1, r + 1.0, 1e-12).unwrap();
                let lhs = (n as f64).powf(r) * t.lo();
                assert!(
                    lhs > 1.0 / r,
                    "bound fails at n={n}, r={r}: {lhs} vs {}",
                    1.0 / r
                );
            }
        }
    }

    #[test]
    fn enclosure_arithmetic_is_outward() {
        let a = Enclosure::new(1.0, 1.0 + 1e-13);
        let b = a.add(&a);
        assert!(b.lo() < 2.0 && b.hi() > 2.0 + 2e-13 - 1e-15);
        let p = a.powf(0.5);
        assert!(p.contains(1.0));
        let n = a.powf(-2.0);
        assert!(n.contains(1.0 / (1.0 + 5e-14)));
        let d = a.div_from(1.0);
        assert!(d.contains(1.0 / (1.0 + 5e-14)));
    }
}
