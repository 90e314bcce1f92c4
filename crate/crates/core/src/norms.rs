//! The four norm functionals: weighted l^p(n^a), the Lorentz norm
//! ||x||_{p,s}, the maximal Lorentz norm ||x||*_{p,s}, and the weighted
//! norm of the Cesàro transform Cx with its infinite tail evaluated
//! exactly.

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::seq::Seq;
use crate::tails::{tail_sum, Enclosure};

/// A conjugate exponent pair (p, s) with the derived quantities the
/// norms need: p' = p/(p-1), s' = s/(s-1), and alpha = 1 - s'/p'.
///
/// alpha is the weight exponent of the level-sequence construction; its
/// sign classifies the regime: alpha in (0,1) iff p < s, alpha = 0 iff
/// p = s, alpha < 0 iff p > s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exponents {
    pub p: f64,
    pub s: f64,
    pub p_prime: f64,
    pub s_prime: f64,
    pub alpha: f64,
}

impl Exponents {
    /// Validates 1 < p, s < infinity and derives the conjugates.
    pub fn new(p: f64, s: f64) -> Result<Self> {
        if !p.is_finite() || p <= 1.0 {
            return Err(Error::window("p", p, "1 < p < inf"));
        }
        if !s.is_finite() || s <= 1.0 {
            return Err(Error::window("s", s, "1 < s < inf"));
        }
        let p_prime = p / (p - 1.0);
        let s_prime = s / (s - 1.0);
        Ok(Self {
            p,
            s,
            p_prime,
            s_prime,
            alpha: 1.0 - s_prime / p_prime,
        })
    }

    /// The conjugate pair (p', s').
    pub fn conjugate(&self) -> Exponents {
        Exponents::new(self.p_prime, self.s_prime).expect("conjugates stay in (1, inf)")
    }
}

/// The exponent `a` of a power weight n^a.
///
/// Each operation enforces its own validity window (for instance
/// 0 <= a < p-1 or -1 < a < 0); the type only requires finiteness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerWeight {
    pub a: f64,
}

impl PowerWeight {
    pub fn new(a: f64) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::window("a", a, "finite"));
        }
        Ok(Self { a })
    }
}

/// ||x||_{l^p(n^a)} = (sum x_n^p n^a)^{1/p}, a finite sum over the
/// support.  Requires p > 1.
pub fn weighted_lp_norm(x: &Seq, p: f64, w: PowerWeight) -> Result<f64> {
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::window("p", p, "1 < p < inf"));
    }
    let mut acc = KahanSum::new();
    for (i, &v) in x.values().iter().enumerate() {
        let n = (i + 1) as f64;
        acc.add(v.powf(p) * n.powf(w.a));
    }
    Ok(acc.value().powf(1.0 / p))
}

/// Certified ||Cx||_{l^p(n^a)} for finitely supported x.
///
/// Beyond the support, (Cx)_n = X_N / n exactly, so
/// ||Cx||^p = sum_{n<=N} X_n^p n^{a-p} + X_N^p T_N(p-a), with the tail
/// T_N(p-a) a certified enclosure.  Requires p > 1 and p - a > 1.
pub fn cesaro_weighted_lp_norm(x: &Seq, p: f64, w: PowerWeight, tol: f64) -> Result<Enclosure> {
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::window("p", p, "1 < p < inf"));
    }
    if !(p - w.a > 1.0) {
        return Err(Error::window("p - a", p - w.a, "p - a > 1"));
    }
    let ps = x.partial_sums();
    if ps.total == 0.0 {
        return Ok(Enclosure::point(0.0));
    }
    let mut acc = KahanSum::new();
    for (i, &x_n) in ps.sums.iter().enumerate() {
        let n = (i + 1) as f64;
        acc.add(x_n.powf(p) * n.powf(w.a - p));
    }
    let tail = tail_sum(x.len(), p - w.a, tol)?.scale(ps.total.powf(p));
    Ok(tail.add_scalar(acc.value()).powf(1.0 / p))
}

/// ||x||_{p,s} = (sum n^{s/p-1} (x*_n)^s)^{1/s}; the rearrangement is
/// applied internally, and the zero tail contributes nothing.
pub fn lorentz_norm(x: &Seq, e: &Exponents) -> f64 {
    let sorted = x.sorted_decreasing();
    let mut acc = KahanSum::new();
    for (i, &v) in sorted.values().iter().enumerate() {
        let n = (i + 1) as f64;
        acc.add(n.powf(e.s / e.p - 1.0) * v.powf(e.s));
    }
    acc.value().powf(1.0 / e.s)
}

/// Certified maximal Lorentz norm
/// ||x||*_{p,s} = (sum n^{-s/p'-1} X_n^s)^{1/s}, where X_n are partial
/// sums of the rearranged sequence; the infinite tail beyond the
/// support is X_N^s T_N(s/p'+1), a certified enclosure.
pub fn lorentz_maximal_norm(x: &Seq, e: &Exponents, tol: f64) -> Result<Enclosure> {
    let sorted = x.sorted_decreasing();
    let ps = sorted.partial_sums();
    if ps.total == 0.0 {
        return Ok(Enclosure::point(0.0));
    }
    let q = e.s / e.p_prime + 1.0;
    let mut acc = KahanSum::new();
    for (i, &x_n) in ps.sums.iter().enumerate() {
        let n = (i + 1) as f64;
        acc.add(n.powf(-q) * x_n.powf(e.s));
    }
    let tail = tail_sum(sorted.len(), q, tol)?.scale(ps.total.powf(e.s));
    Ok(tail.add_scalar(acc.value()).powf(1.0 / e.s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::{random_decreasing, Dist};
    use crate::tails::zeta;

    const TOL: f64 = 1e-12;

    fn exps(p: f64, s: f64) -> Exponents {
        Exponents::new(p, s).unwrap()
    }

    #[test]
    fn conjugate_identities_hold() {
        for (p, s) in [(2.0, 4.0), (1.5, 3.0), (3.0, 2.0), (2.0, 2.0), (1.2, 5.0)] {
            let e = exps(p, s);
            assert!((1.0 / e.p + 1.0 / e.p_prime - 1.0).abs() < 4.0 * f64::EPSILON);
            assert!((1.0 / e.s + 1.0 / e.s_prime - 1.0).abs() < 4.0 * f64::EPSILON);
            let c = e.conjugate();
            assert!((c.p - e.p_prime).abs() < 1e-14 && (c.s - e.s_prime).abs() < 1e-14);
        }
    }

    #[test]
    fn alpha_sign_tracks_the_regime() {
        assert!((exps(2.0, 4.0).alpha - 1.0 / 3.0).abs() < 1e-15);
        assert!(exps(2.0, 2.0).alpha.abs() < 1e-15);
        assert!(exps(3.0, 2.0).alpha < 0.0);
        let a = exps(1.5, 3.0).alpha;
        assert!(a > 0.0 && a < 1.0);
    }

    #[test]
    fn exponent_windows_are_enforced() {
        assert!(Exponents::new(1.0, 2.0).is_err());
        assert!(Exponents::new(2.0, f64::INFINITY).is_err());
        assert!(weighted_lp_norm(&Seq::indicator(1), 1.0, PowerWeight::new(0.0).unwrap()).is_err());
    }

    #[test]
    fn weighted_norm_hand_values() {
        let a0 = PowerWeight::new(0.0).unwrap();
        let a1 = PowerWeight::new(1.0).unwrap();
        assert!((weighted_lp_norm(&Seq::indicator(2), 2.0, a0).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        for (p, a) in [(2.0, 0.0), (3.0, 1.0), (1.5, 0.25)] {
            let w = PowerWeight::new(a).unwrap();
            assert_eq!(weighted_lp_norm(&Seq::indicator(1), p, w).unwrap(), 1.0);
        }
        let x = Seq::new(vec![2.0, 1.0]).unwrap();
        assert!((weighted_lp_norm(&x, 2.0, a1).unwrap() - 6f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn cesaro_norm_of_unit_indicator_is_a_zeta_value() {
        // X_n = 1 for u^1, so ||Cu^1||^p = zeta(p - a) exactly.
        for (p, a) in [(2.0, 0.0), (3.0, 1.0), (1.5, 0.25), (2.0, 0.5)] {
            let w = PowerWeight::new(a).unwrap();
            let norm = cesaro_weighted_lp_norm(&Seq::indicator(1), p, w, TOL).unwrap();
            let reference = zeta(p - a, TOL).unwrap().powf(1.0 / p);
            assert!(
                norm.lo() <= reference.hi() && reference.lo() <= norm.hi(),
                "(p={p}, a={a}): {norm:?} vs {reference:?}"
            );
        }
    }

    #[test]
    fn cesaro_norm_rejects_divergent_windows_and_handles_zero() {
        let w = PowerWeight::new(1.5).unwrap();
        assert!(cesaro_weighted_lp_norm(&Seq::indicator(1), 2.0, w, TOL).is_err());
        let z = cesaro_weighted_lp_norm(&Seq::zero(), 2.0, PowerWeight::new(0.0).unwrap(), TOL)
            .unwrap();
        assert_eq!(z.mid(), 0.0);
    }

    #[test]
    fn lorentz_norm_closed_forms() {
        let e = exps(2.0, 4.0);
        assert_eq!(lorentz_norm(&Seq::indicator(1), &e), 1.0);
        // u^K: (sum n^{s/p-1})^{1/s}
        let expected = (1f64 + 2f64.powf(1.0) + 3f64.powf(1.0)).powf(0.25);
        assert!((lorentz_norm(&Seq::indicator(3), &e) - expected).abs() < 1e-14);
        // p = s collapses to the plain l^s norm of the rearrangement.
        let e22 = exps(2.0, 2.0);
        assert!((lorentz_norm(&Seq::indicator(2), &e22) - 2f64.sqrt()).abs() < 1e-15);
        // Rearrangement invariance.
        let a = Seq::new(vec![1.0, 3.0]).unwrap();
        let b = Seq::new(vec![3.0, 1.0]).unwrap();
        assert_eq!(lorentz_norm(&a, &e), lorentz_norm(&b, &e));
    }

    #[test]
    fn maximal_norm_of_unit_indicator() {
        // ||u^1||*^s = 1 + T_1(s/p'+1) = zeta(s/p'+1) at (2,4): zeta(3).
        let e = exps(2.0, 4.0);
        let norm = lorentz_maximal_norm(&Seq::indicator(1), &e, TOL).unwrap();
        let reference = zeta(3.0, TOL).unwrap().powf(0.25);
        assert!(norm.lo() <= reference.hi() && reference.lo() <= norm.hi());
        let z = lorentz_maximal_norm(&Seq::zero(), &e, TOL).unwrap();
        assert_eq!(z.mid(), 0.0);
    }

    #[test]
    fn bridge_identity_maximal_equals_cesaro_at_shifted_exponents() {
        // ||x||*_{p,s} = ||Cx*||_{l^s(n^{s/p-1})}.
        for (p, s) in [(2.0, 4.0), (3.0, 2.0), (2.0, 2.0), (1.5, 3.0)] {
            let e = exps(p, s);
            for seed in 0..5 {
                let x = random_decreasing(40, seed, Dist::UniformGaps);
                let maximal = lorentz_maximal_norm(&x, &e, TOL).unwrap();
                let w = PowerWeight::new(s / p - 1.0).unwrap();
                let cesaro = cesaro_weighted_lp_norm(&x.sorted_decreasing(), s, w, TOL).unwrap();
                assert!(
                    maximal.lo() <= cesaro.hi() && cesaro.lo() <= maximal.hi(),
                    "bridge fails at (p={p}, s={s}, seed={seed})"
                );
            }
        }
    }

    #[test]
    fn homogeneity_and_upper_hardy_bound() {
        let e = exps(2.0, 4.0);
        let x = random_decreasing(30, 9, Dist::HeavyTail);
        let scaled = x.scaled(3.5).unwrap();
        assert!(
            (lorentz_norm(&scaled, &e) - 3.5 * lorentz_norm(&x, &e)).abs()
                < 1e-12 * lorentz_norm(&scaled, &e)
        );
        let m = lorentz_maximal_norm(&x, &e, TOL).unwrap();
        let m_scaled = lorentz_maximal_norm(&scaled, &e, TOL).unwrap();
        assert!((m_scaled.mid() - 3.5 * m.mid()).abs() < 1e-10 * m_scaled.mid());
        // ||x||* <= p' ||x||.
        assert!(m.hi() <= e.p_prime * lorentz_norm(&x, &e) * (1.0 + 1e-10));
    }
}
