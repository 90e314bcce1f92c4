//! Closed-form sharp constants and sharpness-ratio sweeps over the
//! indicator family u^K.
//!
//! The indicator norms have closed forms in head and tail sums, so a
//! K-sweep costs O(max K) in total: the head accumulates incrementally
//! and each tail is an O(1) certified bracket.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::norms::Exponents;
use crate::tails::{head_sum, tail_sum, zeta, Enclosure};

/// One row of a sharpness sweep: the two sides of the inequality at
/// K, their ratio, the limit constant, and the relative distance to it.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub k: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub target: f64,
    pub gap: f64,
}

/// The lower constant zeta(p-a)^{1/p} of the reversed Hardy inequality
/// with increasing weights (0 <= a < p-1), as a certified enclosure.
pub fn const_zeta_hardy(p: f64, a: f64, tol: f64) -> Result<Enclosure> {
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::window("p", p, "1 < p < inf"));
    }
    if !(a >= 0.0 && a < p - 1.0) {
        return Err(Error::window("a", a, "0 <= a < p - 1"));
    }
    Ok(zeta(p - a, tol)?.powf(1.0 / p))
}

/// The lower constant ((p-a-1)/p)^{1/p} of the reversed Hardy
/// inequality with decreasing weights (-1 < a < 0).
#[allow(non_snake_case)]
pub fn const_S(p: f64, a: f64) -> Result<f64> {
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::window("p", p, "1 < p < inf"));
    }
    if !(a > -1.0 && a < 0.0) {
        return Err(Error::window("a", a, "-1 < a < 0"));
    }
    Ok(((p - a - 1.0) / p).powf(1.0 / p))
}

/// The dual-to-maximal comparison constant
/// B_{p,s} = (p')^{-1/s} (s'/p')^{1/s'} (s/p)^{1/s}, defined for p <= s.
#[allow(non_snake_case)]
pub fn const_B(e: &Exponents) -> Result<f64> {
    if e.p > e.s {
        return Err(Error::window("p", e.p, "p <= s"));
    }
    Ok(e.p_prime.powf(-1.0 / e.s)
        * (e.s_prime / e.p_prime).powf(1.0 / e.s_prime)
        * (e.s / e.p).powf(1.0 / e.s))
}

/// The bilinear comparison constant A_{p,s} = s^{1/s} (s')^{1/s'} / (p p'),
/// symmetric under (p,s) -> (p',s').
#[allow(non_snake_case)]
pub fn const_A(e: &Exponents) -> f64 {
    e.s.powf(1.0 / e.s) * e.s_prime.powf(1.0 / e.s_prime) / (e.p * e.p_prime)
}

/// Closed form ||u^K||_{p,s} = (sum_{n<=K} n^{s/p-1})^{1/s}.
pub fn indicator_lorentz_norm(e: &Exponents, k: usize) -> f64 {
    assert!(k >= 1);
    head_sum(k, 1.0 - e.s / e.p).powf(1.0 / e.s)
}

/// Closed form ||u^K||*_{p,s}^s = sum_{n<=K} n^{s/p-1} + K^s T_K(s/p'+1),
/// returned as the certified norm enclosure.
pub fn indicator_maximal_norm(e: &Exponents, k: usize, tol: f64) -> Result<Enclosure> {
    assert!(k >= 1);
    let head = head_sum(k, 1.0 - e.s / e.p);
    let tail = tail_sum(k, e.s / e.p_prime + 1.0, tol)?;
    Ok(tail
        .scale((k as f64).powf(e.s))
        .add_scalar(head)
        .powf(1.0 / e.s))
}

/// Closed form of the dual norm of u^K:
/// K (sum_{n<=K} n^{-alpha})^{-1/s'} for p <= s (at p = s this reduces
/// to K^{1/s}), and the Lorentz norm itself for s < p.
pub fn indicator_dual_norm(e: &Exponents, k: usize) -> f64 {
    assert!(k >= 1);
    if e.s < e.p {
        return indicator_lorentz_norm(e, k);
    }
    k as f64 * head_sum(k, e.alpha).powf(-1.0 / e.s_prime)
}

/// The ratio R_K = S_K(-a) / (S_K(-a) + K^p T_K(p-a)) whose limit is
/// the p-th power of the decreasing-weight Hardy constant; the row's
/// target is that limit (p-a-1)/p.
#[allow(non_snake_case)]
pub fn ratio_S_sequence(p: f64, a: f64, k: usize, tol: f64) -> Result<SweepRow> {
    const_S(p, a)?; // window check
    if k == 0 {
        return Err(Error::InvalidInput("K must be >= 1".into()));
    }
    let head = head_sum(k, -a);
    s_ratio_row(p, a, k, head, tol)
}

fn s_ratio_row(p: f64, a: f64, k: usize, head: f64, tol: f64) -> Result<SweepRow> {
    let tail = tail_sum(k, p - a, tol)?;
    let denom = head + (k as f64).powf(p) * tail.mid();
    let ratio = head / denom;
    let target = (p - a - 1.0) / p;
    Ok(SweepRow {
        k,
        lhs: head,
        rhs: denom,
        ratio,
        target,
        gap: (ratio - target).abs() / target,
    })
}

/// Which limit a sweep tracks.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepTarget {
    /// ||Cu^K|| / ||u^K|| in l^p(n^a), 0 <= a < p-1; exact equality
    /// with the constant at K = 1.
    HardyInc { p: f64, a: f64 },
    /// R_K of [`ratio_S_sequence`], -1 < a < 0.
    SRatio { p: f64, a: f64 },
    /// ||u^K||' / ||u^K||*, p <= s; limit B_{p,s}.
    BRatio(Exponents),
    /// K / (||u^K||*_{p,s} ||u^K||*_{p',s'}); limit A_{p,s}.
    HolderRatio(Exponents),
}

/// Default geometric K grid {1, 2, 4, ..., 2^20}.
pub fn default_k_grid() -> Vec<usize> {
    (0..=20).map(|i| 1usize << i).collect()
}

/// Evaluates the target ratio at each requested K (ascending, deduped;
/// the default geometric grid when empty), using closed forms with an
/// incremental head accumulator — O(max K) for the whole sweep.
pub fn sharpness_sweep(target: &SweepTarget, ks: &[usize], tol: f64) -> Result<Vec<SweepRow>> {
    let mut ks = if ks.is_empty() {
        default_k_grid()
    } else {
        ks.to_vec()
    };
    ks.sort_unstable();
    ks.dedup();
    if ks.first() == Some(&0) {
        return Err(Error::InvalidInput("K must be >= 1".into()));
    }

    let mut rows = Vec::with_capacity(ks.len());
    match target {
        SweepTarget::HardyInc { p, a } => {
            let limit = const_zeta_hardy(*p, *a, tol)?.mid();
            let mut head = KahanSum::new();
            let mut n = 0usize;
            for &k in &ks {
                while n < k {
                    n += 1;
                    head.add((n as f64).powf(*a));
                }
                let h = head.value();
                let tail = tail_sum(k, p - a, tol)?;
                let lhs = tail
                    .scale((k as f64).powf(*p))
                    .add_scalar(h)
                    .powf(1.0 / p)
                    .mid();
                let rhs = h.powf(1.0 / p);
                let ratio = lhs / rhs;
                rows.push(SweepRow {
                    k,
                    lhs,
                    rhs,
                    ratio,
                    target: limit,
                    gap: (ratio - limit).abs() / limit,
                });
            }
        }
        SweepTarget::SRatio { p, a } => {
            const_S(*p, *a)?;
            let mut head = KahanSum::new();
            let mut n = 0usize;
            for &k in &ks {
                while n < k {
                    n += 1;
                    head.add((n as f64).powf(*a));
                }
                rows.push(s_ratio_row(*p, *a, k, head.value(), tol)?);
            }
        }
        SweepTarget::BRatio(e) => {
            let limit = const_B(e)?;
            let mut head_s = KahanSum::new(); // sum n^{s/p-1}
            let mut head_alpha = KahanSum::new(); // sum n^{-alpha}
            let mut n = 0usize;
            for &k in &ks {
                while n < k {
                    n += 1;
                    head_s.add((n as f64).powf(e.s / e.p - 1.0));
                    head_alpha.add((n as f64).powf(-e.alpha));
                }
                let lhs = k as f64 * head_alpha.value().powf(-1.0 / e.s_prime);
                let rhs = tail_sum(k, e.s / e.p_prime + 1.0, tol)?
                    .scale((k as f64).powf(e.s))
                    .add_scalar(head_s.value())
                    .powf(1.0 / e.s);
                let ratio = lhs / rhs.mid();
                rows.push(SweepRow {
                    k,
                    lhs,
                    rhs: rhs.mid(),
                    ratio,
                    target: limit,
                    gap: (ratio - limit).abs() / limit,
                });
            }
        }
        SweepTarget::HolderRatio(e) => {
            let limit = const_A(e);
            let conj = e.conjugate();
            let mut head_s = KahanSum::new(); // sum n^{s/p-1}
            let mut head_c = KahanSum::new(); // sum n^{s'/p'-1}
            let mut n = 0usize;
            for &k in &ks {
                while n < k {
                    n += 1;
                    head_s.add((n as f64).powf(e.s / e.p - 1.0));
                    head_c.add((n as f64).powf(conj.s / conj.p - 1.0));
                }
                let kf = k as f64;
                let m1 = tail_sum(k, e.s / e.p_prime + 1.0, tol)?
                    .scale(kf.powf(e.s))
                    .add_scalar(head_s.value())
                    .powf(1.0 / e.s);
                let m2 = tail_sum(k, conj.s / conj.p_prime + 1.0, tol)?
                    .scale(kf.powf(conj.s))
                    .add_scalar(head_c.value())
                    .powf(1.0 / conj.s);
                let rhs = m1.mul(&m2);
                let ratio = kf / rhs.mid();
                rows.push(SweepRow {
                    k,
                    lhs: kf,
                    rhs: rhs.mid(),
                    ratio,
                    target: limit,
                    gap: (ratio - limit).abs() / limit,
                });
            }
        }
    }
    Ok(rows)
}
