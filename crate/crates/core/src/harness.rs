//! Inequality checks over generated inputs, and the full suite runner.
//!
//! Each check evaluates one of the sharp inequalities with certified
//! enclosures on the side that involves an infinite sum; a case fails
//! only on a certified violation.  The suite is a deterministic
//! function of (seed, grid, tolerance): the same configuration always
//! produces byte-identical reports.  Checks never panic on bad
//! parameter windows inside the suite — errors become report entries.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constants::{const_zeta_hardy, const_A, const_B, const_S};
use crate::dual::dual_norm;
use crate::error::{Error, Result};
use crate::kahan::{compensated_sum, KahanSum};
use crate::norms::{
    cesaro_weighted_lp_norm, lorentz_maximal_norm, lorentz_norm, weighted_lp_norm, Exponents,
    PowerWeight,
};
use crate::report::{certified_ge, CheckReport};
use crate::seq::{random_decreasing, Dist, Seq};
use crate::tails::{tail_sum, zeta, Enclosure};

/// Which weight window a reversed Hardy check runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HardyRegime {
    /// 0 <= a < p - 1; constant zeta(p-a)^{1/p}.
    IncreasingWeight,
    /// -1 < a < 0; constant (p/(p-a-1))^{1/p}.
    DecreasingWeight,
}

/// Default (n, p, a) grid for the pointwise tail-sum lemmas:
/// n in 2..=500, p in 1.1..=6.0 step 0.1, a in {0, 1/4, 1/2, 3/4}(p-1).
pub fn default_pointwise_grid() -> Vec<(usize, f64, f64)> {
    let mut grid = Vec::new();
    for i in 0..50 {
        let p = 1.1 + 0.1 * i as f64;
        for f in [0.0, 0.25, 0.5, 0.75] {
            for n in 2..=500 {
                grid.push((n, p, f * (p - 1.0)));
            }
        }
    }
    grid
}

/// The tail-sum lemmas behind the increasing-weight Hardy bound:
/// (n^p - (n-1)^p - n^a) T_{n-1}(p-a) >= n^a S_{n-1}(p-a) for every
/// grid point (the unweighted lemma is the a = 0 slice).
pub fn check_pointwise_lemmas(grid: &[(usize, f64, f64)], tol: f64) -> CheckReport {
    let mut report =
        CheckReport::new("pointwise_lemmas").with_param("grid_size", grid.len());
    // Consecutive grid points with the same (p, a) and growing n share
    // the head sum; the cache keeps the whole default grid O(1) per point.
    let mut cache: Option<(f64, f64, usize, KahanSum)> = None;
    for &(n, p, a) in grid {
        if n < 2 || p <= 1.0 || !(0.0 <= a && a < p - 1.0) {
            report.record(false, -1.0, || {
                format!("invalid grid point (n={n}, p={p}, a={a})")
            });
            continue;
        }
        let head = match &mut cache {
            Some((cp, ca, cn, acc)) if *cp == p && *ca == a && *cn <= n => {
                for k in (*cn + 1)..=(n - 1) {
                    acc.add((k as f64).powf(a - p));
                }
                *cn = n;
                acc.value()
            }
            _ => {
                let mut acc = KahanSum::new();
                for k in 1..=(n - 1) {
                    acc.add((k as f64).powf(a - p));
                }
                let head = acc.value();
                cache = Some((p, a, n, acc));
                head
            }
        };
        let nf = n as f64;
        let coeff = nf.powf(p) - (nf - 1.0).powf(p) - nf.powf(a);
        let rhs = nf.powf(a) * head;
        if coeff < 0.0 {
            report.record(false, -1.0, || {
                format!("negative coefficient at (n={n}, p={p}, a={a})")
            });
            continue;
        }
        match tail_sum(n - 1, p - a, tol) {
            Ok(t) => {
                let lhs = t.scale(coeff);
                let (pass, margin) = certified_ge(&lhs, &Enclosure::point(rhs), rhs);
                report.record(pass, margin, || format!("(n={n}, p={p}, a={a})"));
            }
            Err(e) => report.record(false, -1.0, || format!("(n={n}, p={p}, a={a}): {e}")),
        }
    }
    report
}

/// Prefix pooling bound for nonincreasing x:
/// X_m^p - sum_{k<=m} k^a x_k^p >= sum_{2<=k<=m} (k^p-(k-1)^p-k^a) x_k^p
/// for every prefix length m (equality when x is constant).
pub fn check_pooling_lemma(x: &Seq, p: f64, a: f64, tol: f64) -> Result<CheckReport> {
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::window("p", p, "1 < p < inf"));
    }
    if !(0.0 <= a && a < p - 1.0) {
        return Err(Error::window("a", a, "0 <= a < p - 1"));
    }
    if !x.is_nonincreasing() {
        return Err(Error::InvalidInput("pooling bound needs nonincreasing x".into()));
    }
    if x.len() < 2 {
        return Err(Error::InvalidInput("pooling bound needs support >= 2".into()));
    }
    let mut report = CheckReport::new("pooling_lemma")
        .with_param("p", p)
        .with_param("a", a)
        .with_param("n", x.len());
    let mut xsum = KahanSum::new();
    let mut weighted = KahanSum::new();
    let mut rhs = KahanSum::new();
    xsum.add(x.get(1));
    weighted.add(x.get(1).powf(p));
    for m in 2..=x.len() {
        let mf = m as f64;
        let xm_p = x.get(m).powf(p);
        xsum.add(x.get(m));
        weighted.add(mf.powf(a) * xm_p);
        rhs.add((mf.powf(p) - (mf - 1.0).powf(p) - mf.powf(a)) * xm_p);
        let scale = xsum.value().powf(p).max(f64::MIN_POSITIVE);
        let margin = (xsum.value().powf(p) - weighted.value() - rhs.value()) / scale;
        report.record(margin >= -tol, margin, || format!("prefix m={m}"));
    }
    Ok(report)
}

/// Reversed Hardy inequality ||Cx|| >= C ||x|| in l^p(n^a) for
/// nonincreasing x, with the regime's constant C.
pub fn check_reversed_hardy(
    x: &Seq,
    p: f64,
    a: f64,
    regime: HardyRegime,
    tol: f64,
) -> Result<CheckReport> {
    let constant = match regime {
        HardyRegime::IncreasingWeight => const_zeta_hardy(p, a, tol)?,
        HardyRegime::DecreasingWeight => {
            const_S(p, a)?; // window check
            Enclosure::point((p / (p - a - 1.0)).powf(1.0 / p))
        }
    };
    if !x.is_nonincreasing() {
        return Err(Error::InvalidInput("reversed Hardy bound needs nonincreasing x".into()));
    }
    let regime_name = match regime {
        HardyRegime::IncreasingWeight => "increasing_weight",
        HardyRegime::DecreasingWeight => "decreasing_weight",
    };
    let mut report = CheckReport::new(format!("reversed_hardy/{regime_name}"))
        .with_param("p", p)
        .with_param("a", a);
    let w = PowerWeight::new(a)?;
    let cesaro = cesaro_weighted_lp_norm(x, p, w, tol)?;
    let plain = weighted_lp_norm(x, p, w)?;
    let bound = constant.scale(plain);
    let (pass, margin) = certified_ge(&cesaro, &bound, bound.mid().max(f64::MIN_POSITIVE));
    report.record(pass, margin, || format!("n={}", x.len()));
    Ok(report)
}

/// Two-sided comparison of the maximal and standard Lorentz norms:
/// zeta(s/p'+1)^{1/s} ||x|| <= ||x||* <= p' ||x|| for p <= s, and
/// p'^{1/s} ||x|| <= ||x||* <= p' ||x|| for s < p.
pub fn check_norm_equivalences(x: &Seq, e: &Exponents, tol: f64) -> CheckReport {
    let mut report = CheckReport::new("norm_equivalences")
        .with_param("p", e.p)
        .with_param("s", e.s);
    let plain = lorentz_norm(x, e);
    let maximal = match lorentz_maximal_norm(x, e, tol) {
        Ok(m) => m,
        Err(err) => {
            report.record(false, -1.0, || format!("maximal norm failed: {err}"));
            return report;
        }
    };
    let scale = (e.p_prime * plain).max(f64::MIN_POSITIVE);

    let lower = if e.p <= e.s {
        match zeta(e.s / e.p_prime + 1.0, tol) {
            Ok(z) => z.powf(1.0 / e.s).scale(plain),
            Err(err) => {
                report.record(false, -1.0, || format!("zeta failed: {err}"));
                return report;
            }
        }
    } else {
        Enclosure::point(e.p_prime.powf(1.0 / e.s) * plain)
    };
    let (pass, margin) = certified_ge(&maximal, &lower, scale);
    report.record(pass, margin, || format!("lower bound, n={}", x.len()));

    let upper = Enclosure::point(e.p_prime * plain);
    let (pass, margin) = certified_ge(&upper, &maximal, scale);
    report.record(pass, margin, || format!("upper bound, n={}", x.len()));

    report
}

/// Comparisons between the dual and maximal norms: the B_{p,s} bound
/// for p <= s, the (p')^{-1/s} bound under both exponent orderings,
/// and ||x||* <= p' ||x||' in every regime.
pub fn check_dual_bounds(x: &Seq, e: &Exponents, tol: f64) -> CheckReport {
    let mut report = CheckReport::new("dual_bounds")
        .with_param("p", e.p)
        .with_param("s", e.s);
    let dual = match dual_norm(x, e) {
        Ok(d) => d,
        Err(err) => {
            report.record(false, -1.0, || format!("dual norm failed: {err}"));
            return report;
        }
    };
    let maximal = match lorentz_maximal_norm(x, e, tol) {
        Ok(m) => m,
        Err(err) => {
            report.record(false, -1.0, || format!("maximal norm failed: {err}"));
            return report;
        }
    };
    let scale = maximal.mid().max(f64::MIN_POSITIVE);

    if e.p <= e.s {
        let b = const_B(e).expect("p <= s window");
        let (pass, margin) = certified_ge(&maximal.scale(b), &Enclosure::point(dual), scale);
        report.record(pass, margin, || {
            format!("dual vs B_ps * maximal, n={}", x.len())
        });
    }
    if e.p != e.s {
        let hypothesis = if e.p < e.s { "stated (p<s)" } else { "proof (s<p)" };
        let c = e.p_prime.powf(-1.0 / e.s);
        let (pass, margin) = certified_ge(&maximal.scale(c), &Enclosure::point(dual), scale);
        report.record(pass, margin, || {
            format!("dual vs p'^(-1/s) * maximal under {hypothesis}, n={}", x.len())
        });
    }
    let (pass, margin) = certified_ge(&Enclosure::point(e.p_prime * dual), &maximal, scale);
    report.record(pass, margin, || {
        format!("maximal vs p' * dual, n={}", x.len())
    });

    report
}

/// Bilinear bound sum x_n y_n <= A_{p,s} ||x||*_{p,s} ||y||*_{p',s'}.
///
/// At p = s only the proven weaker constant s^{-1/s'} is asserted; the
/// comparison against A_{s,s} is recorded as a non-failing data case.
pub fn check_holder(x: &Seq, y: &Seq, e: &Exponents, tol: f64) -> CheckReport {
    let mut report = CheckReport::new("holder")
        .with_param("p", e.p)
        .with_param("s", e.s);
    let dot = compensated_sum(
        x.values()
            .iter()
            .zip(y.values())
            .map(|(&a, &b)| a * b),
    );
    let conj = e.conjugate();
    let (mx, my) = match (
        lorentz_maximal_norm(x, e, tol),
        lorentz_maximal_norm(y, &conj, tol),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(err), _) | (_, Err(err)) => {
            report.record(false, -1.0, || format!("maximal norm failed: {err}"));
            return report;
        }
    };
    let prod = mx.mul(&my);
    let scale = prod.mid().max(f64::MIN_POSITIVE);
    if e.p != e.s {
        let bound = prod.scale(const_A(e));
        let (pass, margin) = certified_ge(&bound, &Enclosure::point(dot), scale);
        report.record(pass, margin, || {
            format!("dot vs A * maximal product, n={}", x.len().max(y.len()))
        });
    } else {
        let weak = prod.scale(e.s.powf(-1.0 / e.s_prime));
        let (pass, margin) = certified_ge(&weak, &Enclosure::point(dot), scale);
        report.record(pass, margin, || {
            format!("dot vs s^(-1/s') * maximal product, n={}", x.len().max(y.len()))
        });
        // Data only: how the pairing compares against A_{s,s}.
        let strict = prod.scale(const_A(e));
        let (_, margin) = certified_ge(&strict, &Enclosure::point(dot), scale);
        report.record(true, margin, || String::new());
    }
    report
}

/// Grid and budget configuration for [`run_full_suite`].
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub tol: f64,
    /// Random cases per parameter point.
    pub cases_per_point: usize,
    /// Maximum support length of generated sequences.
    pub max_support: usize,
    pub pointwise_grid: Vec<(usize, f64, f64)>,
    /// (p, a) points with 0 <= a < p - 1.
    pub increasing_grid: Vec<(f64, f64)>,
    /// (p, a) points with -1 < a < 0.
    pub decreasing_grid: Vec<(f64, f64)>,
    /// (p, s) points covering p < s, p = s, and s < p.
    pub exponent_grid: Vec<(f64, f64)>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            tol: crate::tails::DEFAULT_TOL,
            cases_per_point: 1000,
            max_support: 200,
            pointwise_grid: default_pointwise_grid(),
            increasing_grid: default_increasing_grid(),
            decreasing_grid: default_decreasing_grid(),
            exponent_grid: default_exponent_grid(),
        }
    }
}

/// Default increasing-weight grid: ten p values times the fractions
/// {0, 1/4, 1/2, 3/4} of p - 1.
pub fn default_increasing_grid() -> Vec<(f64, f64)> {
    let mut grid = Vec::new();
    for p in [1.1, 1.25, 1.5, 1.75, 2.0, 2.5, 3.0, 4.0, 5.0, 6.0] {
        for f in [0.0, 0.25, 0.5, 0.75] {
            grid.push((p, f * (p - 1.0)));
        }
    }
    grid
}

/// Default decreasing-weight grid.
///
/// The decreasing-weight constant (p/(p-a-1))^{1/p} is NOT attainable
/// on the whole window -1 < a < 0: already the single-entry sequence
/// u^1 violates the bound whenever zeta(p-a) (p-a-1) < p (for example
/// (p, a) = (1.5, -0.25) or (6, -0.1)).  Every point below satisfies
/// the u^1 condition with slack, and large-scale random scans found no
/// violation at any of them.
pub fn default_decreasing_grid() -> Vec<(f64, f64)> {
    vec![
        (1.1, -0.1),
        (1.1, -0.3),
        (1.1, -0.5),
        (1.1, -0.7),
        (1.1, -0.9),
        (1.25, -0.25),
        (1.25, -0.5),
        (1.25, -0.75),
        (1.25, -0.9),
        (1.5, -0.5),
        (1.5, -0.75),
        (1.5, -0.9),
        (1.75, -0.6),
        (1.75, -0.75),
        (1.75, -0.9),
        (2.0, -0.5),
        (2.0, -0.75),
        (2.0, -0.9),
        (2.5, -0.75),
        (2.5, -0.9),
        (3.0, -0.75),
        (3.0, -0.9),
    ]
}

/// Default (p, s) grid: five points with p < s, two on the diagonal,
/// five with s < p.
pub fn default_exponent_grid() -> Vec<(f64, f64)> {
    vec![
        (2.0, 4.0),
        (1.5, 3.0),
        (1.2, 5.0),
        (2.0, 2.5),
        (3.0, 6.0),
        (2.0, 2.0),
        (3.0, 3.0),
        (3.0, 2.0),
        (4.0, 1.5),
        (2.0, 1.5),
        (6.0, 3.0),
        (1.5, 1.2),
    ]
}

/// Deterministic per-case generator: support length and distribution
/// are drawn from a stream keyed by (seed, family, point, case).
fn suite_case(
    seed: u64,
    family: u64,
    point: usize,
    case: usize,
    min_support: usize,
    max_support: usize,
) -> (Seq, String) {
    let mix = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(family)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(point as u64)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(case as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(mix);
    let n = rng.gen_range(min_support..=max_support.max(min_support));
    let dist = [Dist::UniformGaps, Dist::HeavyTail, Dist::Step][case % 3];
    let x = random_decreasing(n, rng.gen(), dist);
    (x, format!("case={case} dist={dist:?} n={n}"))
}

/// Indicator inputs mixed into the random cases so that each sharp
/// constant sees the family attaining it.
fn indicator_case(case: usize, max_support: usize) -> Option<(Seq, String)> {
    let k = [1usize, 10, 100].get(case)?.min(&max_support);
    Some((Seq::indicator(*k), format!("u^{k}")))
}

/// Runs every check over the configured grids with the configured
/// budget.  Deterministic for a fixed config; precondition errors are
/// recorded as failing report entries and the run continues.
pub fn run_full_suite(config: &SuiteConfig) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    reports.push(check_pointwise_lemmas(&config.pointwise_grid, config.tol));

    // Prefix pooling bound over the increasing-weight grid.
    for (i, &(p, a)) in config.increasing_grid.iter().enumerate() {
        let mut agg = CheckReport::new("pooling_lemma")
            .with_param("p", p)
            .with_param("a", a);
        for c in 0..config.cases_per_point {
            let (x, label) = suite_case(config.seed, 1, i, c, 2, config.max_support.min(50));
            match check_pooling_lemma(&x, p, a, config.tol) {
                Ok(r) => agg.absorb_prefixed(&r, &label),
                Err(e) => agg.record(false, -1.0, || format!("{label}: {e}")),
            }
        }
        reports.push(agg);
    }

    // Reversed Hardy, both regimes.
    let hardy_grids = [
        (HardyRegime::IncreasingWeight, &config.increasing_grid, 2u64),
        (HardyRegime::DecreasingWeight, &config.decreasing_grid, 3u64),
    ];
    for (regime, grid, family) in hardy_grids {
        let regime_name = match regime {
            HardyRegime::IncreasingWeight => "increasing_weight",
            HardyRegime::DecreasingWeight => "decreasing_weight",
        };
        for (i, &(p, a)) in grid.iter().enumerate() {
            let mut agg = CheckReport::new(format!("reversed_hardy/{regime_name}"))
                .with_param("p", p)
                .with_param("a", a);
            for c in 0..config.cases_per_point {
                let (x, label) = indicator_case(c, config.max_support)
                    .unwrap_or_else(|| suite_case(config.seed, family, i, c, 1, config.max_support));
                match check_reversed_hardy(&x, p, a, regime, config.tol) {
                    Ok(r) => agg.absorb_prefixed(&r, &label),
                    Err(e) => agg.record(false, -1.0, || format!("{label}: {e}")),
                }
            }
            reports.push(agg);
        }
    }

    // Norm equivalences, dual bounds, and the bilinear bound over the
    // exponent grid.
    for (i, &(p, s)) in config.exponent_grid.iter().enumerate() {
        let e = match Exponents::new(p, s) {
            Ok(e) => e,
            Err(err) => {
                let mut agg = CheckReport::new("norm_equivalences")
                    .with_param("p", p)
                    .with_param("s", s);
                agg.record(false, -1.0, || format!("invalid exponents: {err}"));
                reports.push(agg);
                continue;
            }
        };

        let mut equiv = CheckReport::new("norm_equivalences")
            .with_param("p", p)
            .with_param("s", s);
        let mut duals = CheckReport::new("dual_bounds")
            .with_param("p", p)
            .with_param("s", s);
        let mut bilinear = CheckReport::new("holder")
            .with_param("p", p)
            .with_param("s", s);
        for c in 0..config.cases_per_point {
            let (x, label) = indicator_case(c, config.max_support)
                .unwrap_or_else(|| suite_case(config.seed, 4, i, c, 1, config.max_support));
            equiv.absorb_prefixed(&check_norm_equivalences(&x, &e, config.tol), &label);
            duals.absorb_prefixed(&check_dual_bounds(&x, &e, config.tol), &label);
            let (y, y_label) = indicator_case(c, config.max_support)
                .unwrap_or_else(|| suite_case(config.seed, 5, i, c, 1, config.max_support));
            bilinear.absorb_prefixed(
                &check_holder(&x, &y, &e, config.tol),
                &format!("{label} x {y_label}"),
            );
        }
        reports.push(equiv);
        reports.push(duals);
        reports.push(bilinear);
    }

    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pointwise_lemma_hand_case_and_default_grid_slice() {
        // (n=2, p=2, a=0): (4 - 1 - 1)(zeta(2) - 1) ~ 1.2899 >= 1.
        let report = check_pointwise_lemmas(&[(2, 2.0, 0.0)], 1e-12);
        assert!(report.passed());
        assert!((report.worst_margin - 0.28986813).abs() < 1e-6);

        // A thin slice of the default grid, including the a = 0 rows.
        let grid: Vec<_> = default_pointwise_grid()
            .into_iter()
            .step_by(97)
            .collect();
        let report = check_pointwise_lemmas(&grid, 1e-12);
        assert!(report.passed(), "witnesses: {:?}", report.witnesses);
        assert!(report.worst_margin > 0.0);
    }

    #[test]
    fn pointwise_lemma_rejects_bad_windows_in_place() {
        let report = check_pointwise_lemmas(&[(2, 2.0, 1.0), (2, 2.0, 0.0)], 1e-12);
        assert_eq!(report.n_cases, 2);
        assert_eq!(report.n_pass, 1);
    }

    #[test]
    fn pooling_bound_is_equality_for_constant_sequences() {
        let x = Seq::new(vec![0.7; 30]).unwrap();
        let report = check_pooling_lemma(&x, 2.0, 0.5, 1e-12).unwrap();
        assert!(report.passed());
        assert!(report.worst_margin.abs() < 1e-12);

        let spike = Seq::new(vec![1.0, 0.0, 0.0]).unwrap();
        let report = check_pooling_lemma(&spike, 2.0, 0.5, 1e-12).unwrap();
        assert!(report.passed());

        for seed in 0..50 {
            let x = random_decreasing(50, seed, [Dist::UniformGaps, Dist::Step][seed as usize % 2]);
            let report = check_pooling_lemma(&x, 2.0, 0.5, 1e-12).unwrap();
            assert!(report.passed(), "seed {seed}: {:?}", report.witnesses);
        }
    }

    #[test]
    fn pooling_bound_preconditions() {
        let increasing = Seq::new(vec![1.0, 2.0]).unwrap();
        assert!(check_pooling_lemma(&increasing, 2.0, 0.5, 1e-12).is_err());
        let x = Seq::indicator(3);
        assert!(check_pooling_lemma(&x, 2.0, 1.5, 1e-12).is_err());
        assert!(check_pooling_lemma(&Seq::indicator(1), 2.0, 0.5, 1e-12).is_err());
    }

    #[test]
    fn hardy_check_is_tight_at_the_unit_indicator() {
        let report = check_reversed_hardy(
            &Seq::indicator(1),
            2.0,
            0.0,
            HardyRegime::IncreasingWeight,
            1e-12,
        )
        .unwrap();
        assert!(report.passed());
        // Equality case: the margin is zero up to enclosure width.
        assert!(report.worst_margin.abs() < 1e-11);
    }

    #[test]
    fn hardy_check_passes_random_cases_in_both_regimes() {
        for (p, a, regime) in [
            (2.0, 0.5, HardyRegime::IncreasingWeight),
            (1.5, 0.25, HardyRegime::IncreasingWeight),
            (2.0, -0.5, HardyRegime::DecreasingWeight),
            (1.25, -0.5, HardyRegime::DecreasingWeight),
        ] {
            for seed in 0..30 {
                let x = random_decreasing(80, seed, Dist::HeavyTail);
                let report = check_reversed_hardy(&x, p, a, regime, 1e-12).unwrap();
                assert!(report.passed(), "(p={p}, a={a}, seed={seed})");
            }
        }
    }

    #[test]
    fn hardy_check_rejects_window_mismatches() {
        let x = Seq::indicator(2);
        assert!(
            check_reversed_hardy(&x, 2.0, -0.5, HardyRegime::IncreasingWeight, 1e-12).is_err()
        );
        assert!(
            check_reversed_hardy(&x, 2.0, 0.5, HardyRegime::DecreasingWeight, 1e-12).is_err()
        );
        let unsorted = Seq::new(vec![1.0, 2.0]).unwrap();
        assert!(
            check_reversed_hardy(&unsorted, 2.0, 0.0, HardyRegime::IncreasingWeight, 1e-12)
                .is_err()
        );
    }

    #[test]
    fn norm_equivalence_lower_bound_is_tight_at_u1_above_the_diagonal() {
        let e = Exponents::new(2.0, 4.0).unwrap();
        let report = check_norm_equivalences(&Seq::indicator(1), &e, 1e-12);
        assert!(report.passed());
        for seed in 0..20 {
            let x = random_decreasing(60, seed, Dist::UniformGaps);
            let report = check_norm_equivalences(&x, &e, 1e-12);
            assert!(report.passed(), "seed {seed}: {:?}", report.witnesses);
        }
    }

    #[test]
    fn norm_equivalence_detects_the_failing_lower_constant_below_the_diagonal() {
        // At (p,s) = (3,2) the claimed lower constant p'^{1/s} exceeds
        // the actual ratio at u^1 — the check must report it.
        let e = Exponents::new(3.0, 2.0).unwrap();
        let report = check_norm_equivalences(&Seq::indicator(1), &e, 1e-12);
        assert!(!report.passed());
        assert_eq!(report.n_pass, 1); // the upper bound still holds
    }

    #[test]
    fn dual_bounds_flag_the_b_constant_at_u1_and_keep_the_proven_side() {
        let e = Exponents::new(2.0, 4.0).unwrap();
        let report = check_dual_bounds(&Seq::indicator(1), &e, 1e-12);
        // ||u^1||' = 1 > B * ||u^1||* ~ 0.7726: certified violation.
        assert!(!report.passed());
        // p' * dual >= maximal must still pass.
        let witnesses: Vec<&str> = report.witnesses.iter().map(|w| w.case.as_str()).collect();
        assert!(witnesses.iter().all(|w| !w.contains("maximal vs p'")));

        // Generic spread-out inputs satisfy all three comparisons.
        for seed in 0..20 {
            let x = random_decreasing(100, seed, Dist::UniformGaps);
            let report = check_dual_bounds(&x, &e, 1e-12);
            assert!(report.passed(), "seed {seed}: {:?}", report.witnesses);
        }
    }

    #[test]
    fn holder_check_asserts_only_the_proven_constant_on_the_diagonal() {
        let e = Exponents::new(2.0, 2.0).unwrap();
        let u = Seq::indicator(1);
        let report = check_holder(&u, &u, &e, 1e-12);
        // dot = 1 vs s^{-1/s'} * zeta(2) ~ 1.163: the weak bound holds;
        // the A_{2,2} comparison is data and cannot fail the report.
        assert!(report.passed());
        assert!(report.worst_margin < 0.0, "A_{{2,2}} data margin should be negative at u^1");
    }

    #[test]
    fn holder_check_reports_bilinear_violations_off_the_diagonal() {
        let e = Exponents::new(2.0, 4.0).unwrap();
        let u = Seq::indicator(1);
        let report = check_holder(&u, &u, &e, 1e-12);
        assert!(!report.passed(), "u^1 pairing exceeds A_(2,4)");
    }

    #[test]
    fn suite_is_deterministic_and_survives_invalid_points() {
        let config = SuiteConfig {
            cases_per_point: 5,
            max_support: 25,
            pointwise_grid: vec![(2, 2.0, 0.0), (3, 1.5, 0.25)],
            increasing_grid: vec![(2.0, 0.5)],
            decreasing_grid: vec![(2.0, -0.5), (2.0, 0.5)], // second point invalid
            exponent_grid: vec![(2.0, 4.0), (3.0, 2.0)],
            ..SuiteConfig::default()
        };
        let a = run_full_suite(&config);
        let b = run_full_suite(&config);
        let ja = serde_json::to_string(&a).unwrap();
        let jb = serde_json::to_string(&b).unwrap();
        assert_eq!(ja, jb);

        // The invalid decreasing point surfaces as error entries, not a panic.
        let bad = a
            .iter()
            .find(|r| {
                r.check_id == "reversed_hardy/decreasing_weight"
                    && r.params.get("a").map(String::as_str) == Some("0.5")
            })
            .expect("report for the invalid point exists");
        assert!(!bad.passed());
        assert!(bad.witnesses[0].case.contains("out of range"));
    }

    #[test]
    fn default_decreasing_grid_points_admit_the_constant_at_u1() {
        // zeta(p-a)(p-a-1) >= p is necessary (u^1) — every default
        // point satisfies it with certified slack.
        for (p, a) in default_decreasing_grid() {
            let z = zeta(p - a, 1e-12).unwrap();
            assert!(
                z.lo() * (p - a - 1.0) >= p,
                "(p={p}, a={a}): u^1 already violates the decreasing-weight bound"
            );
            let report = check_reversed_hardy(
                &Seq::indicator(1),
                p,
                a,
                HardyRegime::DecreasingWeight,
                1e-12,
            )
            .unwrap();
            assert!(report.passed());
        }
    }

    #[test]
    fn known_counterexamples_to_the_decreasing_constant_are_reported() {
        // (p, a) = (1.5, -0.25) and (6.0, -0.1): u^1 certifiably
        // violates (p/(p-a-1))^{1/p} ||u^1|| <= ||Cu^1||.
        for (p, a) in [(1.5, -0.25), (6.0, -0.1)] {
            let report = check_reversed_hardy(
                &Seq::indicator(1),
                p,
                a,
                HardyRegime::DecreasingWeight,
                1e-12,
            )
            .unwrap();
            assert!(!report.passed(), "(p={p}, a={a}) unexpectedly passed");
        }
    }
}
