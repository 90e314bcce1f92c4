//! The level sequence x° of x with respect to a positive weight
//! sequence phi: the slopes of the least concave majorant of the points
//! (Phi_n, X_n), scaled back by phi.
//!
//! x° is the unique sequence with (a) x°/phi nonincreasing, (b) partial
//! sums dominating those of x with equal totals, and (c) agreement with
//! x off a family of pooled segments on which x°/phi is constant and
//! segment sums match.  The construction is one monotone-chain pass
//! over the cumulative points, O(N).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::report::CheckReport;
use crate::seq::Seq;

/// Relative scale (against the first hull slope, the maximum of
/// x°/phi) below which a hull segment's internal ratio increases count
/// as rounding noise rather than genuine pooling; such segments copy
/// their entries instead of being recorded.  Copying is sound exactly
/// when it leaves x/phi nonincreasing at far below verification
/// tolerance, so the test lives in the ratio domain.  Re-running the
/// construction on its own output produces ratio noise of a few ulps,
/// orders below this, while recording keeps the verifier's differ-set
/// aligned with the segments for any stretch that moves entries
/// materially.
const IDENTITY_SNAP: f64 = 1e-10;

/// Relative tolerance used by the property verifier when deciding
/// whether an entry of x° differs from x.
const DIFFER_TOL: f64 = 1e-9;

/// A positive weight sequence phi with partial sums Phi.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightSeq {
    /// phi_n = n^{-alpha} with alpha < 1, so Phi_n diverges.
    Power { alpha: f64 },
    /// Arbitrary positive weights, given explicitly.
    Explicit { values: Vec<f64> },
}

impl WeightSeq {
    /// Power weights n^{-alpha}; alpha < 1 keeps Phi divergent, which
    /// the level construction needs for finitely supported inputs.
    pub fn power(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha >= 1.0 {
            return Err(Error::window("alpha", alpha, "alpha < 1"));
        }
        Ok(WeightSeq::Power { alpha })
    }

    /// Explicit positive weights.
    pub fn explicit(values: Vec<f64>) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidWeight { index: i, value: v });
            }
        }
        Ok(WeightSeq::Explicit { values })
    }

    /// phi_n (1-indexed).  Explicit weights must cover the index.
    pub fn phi(&self, n: usize) -> f64 {
        assert!(n >= 1, "weights are 1-indexed");
        match self {
            WeightSeq::Power { alpha } => (n as f64).powf(-alpha),
            WeightSeq::Explicit { values } => {
                assert!(
                    n <= values.len(),
                    "explicit weight sequence too short for index {n}"
                );
                values[n - 1]
            }
        }
    }

    /// phi_1..phi_n as a vector.
    pub fn prefix(&self, n: usize) -> Vec<f64> {
        (1..=n).map(|i| self.phi(i)).collect()
    }
}

/// One pooled segment I_k = {start..=end} with x°_i = lambda * phi_i.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Segment {
    /// First index of the segment (1-indexed, inclusive).
    pub start: usize,
    /// Last index of the segment (inclusive).
    pub end: usize,
    /// Common ratio x°_i / phi_i on the segment.
    pub lambda: f64,
}

/// The pooled segments of a level construction; indices not covered are
/// identity indices where x° = x.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct LevelDecomposition {
    pub segments: Vec<Segment>,
}

impl LevelDecomposition {
    /// True when x° = x everywhere.
    pub fn is_identity(&self) -> bool {
        self.segments.is_empty()
    }

    /// True when index n lies in a pooled segment.
    pub fn covers(&self, n: usize) -> bool {
        self.segments.iter().any(|s| s.start <= n && n <= s.end)
    }
}

/// Cross product (A - O) x (B - O); positive means the turn O->A->B is
/// counterclockwise, i.e. A lies below the chord O->B.
fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Computes the level sequence x° of x with respect to phi, together
/// with its pooled-segment decomposition.
///
/// The points P_0 = (0,0), P_n = (Phi_n, X_n) are swept once; popping
/// while the turn is counterclockwise or collinear leaves the vertices
/// of the least concave majorant with strictly decreasing slopes.
/// Identity indices copy x_n exactly; trailing zero-slope flats are
/// truncated, so the support of x° never exceeds that of x.
pub fn level_sequence(x: &Seq, phi: &WeightSeq) -> Result<(Seq, LevelDecomposition)> {
    let n = x.len();
    if n == 0 {
        return Ok((Seq::zero(), LevelDecomposition::default()));
    }

    // Cumulative coordinates: pts[i] = (Phi_i, X_i), pts[0] = origin.
    let mut pts = Vec::with_capacity(n + 1);
    pts.push((0.0, 0.0));
    let mut phi_acc = KahanSum::new();
    let mut x_acc = KahanSum::new();
    for i in 1..=n {
        let w = phi.phi(i);
        if !w.is_finite() || w <= 0.0 {
            return Err(Error::InvalidWeight {
                index: i - 1,
                value: w,
            });
        }
        phi_acc.add(w);
        x_acc.add(x.get(i));
        pts.push((phi_acc.value(), x_acc.value()));
    }

    // Upper concave hull, collinear runs merged.
    let mut hull: Vec<usize> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        while hull.len() >= 2 {
            let o = pts[hull[hull.len() - 2]];
            let a = pts[hull[hull.len() - 1]];
            if cross(o, a, pts[i]) >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }

    // Slopes back to entries: identity indices copy x exactly; pooled
    // hull segments write lambda * phi and are recorded.  A multi-index
    // segment is recorded only when the entry ratios x/phi genuinely
    // increase somewhere inside it; when every adjacent increase sits
    // below rounding noise the input is already level there (e.g.
    // re-running on an output) and copying the entries keeps x/phi
    // nonincreasing to well inside verification tolerance.  The hull
    // guarantees the boundary pairs: a stretch enters below its chord
    // slope and exits above it, so copies never poke past their
    // neighbours.
    let mut xo = vec![0.0; n];
    let mut segments = Vec::new();
    let first_slope = if hull.len() >= 2 {
        let v = pts[hull[1]];
        (v.1 / v.0).max(0.0)
    } else {
        0.0
    };
    let noise = IDENTITY_SNAP * first_slope.max(f64::MIN_POSITIVE);
    for w in hull.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let lambda =
            ((pts[hi].1 - pts[lo].1) / (pts[hi].0 - pts[lo].0)).max(0.0);
        if hi == lo + 1 {
            xo[hi - 1] = x.get(hi);
            continue;
        }
        let ratio = |i: usize| x.get(i) / phi.phi(i);
        let identity_stretch =
            ((lo + 1)..hi).all(|i| ratio(i + 1) - ratio(i) <= noise);
        if identity_stretch {
            for i in (lo + 1)..=hi {
                xo[i - 1] = x.get(i);
            }
            continue;
        }
        for i in (lo + 1)..=hi {
            xo[i - 1] = lambda * phi.phi(i);
        }
        if lambda > 0.0 {
            segments.push(Segment {
                start: lo + 1,
                end: hi,
                lambda,
            });
        }
    }

    // Truncate the trailing zero flat.
    while xo.last() == Some(&0.0) {
        xo.pop();
    }

    Ok((Seq::new(xo)?, LevelDecomposition { segments }))
}

/// Verifies the three characterizing properties of a level pair
/// (x, x°): (a) x°/phi nonincreasing, (b) partial-sum domination with
/// total equality, (c) x differs from x° exactly on the pooled
/// segments, with matching segment sums and constant ratio there.
///
/// Each condition is a case in the returned report; failures carry a
/// witness describing the first offending index.
pub fn verify_level_properties(
    x: &Seq,
    xo: &Seq,
    decomp: &LevelDecomposition,
    phi: &WeightSeq,
    tol: f64,
) -> CheckReport {
    let mut report = CheckReport::new("level_properties").with_param("tol", tol);
    let n = x.len().max(xo.len());
    let total_scale = x.partial_sums().total.max(f64::MIN_POSITIVE);

    // (a) x°/phi nonincreasing over the support of x°.
    let ratios: Vec<f64> = (1..=xo.len()).map(|i| xo.get(i) / phi.phi(i)).collect();
    let ratio_scale = ratios.first().copied().unwrap_or(0.0).max(f64::MIN_POSITIVE);
    let mut margin_a = f64::INFINITY;
    let mut worst_a = 0;
    for i in 1..ratios.len() {
        let m = (ratios[i - 1] - ratios[i]) / ratio_scale;
        if m < margin_a {
            margin_a = m;
            worst_a = i;
        }
    }
    let pass_a = margin_a >= -tol;
    report.record(pass_a, margin_a.min(0.0), || {
        format!("ratio increases at n={}..{}", worst_a, worst_a + 1)
    });

    // (b) partial-sum domination and total equality.
    let xs = x.partial_sums();
    let xos = xo.partial_sums();
    let mut margin_b = f64::INFINITY;
    let mut worst_b = 1;
    for i in 1..=n {
        let m = (xos.get(i) - xs.get(i)) / total_scale;
        if m < margin_b {
            margin_b = m;
            worst_b = i;
        }
    }
    let total_gap = -((xos.total - xs.total).abs()) / total_scale;
    let pass_b = margin_b >= -tol && total_gap >= -tol;
    report.record(pass_b, margin_b.min(total_gap).min(0.0), || {
        format!(
            "domination margin {margin_b:.3e} at n={worst_b}, total gap {:.3e}",
            -total_gap
        )
    });

    // (c) differ-set = union of segments; equal segment sums; constant
    // ratio lambda_k on each segment.
    let mut margin_c: f64 = 0.0;
    let mut detail = String::new();
    for i in 1..=n {
        let (a, b) = (x.get(i), xo.get(i));
        let differs = (a - b).abs() > DIFFER_TOL * a.max(b).max(f64::MIN_POSITIVE);
        if differs != decomp.covers(i) {
            margin_c = -1.0;
            if detail.is_empty() {
                detail = format!(
                    "index {i} {} the segments but {} from x",
                    if decomp.covers(i) { "is in" } else { "is not in" },
                    if differs { "differs" } else { "does not differ" }
                );
            }
        }
    }
    for seg in &decomp.segments {
        let sum_x: f64 = (seg.start..=seg.end).map(|i| x.get(i)).sum();
        let sum_xo: f64 = (seg.start..=seg.end).map(|i| xo.get(i)).sum();
        let m = -((sum_x - sum_xo).abs()) / sum_x.max(f64::MIN_POSITIVE);
        if m < margin_c {
            margin_c = m;
            detail = format!("segment {}..{} sums differ", seg.start, seg.end);
        }
        for i in seg.start..=seg.end {
            let m = -((xo.get(i) / phi.phi(i) - seg.lambda).abs()) / seg.lambda;
            if m < margin_c {
                margin_c = m;
                detail = format!("ratio not constant on segment {}..{}", seg.start, seg.end);
            }
        }
    }
    let pass_c = margin_c >= -tol;
    report.record(pass_c, margin_c, || detail);

    report
}
