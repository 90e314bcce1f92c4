//! Check reports and certified inequality comparisons.
//!
//! Every inequality check in the crate produces a [`CheckReport`]:
//! how many cases ran, how many passed, the worst normalized margin,
//! and up to three failing witnesses.  Comparisons between enclosures
//! follow one convention throughout: a case *fails* only when the
//! violation is certified (the whole interval of the supposedly larger
//! side sits below the whole interval of the smaller side), so a pass
//! can never be a rounding artifact at the enclosure tolerance.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::tails::Enclosure;

/// A failing (or near-worst) case, serialized for the report.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    /// Human-readable case descriptor (input family, seed, index, ...).
    pub case: String,
    /// Normalized margin of this case.
    pub margin: f64,
}

/// Outcome of one check over many cases.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    /// Stable identifier, e.g. "reversed_hardy/increasing_weight".
    pub check_id: String,
    /// Exponents and generator settings, stringified for serialization.
    pub params: BTreeMap<String, String>,
    /// Number of cases evaluated.
    pub n_cases: usize,
    /// Number of cases that passed.
    pub n_pass: usize,
    /// Minimum over cases of the normalized margin (recorded even when
    /// every case passes; negative values within enclosure width are
    /// inconclusive rather than failing).
    pub worst_margin: f64,
    /// Up to three failing cases.
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn new(check_id: impl Into<String>) -> Self {
        Self {
            check_id: check_id.into(),
            params: BTreeMap::new(),
            n_cases: 0,
            n_pass: 0,
            worst_margin: f64::INFINITY,
            witnesses: Vec::new(),
        }
    }

    /// Attaches a parameter to the report header.
    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// Records one case.  The label is only rendered for failures.
    pub fn record(&mut self, pass: bool, margin: f64, label: impl FnOnce() -> String) {
        self.n_cases += 1;
        if pass {
            self.n_pass += 1;
        } else if self.witnesses.len() < 3 {
            self.witnesses.push(Witness {
                case: label(),
                margin,
            });
        }
        if margin < self.worst_margin {
            self.worst_margin = margin;
        }
    }

    /// Merges the cases of another report into this one.
    pub fn absorb(&mut self, other: &CheckReport) {
        self.absorb_prefixed(other, "");
    }

    /// Merges another report, prefixing its witnesses with the
    /// generating case's descriptor.
    pub fn absorb_prefixed(&mut self, other: &CheckReport, prefix: &str) {
        self.n_cases += other.n_cases;
        self.n_pass += other.n_pass;
        if other.worst_margin < self.worst_margin {
            self.worst_margin = other.worst_margin;
        }
        for w in &other.witnesses {
            if self.witnesses.len() < 3 {
                self.witnesses.push(Witness {
                    case: if prefix.is_empty() {
                        w.case.clone()
                    } else {
                        format!("{prefix}: {}", w.case)
                    },
                    margin: w.margin,
                });
            }
        }
    }

    /// True when every case passed.
    pub fn passed(&self) -> bool {
        self.n_pass == self.n_cases
    }
}

/// Certified comparison `big >= small` between enclosures.
///
/// Returns `(pass, margin)`: `pass` is "no certified violation"
/// (big.hi >= small.lo); `margin` is the certified slack
/// (big.lo - small.hi) / scale, positive exactly when the inequality is
/// proved at this tolerance.
pub fn certified_ge(big: &Enclosure, small: &Enclosure, scale: f64) -> (bool, f64) {
    let scale = scale.abs().max(f64::MIN_POSITIVE);
    let pass = big.hi() >= small.lo();
    let margin = (big.lo() - small.hi()) / scale;
    (pass, margin)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_tracks_margins_and_witnesses() {
        let mut r = CheckReport::new("demo").with_param("p", 2.0);
        r.record(true, 0.5, || unreachable!());
        r.record(false, -0.2, || "case A".to_string());
        r.record(false, -0.7, || "case B".to_string());
        assert_eq!(r.n_cases, 3);
        assert_eq!(r.n_pass, 1);
        assert!(!r.passed());
        assert_eq!(r.worst_margin, -0.7);
        assert_eq!(r.witnesses.len(), 2);
        assert_eq!(r.params["p"], "2");
    }

    #[test]
    fn witness_list_caps_at_three() {
        let mut r = CheckReport::new("demo");
        for i in 0..10 {
            r.record(false, -(i as f64), || format!("case {i}"));
        }
        assert_eq!(r.witnesses.len(), 3);
        assert_eq!(r.worst_margin, -9.0);
    }

    #[test]
    fn certified_comparison_distinguishes_proof_from_inconclusive() {
        let a = Enclosure::new(2.0, 2.1);
        let b = Enclosure::new(1.0, 1.1);
        let (pass, margin) = certified_ge(&a, &b, 1.0);
        assert!(pass && margin > 0.0);

        // Overlapping intervals: no certified violation, negative margin.
        let c = Enclosure::new(0.9, 1.05);
        let (pass, margin) = certified_ge(&c, &b, 1.0);
        assert!(pass && margin < 0.0);

        // Certified violation.
        let d = Enclosure::new(0.5, 0.9);
        let (pass, _) = certified_ge(&d, &b, 1.0);
        assert!(!pass);
    }
}
