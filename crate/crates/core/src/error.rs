//! Error type shared across the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while evaluating norms, tails, or sweeps.
///
/// Precondition violations are reported through this type rather than
/// panics so that the CLI and the check harness can surface them as
/// ordinary report entries.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An exponent fell outside its admissible open window.
    #[error("{name} = {value} out of range (need {requirement})")]
    ExponentOutOfRange {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    /// A sequence entry was negative or non-finite where nonnegative
    /// finite values are required.
    #[error("invalid sequence entry at index {index}: {value}")]
    InvalidEntry { index: usize, value: f64 },

    /// A weight sequence entry was nonpositive or non-finite.
    #[error("invalid weight at index {index}: {value}")]
    InvalidWeight { index: usize, value: f64 },

    /// `sum_{k>n} k^{-q}` diverges for q <= 1.
    #[error("series sum k^(-q) diverges for q = {q} (need q > 1)")]
    DivergentSeries { q: f64 },

    /// The requested enclosure width cannot be met within the iteration
    /// budget; the best achieved width is attached.  Never silently
    /// widened by callers.
    #[error("cannot reach tolerance {tol:e} (best achievable width {width:e})")]
    ToleranceUnreachable { tol: f64, width: f64 },

    /// The dual-norm optimizer exhausted its budget without meeting the
    /// convergence test; the best ratio found so far is attached.
    #[error("optimizer did not converge (best value so far {best})")]
    NoConvergence { best: f64 },

    /// Malformed user-facing input (CLI sequence literals, grids, ...).
    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    /// Convenience constructor for window violations.
    pub(crate) fn window(name: &'static str, value: f64, requirement: &'static str) -> Self {
        Error::ExponentOutOfRange {
            name,
            value,
            requirement,
        }
    }
}
