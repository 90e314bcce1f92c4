//! Lorentz sequence-space toolkit: norms, level sequences, dual norms,
//! sharp constants, and certified inequality checks.
//!
//! The crate computes four norms on finitely supported sequences — the
//! weighted l^p norm, the Lorentz norm ||x||_{p,s}, its maximal variant
//! ||x||*_{p,s}, and the dual (associate) norm — together with the
//! sharp constants comparing them.  Quantities that involve infinite
//! tails (zeta values, Cesaro norms, maximal norms) are returned as
//! [`tails::Enclosure`] intervals so that inequality checks certify a
//! violation instead of reporting floating-point noise.
//!
//! Modules:
//! - [`seq`]: sequence types, rearrangement, partial sums, generators.
//! - [`kahan`]: compensated summation.
//! - [`tails`]: certified head/tail sums of n^{-q} and zeta values.
//! - [`norms`]: the four norms and the exponent bookkeeping.
//! - [`level`]: level sequences (least concave majorant slopes).
//! - [`dual`]: dual norm, closed form and ascent oracle.
//! - [`constants`]: sharp constants and sharpness sweeps.
//! - [`report`]: check reports with witnesses and certified margins.
//! - [`harness`]: inequality checks over generated inputs.

pub mod constants;
pub mod dual;
pub mod error;
pub mod harness;
pub mod kahan;
pub mod level;
pub mod norms;
pub mod report;
pub mod seq;
pub mod tails;

pub use constants::{
    const_zeta_hardy, const_A, const_B, const_S, default_k_grid, ratio_S_sequence,
    sharpness_sweep, SweepRow, SweepTarget,
};
pub use dual::{dual_norm, dual_norm_oracle};
pub use error::{Error, Result};
pub use harness::{
    check_dual_bounds, check_holder, check_norm_equivalences, check_pointwise_lemmas,
    check_pooling_lemma, check_reversed_hardy, run_full_suite, HardyRegime, SuiteConfig,
};
pub use level::{level_sequence, verify_level_properties, LevelDecomposition, WeightSeq};
pub use norms::{
    cesaro_weighted_lp_norm, lorentz_maximal_norm, lorentz_norm, weighted_lp_norm, Exponents,
    PowerWeight,
};
pub use report::{certified_ge, CheckReport, Witness};
pub use seq::{decreasing_rearrangement, random_decreasing, Dist, PartialSums, Seq};
pub use tails::{head_sum, tail_sum, zeta, Enclosure, DEFAULT_TOL};
