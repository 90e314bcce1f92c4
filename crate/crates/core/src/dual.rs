//! The dual Lorentz norm ||x||'_{p,s}: closed evaluation through the
//! level sequence, plus an independent brute-force maximizer used to
//! cross-validate the level construction.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::kahan::compensated_sum;
use crate::level::{level_sequence, WeightSeq};
use crate::norms::{lorentz_norm, Exponents};
use crate::seq::Seq;

/// ||x||'_{p,s} = sup { sum x_n y_n : ||y||_{p',s'} <= 1 }.
///
/// For s <= p the dual norm coincides with ||x||_{p,s}.  For p < s it
/// equals ||x°||_{p,s}, where x° is the level sequence of x* with
/// respect to the weights n^{-alpha}, alpha = 1 - s'/p' in (0,1).
pub fn dual_norm(x: &Seq, e: &Exponents) -> Result<f64> {
    if e.s <= e.p {
        return Ok(lorentz_norm(x, e));
    }
    let sorted = x.sorted_decreasing();
    let phi = WeightSeq::power(e.alpha)?;
    let (xo, _) = level_sequence(&sorted, &phi)?;
    Ok(lorentz_norm(&xo, e))
}

/// Direct numerical maximization of sum x_n y_n / ||y||_{p',s'} over
/// nonincreasing nonnegative y supported where x is.
///
/// y is parametrized by nonnegative decrements d (y_n = sum_{k>=n} d_k)
/// and improved by projected gradient ascent with adaptive step size,
/// from `restarts` deterministic random starts plus one start at y = x*.
/// The result is a lower bound on the dual norm that empirically
/// attains it; intended for small supports (N <= 12).  `tol` is the
/// relative accuracy the caller needs: the run counts as converged
/// when a restart reaches step-wise stationarity or the two best
/// restarts agree within max(tol, 1e-8) relative; otherwise it errors
/// with the best value found.
pub fn dual_norm_oracle(x: &Seq, e: &Exponents, restarts: usize, tol: f64) -> Result<f64> {
    let sorted = x.sorted_decreasing();
    let xs: Vec<f64> = sorted
        .values()
        .iter()
        .copied()
        .take_while(|&v| v > 0.0)
        .collect();
    let n = xs.len();
    if n == 0 {
        return Ok(0.0);
    }

    let conj = e.conjugate();
    // Weights of ||y||_{p',s'}^{s'} for nonincreasing y.
    let w: Vec<f64> = (1..=n)
        .map(|k| (k as f64).powf(conj.s / conj.p - 1.0))
        .collect();
    let sp = conj.s; // = s'

    let ratio = |y: &[f64]| -> f64 {
        let dot = compensated_sum(y.iter().zip(&xs).map(|(&a, &b)| a * b));
        let norm_s = compensated_sum(y.iter().zip(&w).map(|(&a, &b)| b * a.powf(sp)));
        if dot <= 0.0 || norm_s <= 0.0 || !norm_s.is_finite() {
            return 0.0;
        }
        dot / norm_s.powf(1.0 / sp)
    };

    let to_y = |d: &[f64]| -> Vec<f64> {
        let mut y = vec![0.0; n];
        let mut acc = 0.0;
        for i in (0..n).rev() {
            acc += d[i];
            y[i] = acc;
        }
        y
    };

    let mut rng = ChaCha8Rng::seed_from_u64(0x6c6f_7265_6e74_7a00);
    let mut finals = Vec::new();
    let mut any_stationary = false;
    let agree_tol = tol.max(1e-8);

    for restart in 0..=restarts.max(1) {
        let mut d: Vec<f64> = if restart == 0 {
            // Start at y = x*: decrements of the sorted input.
            (0..n)
                .map(|i| xs[i] - xs.get(i + 1).copied().unwrap_or(0.0))
                .collect()
        } else {
            (0..n).map(|_| rng.gen::<f64>()).collect()
        };
        if d.iter().all(|&v| v == 0.0) {
            d = vec![1.0; n];
        }

        let mut y = to_y(&d);
        let mut current = ratio(&y);
        let mut step = 0.1;
        let mut converged = false;

        for _ in 0..200 {
            let at_iteration_start = current;
            // Gradient of log(ratio) in y, chained to decrements by a
            // prefix sum.
            let dot = compensated_sum(y.iter().zip(&xs).map(|(&a, &b)| a * b));
            let norm_s = compensated_sum(y.iter().zip(&w).map(|(&a, &b)| b * a.powf(sp)));
            if dot <= 0.0 || norm_s <= 0.0 {
                break;
            }
            let mut grad = vec![0.0; n];
            let mut acc = 0.0;
            for i in 0..n {
                acc += xs[i] / dot - w[i] * y[i].powf(sp - 1.0) / norm_s;
                grad[i] = acc;
            }

            let mut improved = false;
            while step > 1e-16 {
                let cand: Vec<f64> = d
                    .iter()
                    .zip(&grad)
                    .map(|(&di, &gi)| (di + step * gi).max(0.0))
                    .collect();
                let cand_y = to_y(&cand);
                let value = ratio(&cand_y);
                if value > current {
                    d = cand;
                    y = cand_y;
                    current = value;
                    step *= 1.3;
                    improved = true;
                    break;
                }
                step *= 0.5;
            }
            if !improved {
                converged = true;
                break;
            }
            // Stationary up to first order once an entire iteration
            // moves the ratio by a negligible relative amount; keep
            // polishing rather than stopping.
            if current - at_iteration_start <= 1e-13 * current {
                converged = true;
            }
            // Keep the parametrization scaled (the ratio is 0-homogeneous).
            if y[0] > 0.0 {
                let inv = 1.0 / y[0];
                for v in &mut d {
                    *v *= inv;
                }
                y = to_y(&d);
            }
        }

        any_stationary |= converged;
        finals.push(current);
    }

    finals.sort_by(|a, b| b.total_cmp(a));
    let best = finals[0];
    // Convergence evidence: a restart reached step-wise stationarity,
    // or the two best restarts agree on the value — all a zigzagging
    // first-order ascent can certify.
    let agreed = finals.len() >= 2 && finals[0] - finals[1] <= agree_tol * finals[0];
    if !(best > 0.0) || !(any_stationary || agreed) {
        return Err(Error::NoConvergence { best });
    }
    Ok(best)
}
