//! Cesàro segment averaging for oscillatory and divergent integrals:
//! integrate over consecutive segments of fixed length, track the running
//! partial sums, and average them.

use super::engine::{segment_best_effort, QuadOptions};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct CesaroStep {
    pub segment: u32,
    /// Cumulative integral up to the end of this segment.
    pub partial_sum: f64,
    /// Mean of the partial sums through this segment.
    pub running_average: f64,
    /// Set when the segment integral itself did not meet its tolerance;
    /// the value is still used, the flag propagates to the caller.
    pub flagged: bool,
    /// Error estimate of this segment's integral.
    pub segment_error: f64,
}

/// Integrate f over [k·L, (k+1)·L] for k = 0..n and return the
/// cumulative sums with their Cesàro means.
pub fn cesaro_average(
    f: &mut impl FnMut(f64) -> Result<f64>,
    segment_length: f64,
    n_segments: u32,
    opts: &QuadOptions,
) -> Result<Vec<CesaroStep>> {
    if !(segment_length > 0.0) {
        return Err(Error::Domain(format!(
            "segment length must be positive, got {segment_length}"
        )));
    }
    if n_segments == 0 {
        return Err(Error::Domain("need at least one segment".into()));
    }
    let mut out = Vec::with_capacity(n_segments as usize);
    let mut cum = 0.0f64;
    let mut sum_of_partials = 0.0f64;
    for k in 0..n_segments {
        let lo = k as f64 * segment_length;
        let hi = (k + 1) as f64 * segment_length;
        let seg_opts = QuadOptions {
            singular_at_origin: opts.singular_at_origin && k == 0,
            ..*opts
        };
        let (val, err, converged) = segment_best_effort(f, lo, hi, &seg_opts)?;
        cum += val;
        sum_of_partials += cum;
        out.push(CesaroStep {
            segment: k,
            partial_sum: cum,
            running_average: sum_of_partials / (k + 1) as f64,
            flagged: !converged,
            segment_error: err,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TAU: f64 = 2.0 * std::f64::consts::PI;

    #[test]
    fn cosine_segments_average_to_zero() {
        // each [2πk, 2π(k+1)] integrates to 0 exactly
        let mut f = |x: f64| Ok(x.cos());
        let steps = cesaro_average(&mut f, TAU, 50, &QuadOptions::with_tol(1e-12)).unwrap();
        let last = steps.last().unwrap();
        assert!(last.running_average.abs() < 1e-10, "{}", last.running_average);
    }

    #[test]
    fn constant_integrand_diverges_linearly() {
        let mut f = |_x: f64| Ok(1.0);
        let steps = cesaro_average(&mut f, 1.0, 100, &QuadOptions::with_tol(1e-12)).unwrap();
        // partial sums grow like k, averages like k/2: divergence is exposed
        assert!((steps[99].partial_sum - 100.0).abs() < 1e-9);
        assert!((steps[99].running_average - 50.5).abs() < 1e-9);
    }

    #[test]
    fn absolutely_convergent_matches_direct() {
        let mut f = |v: f64| Ok((-v).exp());
        let steps = cesaro_average(&mut f, 5.0, 40, &QuadOptions::with_tol(1e-12)).unwrap();
        // partial sums converge to 1 fast; the average trails behind but the
        // final partial sum is the full integral
        assert!((steps.last().unwrap().partial_sum - 1.0).abs() < 1e-10);
    }
}
