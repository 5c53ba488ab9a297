//! Path-parameterized series toward the exceptional point and the
//! regularized (pole-free) combinations.

use num_complex::Complex64;

use super::singular::kappa;
use crate::closed_form::{disk_series, h2a_series, h2b_series};
use crate::error::{Error, Result};

const PI: f64 = std::f64::consts::PI;

/// Approach-path coordinates toward the exceptional point at
/// a = −(m + w + 1/2).
#[derive(Clone, Copy, Debug)]
pub enum ApproachPath {
    /// r = M ± ρ at φ = π.
    Radial { rho: f64 },
    /// r = M, φ = π − ε.
    Arc { epsilon: f64 },
    /// a = M(−1 + q e^{iα}); q = 0 is the limit point itself.
    RayInDisk { q: f64, alpha: f64 },
    /// φ := φ + iθ with r unchanged.
    ThetaShift { theta: f64 },
}

#[derive(Clone, Copy, Debug)]
pub struct ApproachState {
    pub m: u64,
    /// w ∈ {0, 1/2}.
    pub w: f64,
    pub path: ApproachPath,
}

impl ApproachState {
    /// M = m + w + 1/2.
    pub fn big_m(&self) -> f64 {
        self.m as f64 + self.w + 0.5
    }

    pub fn w_half(&self) -> bool {
        self.w == 0.5
    }
}

/// Right-hand-side series pair along a ray in the shrinking disk:
/// (imaginary-side value, real-side value), each pole + excluded-index sum.
/// Also usable at q = 1 (the deterministic neighbour-circle evaluations).
pub fn path_series(state: &ApproachState, sigma: f64) -> Result<(f64, f64)> {
    if (sigma - 0.5).abs() > 1e-12 {
        return Err(Error::Domain(
            "path series are derived on the σ = 1/2 line".into(),
        ));
    }
    match state.path {
        ApproachPath::RayInDisk { q, alpha } => {
            if !(q > 0.0) {
                return Err(Error::Domain(
                    "q = 0 is the limit point; use regularized_series".into(),
                ));
            }
            let ds = disk_series(state.m, state.big_m(), q, alpha)?;
            Ok((ds.icp_pole + ds.icp_sum, ds.rdp_pole + ds.rdp_sum))
        }
        ApproachPath::Radial { .. } | ApproachPath::Arc { .. } => {
            let (re, im) = singular_components(state)?;
            Ok((im, re))
        }
        ApproachPath::ThetaShift { theta } => {
            if theta == 0.0 {
                return Err(Error::Domain("θ = 0 is the exceptional form".into()));
            }
            let a = h2a_series(state.m, Complex64::new(theta, 0.0))?.re;
            let b = h2b_series(state.m, Complex64::new(theta, 0.0))?.re;
            Ok((a, b))
        }
    }
}

fn singular_components(state: &ApproachState) -> Result<(f64, f64)> {
    let big_m = state.big_m();
    let (r, phi) = match state.path {
        ApproachPath::Radial { rho } => (big_m + rho, PI),
        ApproachPath::Arc { epsilon } => (big_m, PI - epsilon),
        _ => unreachable!(),
    };
    let s = super::singular::singular_term(r, phi, state.m, state.w)?;
    Ok((s.re, s.im))
}

/// The finite, α-independent value extracted at q = 0 through the
/// pole-cancelling weighted combination. The imaginary branch carries
/// I_I(M) = √M η(1, m+1); the real branch is the Δ₀ choice, 0.
///
/// α enters the floating-point path (the κ(0,α) = +π weights and the
/// sin α cancellation), so the α-independence is a numerical statement,
/// not a structural identity.
pub fn regularized_series(state: &ApproachState, alpha: f64) -> Result<f64> {
    let big_m = state.big_m();
    let ds = disk_series(state.m, big_m, 0.0, alpha)?;
    let kap = kappa(0.0, alpha)?; // +π by convention
    debug_assert_eq!(kap, PI);
    let sin_a = alpha.sin();
    if sin_a.abs() < 1e-12 {
        // the sin α = 0 rays: the combination reduces to the real branch,
        // which vanishes for every q
        let cos_a = alpha.cos();
        return Ok(big_m.sqrt() * (cos_a * ds.icp_sum - sin_a * ds.rdp_sum) / cos_a);
    }
    Ok(big_m.sqrt() * (alpha.cos() * ds.icp_sum - sin_a * ds.rdp_sum) / sin_a)
}

/// Both θ-shifted series values (single-sided, two-sided) at real θ.
/// θ = 0 and θ = ln(k)/2 for positive integers k are excluded.
pub fn theta_pv_combination(m: u64, theta: f64) -> Result<(f64, f64)> {
    if theta == 0.0 {
        return Err(Error::Domain("θ = 0 sits on the pole".into()));
    }
    let mut k = 1u64;
    loop {
        let excluded = (k as f64).ln() / 2.0;
        if excluded > theta.abs() + 1e-9 {
            break;
        }
        if (theta.abs() - excluded).abs() < 1e-9 {
            return Err(Error::Domain(format!(
                "θ = ln({k})/2 is an excluded shift"
            )));
        }
        k += 1;
    }
    let a = h2a_series(m, Complex64::new(theta, 0.0))?.re;
    let b = h2b_series(m, Complex64::new(theta, 0.0))?.re;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    const LN_2: f64 = std::f64::consts::LN_2;

    #[test]
    fn regularized_alpha_independence() {
        let state = ApproachState {
            m: 0,
            w: 0.0,
            path: ApproachPath::RayInDisk { q: 0.0, alpha: 0.0 },
        };
        let vals: Vec<f64> = [0.3, 1.1, 2.0, 2.9]
            .iter()
            .map(|&a| regularized_series(&state, a).unwrap())
            .collect();
        for v in &vals {
            assert!((v - vals[0]).abs() < 1e-12, "{vals:?}");
        }
        // I_I(M_h = 1/2) = √(1/2)·η(1,1) = ln2/√2
        assert!((vals[0] - LN_2 / 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn regularized_w_half_values() {
        for m in 0..3u64 {
            let state = ApproachState {
                m,
                w: 0.5,
                path: ApproachPath::RayInDisk { q: 0.0, alpha: 1.0 },
            };
            let v = regularized_series(&state, 1.3).unwrap();
            let eta = crate::special::nielsen_beta(m as f64 + 1.0).unwrap();
            let expect = ((m + 1) as f64).sqrt() * eta;
            assert!((v - expect).abs() < 1e-12, "m={m}: {v} vs {expect}");
        }
    }

    #[test]
    fn theta_exclusions() {
        assert!(theta_pv_combination(0, 0.0).is_err());
        assert!(theta_pv_combination(0, LN_2 / 2.0).is_err());
        assert!(theta_pv_combination(0, (3f64).ln() / 2.0).is_err());
        assert!(theta_pv_combination(0, 0.25).is_ok());
    }

    #[test]
    fn ray_needs_positive_q() {
        let state = ApproachState {
            m: 0,
            w: 0.0,
            path: ApproachPath::RayInDisk { q: 0.0, alpha: 1.0 },
        };
        assert!(path_series(&state, 0.5).is_err());
    }
}
