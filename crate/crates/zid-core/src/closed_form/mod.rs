//! Right-hand-side evaluators: expression trees over named constants, the
//! alternating series families, the digamma component series, the residue
//! ledgers, and the logarithmic eta moment.

pub mod expr;
pub mod residue;
pub mod series;

pub use expr::{EvalCtx, Expr};
pub use residue::{
    residue_x, residue_x_detailed, residue_y, residue_y_detailed, residue_z, residue_z_detailed,
    ResidueBreakdown, ResidueLedgerInput,
};
pub use series::{
    disk_series, evaluate_series, h2a_series, h2b_series, hab2_combination, hr_hi_series,
    psi_components, psi_series_at, q_factor, singular_index, AlternatingSeriesSpec, DiskSeries,
    SeriesVariant,
};

use crate::error::{Error, Result};
use crate::special::{riemann_zeta, zeta_prime};
use num_complex::Complex64;

/// Closed form of the logarithmic moment ∫_0^∞ v^{s−1} ln v · η(1, v+1) dv
/// for s ∈ (0, 1):
///
/// π[(2^s − 1) ζ′(1−s) − 2^s ln 2 · ζ(1−s)]/sin(πs)
///   + π² cos(πs)(2^s − 1) ζ(1−s)/sin²(πs).
pub fn eta_log_moment(s: f64) -> Result<f64> {
    let pi = std::f64::consts::PI;
    let sin = (pi * s).sin();
    if sin.abs() < 1e-12 {
        return Err(Error::Pole(format!("sin(πs) = 0 at s = {s}")));
    }
    if !(0.0 < s && s < 1.0) {
        return Err(Error::Domain(format!("requires s ∈ (0,1), got {s}")));
    }
    let two_s = 2f64.powf(s);
    let z = riemann_zeta(Complex64::new(1.0 - s, 0.0))?.re;
    let zp = zeta_prime(1.0 - s)?;
    let ln2 = std::f64::consts::LN_2;
    Ok(pi * ((two_s - 1.0) * zp - two_s * ln2 * z) / sin
        + pi * pi * (pi * s).cos() * (two_s - 1.0) * z / (sin * sin))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_log_moment_guards() {
        assert!(eta_log_moment(1.0).is_err());
        assert!(eta_log_moment(0.5).is_ok());
    }
}
