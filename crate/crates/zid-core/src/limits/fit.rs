//! Pole-coefficient fitting and the Δ classification: a directional limit
//! value is one of {−∞, 0, +∞} or a regular finite number, never silently
//! a float.

use crate::error::{Error, Result};
use crate::quad::fit_pole_linear;

/// Classification of a directional limit. Δ variants carry no number; any
/// arithmetic on them is a type error at the interface level.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LimitClassification {
    DeltaZero,
    DeltaPlusInf,
    DeltaMinusInf,
    Regular(f64),
}

impl LimitClassification {
    pub fn label(&self) -> &'static str {
        match self {
            LimitClassification::DeltaZero => "Delta0",
            LimitClassification::DeltaPlusInf => "Delta+inf",
            LimitClassification::DeltaMinusInf => "Delta-inf",
            LimitClassification::Regular(_) => "Regular",
        }
    }
}

/// Outcome of a pole fit along a path.
#[derive(Clone, Copy, Debug)]
pub struct PoleFit {
    pub classification: LimitClassification,
    /// Fitted coefficient of 1/step (present unless the sequence converged).
    pub coefficient: Option<f64>,
    pub fit_residual: f64,
}

/// Least-squares fit of value ≈ c/step + d over ≥ 6 geometrically spaced
/// steps. |c| below the fit tolerance classifies DeltaZero; otherwise the
/// sign of c picks ±∞. A sequence that is already Cauchy classifies
/// Regular with its final value.
pub fn fit_pole_coefficient(samples: &[(f64, f64)]) -> Result<PoleFit> {
    if samples.len() < 6 {
        return Err(Error::Domain(format!(
            "pole fit needs ≥ 6 steps, got {}",
            samples.len()
        )));
    }
    let n = samples.len();
    let scale = samples
        .iter()
        .map(|(_, v)| v.abs())
        .fold(0.0f64, f64::max)
        .max(1e-300);
    // convergence test on the last three values
    let tail_delta = (samples[n - 1].1 - samples[n - 2].1)
        .abs()
        .max((samples[n - 2].1 - samples[n - 3].1).abs());
    if tail_delta <= 1e-9 * scale {
        return Ok(PoleFit {
            classification: LimitClassification::Regular(samples[n - 1].1),
            coefficient: None,
            fit_residual: tail_delta,
        });
    }
    let steps: Vec<f64> = samples.iter().map(|s| s.0).collect();
    let values: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let (c, d, residual) = fit_pole_linear(&steps, &values);
    let pole_magnitude = c.abs() / steps.iter().cloned().fold(f64::INFINITY, f64::min);
    if residual > 0.1 * pole_magnitude.max(d.abs()).max(1e-300) {
        return Err(Error::Fit(format!(
            "pole-fit residual {residual:.3e} exceeds 10% of fitted magnitude"
        )));
    }
    let class = if c.abs() < 1e-6 * d.abs().max(1.0) {
        LimitClassification::DeltaZero
    } else if c > 0.0 {
        LimitClassification::DeltaPlusInf
    } else {
        LimitClassification::DeltaMinusInf
    };
    Ok(PoleFit {
        classification: class,
        coefficient: Some(c),
        fit_residual: residual,
    })
}

/// The geometric step schedule step_k = 10^{−1−k/2}, k = 0..9.
pub fn geometric_steps() -> Vec<f64> {
    (0..10).map(|k| 10f64.powf(-1.0 - k as f64 / 2.0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifies_pole_sign() {
        let samples: Vec<(f64, f64)> =
            geometric_steps().iter().map(|&s| (s, -2.0 / s + 1.0)).collect();
        let fit = fit_pole_coefficient(&samples).unwrap();
        assert_eq!(fit.classification, LimitClassification::DeltaMinusInf);
        assert!((fit.coefficient.unwrap() + 2.0).abs() < 1e-8);
    }

    #[test]
    fn classifies_zero_and_regular() {
        let samples: Vec<(f64, f64)> =
            geometric_steps().iter().map(|&s| (s, 0.5 + 0.01 * s)).collect();
        let fit = fit_pole_coefficient(&samples).unwrap();
        assert!(matches!(
            fit.classification,
            LimitClassification::Regular(v) if (v - 0.5).abs() < 1e-4
        ));
    }

    #[test]
    fn too_few_steps() {
        assert!(fit_pole_coefficient(&[(0.1, 1.0); 4]).is_err());
    }
}
