//! Complex log-gamma via the Lanczos approximation with reflection.

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor()
}

/// ln cosh(x) without overflow for large |x|.
pub fn ln_cosh(x: f64) -> f64 {
    let a = x.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

/// log(sin(πz)) stable against overflow of sin for large |Im z|.
fn log_sin_pi(z: Complex64) -> Complex64 {
    let pi = std::f64::consts::PI;
    if z.im.abs() < 5.0 {
        (z * pi).sin().ln()
    } else {
        // sin(πz) = −e^{∓iπz}/(2i)·(1 − e^{±2iπz}), sign chosen so the
        // leading exponential decays.
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        if z.im > 0.0 {
            let small = (Complex64::new(0.0, 2.0 * pi) * z).exp();
            -i * pi * z - (Complex64::new(0.0, 2.0)).ln() + (one - small).ln()
        } else {
            let small = (Complex64::new(0.0, -2.0 * pi) * z).exp();
            i * pi * z - (Complex64::new(0.0, -2.0)).ln() + (one - small).ln()
        }
    }
}

/// Principal-branch log-gamma for complex arguments.
///
/// Lanczos (g = 7, 9 terms) for Re z ≥ 0.5, reflection otherwise.
/// `exp(log_gamma(z)) = Γ(z)` to working precision everywhere off the poles.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("Γ pole at {z}")));
    }
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π/sin(πz)
        let refl = log_gamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(std::f64::consts::PI.ln() - log_sin_pi(z) - refl);
    }
    let zm1 = z - 1.0;
    let mut acc = Complex64::new(LANCZOS[0], 0.0);
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (zm1 + k as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    let half_ln_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    Ok(half_ln_2pi + (zm1 + 0.5) * t.ln() - t + acc.ln())
}

/// Γ(z) = exp(log_gamma(z)).
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// |Γ(σ + iv)|² computed in log space.
pub fn gamma_abs_sq(sigma: f64, v: f64) -> Result<f64> {
    let lg = log_gamma(Complex64::new(sigma, v))?;
    Ok((2.0 * lg.re).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    /// Independent oracle: Stirling series with recurrence shift.
    /// ln Γ(z) = (z−1/2)ln z − z + ln(2π)/2 + Σ B_{2n}/(2n(2n−1) z^{2n−1})
    fn stirling_oracle(mut z: Complex64) -> Complex64 {
        let mut shift = Complex64::new(0.0, 0.0);
        while z.norm() < 30.0 {
            shift += z.ln();
            z += 1.0;
        }
        let b = [
            1.0 / 12.0,
            -1.0 / 360.0,
            1.0 / 1260.0,
            -1.0 / 1680.0,
            1.0 / 1188.0,
            -691.0 / 360_360.0,
            1.0 / 156.0,
            -3617.0 / 122_400.0,
        ];
        let mut s = Complex64::new(0.0, 0.0);
        let inv2 = (z * z).inv();
        let mut p = z.inv();
        for coef in b {
            s += coef * p;
            p *= inv2;
        }
        (z - 0.5) * z.ln() - z + 0.5 * (2.0 * std::f64::consts::PI).ln() + s - shift
    }

    #[test]
    fn gamma_at_one_is_zero() {
        let v = log_gamma(Complex64::new(1.0, 0.0)).unwrap();
        assert!(v.norm() < 1e-14);
    }

    #[test]
    fn gamma_at_half() {
        let v = log_gamma(Complex64::new(0.5, 0.0)).unwrap();
        let expect = std::f64::consts::PI.sqrt().ln();
        assert!((v.re - expect).abs() < 1e-14 && v.im.abs() < 1e-14);
    }

    #[test]
    fn matches_stirling_oracle_on_critical_line() {
        let z = Complex64::new(0.5, 3.0);
        let ours = log_gamma(z).unwrap();
        let oracle = stirling_oracle(z);
        assert!(
            (ours - oracle).norm() < 1e-13,
            "ours {ours}, oracle {oracle}"
        );
    }

    #[test]
    fn matches_stirling_at_various_points() {
        for &(re, im) in &[(0.7, 1.2), (2.3, -4.0), (1.0, 20.0), (5.5, 0.0), (0.5, 50.0)] {
            let z = Complex64::new(re, im);
            let d = (log_gamma(z).unwrap() - stirling_oracle(z)).norm();
            assert!(d < 1e-12, "mismatch {d:.2e} at {z}");
        }
    }

    #[test]
    fn reflection_region_value() {
        // Γ(-0.5) = -2√π
        let g = gamma(Complex64::new(-0.5, 0.0)).unwrap();
        let expect = -2.0 * std::f64::consts::PI.sqrt();
        assert!((g.re - expect).abs() < 1e-12 && g.im.abs() < 1e-12);
    }

    #[test]
    fn pole_is_an_error() {
        assert!(matches!(
            log_gamma(Complex64::new(0.0, 0.0)),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            log_gamma(Complex64::new(-3.0, 0.0)),
            Err(Error::Pole(_))
        ));
    }
}
