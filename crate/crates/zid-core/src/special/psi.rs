//! Digamma and trigamma for complex arguments.
//!
//! Asymptotic series after a recurrence shift; reflection for Re z < 0.
//! Real inputs stay exactly real (the imaginary parts of all intermediate
//! complex operations vanish identically for im = 0).

use num_complex::Complex64;

use crate::error::{Error, Result};

const SHIFT_RADIUS: f64 = 16.0;

// B_{2k} for k = 1..7
const BERN: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor()
}

/// ψ(z), the logarithmic derivative of Γ.
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("ψ pole at {z}")));
    }
    if z.re < 0.0 {
        // ψ(z) = ψ(1−z) − π cot(πz)
        let pi = std::f64::consts::PI;
        let cot = (z * pi).cos() / (z * pi).sin();
        return Ok(digamma(Complex64::new(1.0, 0.0) - z)? - pi * cot);
    }
    let mut z = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.norm() < SHIFT_RADIUS {
        shift += z.inv();
        z += 1.0;
    }
    // ψ(z) ~ ln z − 1/(2z) − Σ B_{2k}/(2k z^{2k})
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut s = z.ln() - 0.5 * inv;
    let mut p = inv2;
    for (k, b) in BERN.iter().enumerate() {
        s -= b / (2.0 * (k as f64 + 1.0)) * p;
        p *= inv2;
    }
    Ok(s - shift)
}

/// ψ′(z) = Σ_{j≥0} 1/(j+z)².
pub fn trigamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("ψ′ pole at {z}")));
    }
    if z.re < 0.0 {
        // ψ′(z) + ψ′(1−z) = π²/sin²(πz)
        let pi = std::f64::consts::PI;
        let s = (z * pi).sin();
        return Ok(pi * pi / (s * s) - trigamma(Complex64::new(1.0, 0.0) - z)?);
    }
    let mut z = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.norm() < SHIFT_RADIUS {
        shift += (z * z).inv();
        z += 1.0;
    }
    // ψ′(z) ~ 1/z + 1/(2z²) + Σ B_{2k}/z^{2k+1}
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut s = inv + 0.5 * inv2;
    let mut p = inv2 * inv;
    for b in BERN {
        s += b * p;
        p *= inv2;
    }
    Ok(s + shift)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn digamma_known_values() {
        // ψ(1) = −γ
        let v = digamma(c(1.0, 0.0)).unwrap();
        assert!((v.re + EULER_GAMMA).abs() < 1e-14 && v.im == 0.0);
        // ψ(1/2) = −γ − 2 ln 2
        let v = digamma(c(0.5, 0.0)).unwrap();
        assert!((v.re + EULER_GAMMA + 2.0 * std::f64::consts::LN_2).abs() < 1e-13);
        // ψ(2) = 1 − γ
        let v = digamma(c(2.0, 0.0)).unwrap();
        assert!((v.re - (1.0 - EULER_GAMMA)).abs() < 1e-14);
    }

    /// Direct-summation oracle for ψ(1/2): −γ − 1/z + Σ z/(j(j+z)) with an
    /// integral tail bound, summed far enough that the tail is below 1e-11.
    #[test]
    fn digamma_half_direct_summation_oracle() {
        let z = 0.5f64;
        let n = 1_000_000u64;
        // tail ≈ ∫_{n+1/2}^∞ z/t² dt; sum smallest terms first
        let mut s = z / (n as f64 + 0.5);
        for j in (1..=n).rev() {
            let j = j as f64;
            s += z / (j * (j + z));
        }
        s += -EULER_GAMMA - 1.0 / z;
        let ours = digamma(c(z, 0.0)).unwrap().re;
        assert!((ours - s).abs() < 1e-10, "ours {ours} oracle {s}");
    }

    #[test]
    fn trigamma_known_values() {
        let pi2 = std::f64::consts::PI * std::f64::consts::PI;
        assert!((trigamma(c(1.0, 0.0)).unwrap().re - pi2 / 6.0).abs() < 1e-13);
        assert!((trigamma(c(0.5, 0.0)).unwrap().re - pi2 / 2.0).abs() < 1e-13);
        assert!((trigamma(c(2.0, 0.0)).unwrap().re - (pi2 / 6.0 - 1.0)).abs() < 1e-13);
    }

    /// Direct summation oracle for ψ′(1/2) = Σ 1/(j+1/2)².
    #[test]
    fn trigamma_half_direct_summation_oracle() {
        let mut s = 0.0;
        let n = 200_000u64;
        for j in (0..n).rev() {
            let d = j as f64 + 0.5;
            s += 1.0 / (d * d);
        }
        s += 1.0 / (n as f64); // ∫_n^∞ t^{-2} dt with the half offset
        let ours = trigamma(c(0.5, 0.0)).unwrap().re;
        assert!((ours - s).abs() < 1e-9, "ours {ours} oracle {s}");
    }

    #[test]
    fn recurrence_holds_for_complex_arguments() {
        let z = c(0.8, 2.3);
        let lhs = digamma(z + 1.0).unwrap();
        let rhs = digamma(z).unwrap() + z.inv();
        assert!((lhs - rhs).norm() < 1e-13);
        let lhs = trigamma(z + 1.0).unwrap();
        let rhs = trigamma(z).unwrap() - (z * z).inv();
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn poles_error() {
        assert!(digamma(c(0.0, 0.0)).is_err());
        assert!(trigamma(c(-2.0, 0.0)).is_err());
    }

    #[test]
    fn real_in_real_out() {
        assert_eq!(digamma(c(3.7, 0.0)).unwrap().im, 0.0);
        assert_eq!(trigamma(c(0.3, 0.0)).unwrap().im, 0.0);
    }
}
