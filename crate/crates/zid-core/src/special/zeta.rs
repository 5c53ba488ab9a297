//! Hurwitz zeta by Euler–Maclaurin summation, the alternating (eta)
//! functions, and Dirichlet beta in the η(s,1/2)/2^s normalization.

use num_complex::Complex64;

use crate::accel;
use crate::error::{Error, Result};

/// Bernoulli correction order, fixed.
const EM_ORDER: usize = 15;

// B_{2j} for j = 1..15
const BERN2J: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// (e^x − 1)/x for complex x, stable near 0.
fn expm1_over(x: Complex64) -> Complex64 {
    if x.norm() < 1e-4 {
        // 1 + x/2 + x²/6 + x³/24 + x⁴/120
        let mut s = Complex64::new(1.0, 0.0);
        let mut t = Complex64::new(1.0, 0.0);
        for k in 2..=6 {
            t = t * x / (k as f64);
            s += t;
        }
        s
    } else {
        (x.exp() - 1.0) / x
    }
}

/// ζ(s, a) − 1/(s−1): the entire part of the Hurwitz zeta function.
///
/// Euler–Maclaurin with the shift N chosen from |Im s| and the Bernoulli
/// correction of order 15. Valid for a > 0 and Re s > −25 or so; relative
/// accuracy ~1e-13 for |Im s| ≤ 100, 0 < a ≤ 10.
///
/// At s = 1 this equals −ψ(a).
pub fn zeta_minus_pole(s: Complex64, a: f64) -> Result<Complex64> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("hurwitz zeta requires a > 0, got {a}")));
    }
    let t_abs = s.im.abs();
    // shift so the Bernoulli tail ratio stays ≤ ~1/3 through order 2M
    let target = f64::max(20.0, (t_abs + 30.0) / 1.6);
    let n = ((target - a).ceil().max(1.0)) as usize;

    let mut sum = Complex64::new(0.0, 0.0);
    // smallest terms last in magnitude order is not critical here, but keep
    // the classic forward order for determinism
    for k in 0..n {
        sum += (-s * (k as f64 + a).ln()).exp();
    }
    let big = n as f64 + a;
    let log_big = big.ln();
    // [(N+a)^{1−s} − 1]/(s−1) = −L·(e^{(1−s)L} − 1)/((1−s)L)
    let x = (Complex64::new(1.0, 0.0) - s) * log_big;
    let pole_part = -log_big * expm1_over(x);
    let big_pow = (-s * log_big).exp(); // (N+a)^{−s}
    let mut total = sum + pole_part + 0.5 * big_pow;

    // Σ_{j=1}^{M} B_{2j}/(2j)! · (s)_{2j−1} · (N+a)^{−s−2j+1}
    let inv_big2 = 1.0 / (big * big);
    let mut poch = s; // (s)_1 = s
    let mut factorial = 2.0; // (2j)!
    let mut power = big_pow / big; // (N+a)^{−s−1}
    for j in 0..EM_ORDER {
        total += BERN2J[j] / factorial * poch * power;
        // advance to order j+2: multiply Pochhammer by (s+2j)(s+2j+1)
        let two_j = 2.0 * (j as f64 + 1.0);
        poch = poch * (s + (two_j - 1.0)) * (s + two_j);
        factorial *= (two_j + 1.0) * (two_j + 2.0);
        power *= inv_big2;
    }
    Ok(total)
}

/// Hurwitz zeta ζ(s, a) = Σ_{k≥0} (k+a)^{−s}.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    let sm1 = s - 1.0;
    if sm1.norm() == 0.0 {
        return Err(Error::Pole("ζ(s,a) pole at s = 1".into()));
    }
    Ok(zeta_minus_pole(s, a)? + sm1.inv())
}

/// Riemann zeta ζ(s) = ζ(s, 1).
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    hurwitz_zeta(s, 1.0)
}

/// ζ′(x) for real x ≠ 1 by complex-step differentiation (exact to O(h²)
/// with no subtractive cancellation; all operations above are analytic
/// in s).
pub fn zeta_prime(x: f64) -> Result<f64> {
    const H: f64 = 1e-100;
    let v = hurwitz_zeta(Complex64::new(x, H), 1.0)?;
    Ok(v.im / H)
}

/// Alternating Hurwitz zeta η(s, a) = Σ (−1)^k (k+a)^{−s}, entire in s,
/// computed through the split into even and odd parts:
/// η(s,a) = (ζ(s, a/2) − ζ(s, (a+1)/2)) / 2^s.
///
/// The ζ poles at s = 1 cancel exactly in the difference, so no special
/// casing is needed there.
pub fn hurwitz_eta(s: Complex64, a: f64) -> Result<Complex64> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("hurwitz eta requires a > 0, got {a}")));
    }
    let lo = zeta_minus_pole(s, 0.5 * a)?;
    let hi = zeta_minus_pole(s, 0.5 * (a + 1.0))?;
    let two_pow = (s * std::f64::consts::LN_2).exp();
    Ok((lo - hi) / two_pow)
}

/// Direct alternating-series route for η(s, a), accelerated. Cross-check
/// path, independent of the ζ-difference route.
pub fn eta_series_direct(s: Complex64, a: f64) -> Result<Complex64> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("eta series requires a > 0, got {a}")));
    }
    let term = |k: u64| {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sign * (-s * (k as f64 + a).ln()).exp()
    };
    let (v, _) = accel::levin_u_complex(term, 1e-15)?;
    Ok(v)
}

/// Dirichlet beta in this catalog's normalization: β(s) = η(s, 1/2)/2^s,
/// identical to Σ (−1)^j (2j+1)^{−s}.
pub fn dirichlet_beta(s: Complex64) -> Result<Complex64> {
    let two_pow = (s * std::f64::consts::LN_2).exp();
    Ok(hurwitz_eta(s, 0.5)? / two_pow)
}

/// Nielsen's beta function B(v) = η(1, v), v > 0.
pub fn nielsen_beta(v: f64) -> Result<f64> {
    if !(v > 0.0) {
        return Err(Error::Domain(format!("nielsen beta requires v > 0, got {v}")));
    }
    Ok(hurwitz_eta(Complex64::new(1.0, 0.0), v)?.re)
}

/// ζ(b+1, v) − 1/b, which tends to −ψ(v) as b → 0.
pub fn psi_limit_check(b: f64, v: f64) -> Result<f64> {
    if !(v > 0.0) {
        return Err(Error::Domain(format!("requires v > 0, got {v}")));
    }
    Ok(zeta_minus_pole(Complex64::new(1.0 + b, 0.0), v)?.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::digamma;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const PI: f64 = std::f64::consts::PI;
    const LN_2: f64 = std::f64::consts::LN_2;
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn zeta_two_is_pi_sq_over_six() {
        let v = hurwitz_zeta(c(2.0, 0.0), 1.0).unwrap();
        assert!((v.re - PI * PI / 6.0).abs() < 1e-13 && v.im == 0.0);
    }

    #[test]
    fn half_shift_identity() {
        // ζ(s, 1/2) = (2^s − 1) ζ(s) at s = 3
        let lhs = hurwitz_zeta(c(3.0, 0.0), 0.5).unwrap().re;
        let rhs = 7.0 * hurwitz_zeta(c(3.0, 0.0), 1.0).unwrap().re;
        assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn near_first_nontrivial_zero() {
        let v = hurwitz_zeta(c(0.5, 14.134725), 1.0).unwrap();
        assert!(v.norm() < 1e-5, "|ζ| = {}", v.norm());
        // cross-check against the alternating-series route:
        // ζ(s) = η(s,1)/(1 − 2^{1−s})
        let s = c(0.5, 14.134725);
        let eta = eta_series_direct(s, 1.0).unwrap();
        let denom = 1.0 - ((1.0 - s) * LN_2).exp();
        assert!((v - eta / denom).norm() < 1e-11);
    }

    #[test]
    fn eta_at_one() {
        let v = hurwitz_eta(c(1.0, 0.0), 1.0).unwrap();
        assert!((v.re - LN_2).abs() < 1e-14, "η(1) = {}", v.re);
    }

    #[test]
    fn eta_at_one_half_argument() {
        // η(1, 1/2) = π/2, by Levin-accelerated direct summation too
        let v = hurwitz_eta(c(1.0, 0.0), 0.5).unwrap();
        assert!((v.re - PI / 2.0).abs() < 1e-13);
        let d = eta_series_direct(c(1.0, 0.0), 0.5).unwrap();
        assert!((d.re - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn eta_reduces_to_dirichlet_eta() {
        // η(s, 1) = (1 − 2^{1−s}) ζ(s) at s = 2 + 0.5i
        let s = c(2.0, 0.5);
        let lhs = hurwitz_eta(s, 1.0).unwrap();
        let rhs = (Complex64::new(1.0, 0.0) - ((1.0 - s) * LN_2).exp())
            * hurwitz_zeta(s, 1.0).unwrap();
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn beta_values() {
        // β(1) = π/4 via the accelerated L-series oracle
        let direct: f64 = {
            let (v, _) = crate::accel::sum_alternating(
                |j| {
                    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                    sign / (2.0 * j as f64 + 1.0)
                },
                1e-15,
            )
            .unwrap();
            v
        };
        let b1 = dirichlet_beta(c(1.0, 0.0)).unwrap().re;
        assert!((b1 - PI / 4.0).abs() < 1e-13);
        assert!((b1 - direct).abs() < 1e-12);

        // definition consistency at s = 0.5
        let s = c(0.5, 0.0);
        let lhs = dirichlet_beta(s).unwrap();
        let rhs = hurwitz_eta(s, 0.5).unwrap() / 2f64.sqrt();
        assert!((lhs - rhs).norm() < 1e-14);

        // conventional L-series oracle at s = 0.5 + 2i, Levin-accelerated
        let s = c(0.5, 2.0);
        let (oracle, _) = crate::accel::sum_alternating_complex(
            |j| {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * (-s * (2.0 * j as f64 + 1.0).ln()).exp()
            },
            1e-15,
        )
        .unwrap();
        let ours = dirichlet_beta(s).unwrap();
        assert!((ours - oracle).norm() < 1e-11, "{ours} vs {oracle}");
    }

    #[test]
    fn nielsen_beta_values() {
        assert!((nielsen_beta(1.0).unwrap() - LN_2).abs() < 1e-14);
        assert!((nielsen_beta(0.5).unwrap() - PI / 2.0).abs() < 1e-13);
        // η(1, a+1) = 1/a − η(1, a) gives η(1,2) = 1 − ln 2
        assert!((nielsen_beta(2.0).unwrap() - (1.0 - LN_2)).abs() < 1e-13);
        assert!(nielsen_beta(-1.0).is_err());
    }

    #[test]
    fn psi_limit_behaviour() {
        // b → 0 limit is −ψ(v)
        let v = psi_limit_check(1e-6, 1.0).unwrap();
        assert!((v - EULER_GAMMA).abs() < 1e-5);
        let v = psi_limit_check(1e-6, 2.0).unwrap();
        assert!((v - (EULER_GAMMA - 1.0)).abs() < 1e-5);
        // Richardson extrapolation in b at v = 0.75: two evaluations
        // f(b) and f(b/2) combined as 2 f(b/2) − f(b) kill the O(b) term
        let v0 = 0.75;
        let f1 = psi_limit_check(1e-4, v0).unwrap();
        let f2 = psi_limit_check(5e-5, v0).unwrap();
        let extrap = 2.0 * f2 - f1;
        let target = -digamma(c(v0, 0.0)).unwrap().re;
        assert!((extrap - target).abs() < 1e-8);
        assert!((f1 - target).abs() < 1e-3);
    }

    #[test]
    fn forward_recurrence() {
        // ζ(s,a) = a^{−s} + ζ(s, a+1)
        for &(sig, t) in &[(0.25, 0.0), (0.5, 5.0), (0.75, 20.0)] {
            for &a in &[0.5, 1.0, 1.7] {
                let s = c(sig, t);
                let lhs = hurwitz_zeta(s, a).unwrap();
                let rhs = (-s * a.ln()).exp() + hurwitz_zeta(s, a + 1.0).unwrap();
                assert!((lhs - rhs).norm() < 1e-12, "recurrence at s={s}, a={a}");
            }
        }
    }

    #[test]
    fn zeta_minus_pole_at_one_is_neg_digamma() {
        for &a in &[0.3, 1.0, 2.5] {
            let z = zeta_minus_pole(c(1.0, 0.0), a).unwrap();
            let d = digamma(c(a, 0.0)).unwrap();
            assert!((z + d).norm() < 1e-12, "a = {a}");
        }
    }

    #[test]
    fn domain_and_pole_errors() {
        assert!(hurwitz_zeta(c(2.0, 0.0), -1.0).is_err());
        assert!(hurwitz_zeta(c(2.0, 0.0), 0.0).is_err());
        assert!(matches!(
            hurwitz_zeta(c(1.0, 0.0), 1.0),
            Err(Error::Pole(_))
        ));
        assert!(hurwitz_eta(c(1.0, 0.0), -0.5).is_err());
    }

    #[test]
    fn large_imaginary_part_against_eta_route() {
        // ζ-difference vs direct alternating summation at t = 100
        let s = c(0.5, 100.0);
        let a = 1.7;
        let lhs = hurwitz_eta(s, a).unwrap();
        let rhs = eta_series_direct(s, a).unwrap();
        assert!((lhs - rhs).norm() < 1e-10, "diff {:.2e}", (lhs - rhs).norm());
    }

    #[test]
    fn zeta_prime_known_value() {
        // ζ′(0) = −ln(2π)/2
        let v = zeta_prime(0.0).unwrap();
        let expect = -0.5 * (2.0 * PI).ln();
        assert!((v - expect).abs() < 1e-12, "ζ′(0) = {v}");
    }
}
