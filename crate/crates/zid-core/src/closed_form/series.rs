//! The alternating j-series families: the general real/imaginary pair
//! behind the cosh/sinh-kernel identities, the shrinking-disk path series,
//! the θ-shifted principal-value pair, and the digamma component series.

use num_complex::Complex64;

use crate::accel;
use crate::error::{Error, Result};

const PI: f64 = std::f64::consts::PI;

/// Series selector for [`AlternatingSeriesSpec`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SeriesVariant {
    /// Real-part series pair member (cosh kernel side).
    HrSeries,
    /// Imaginary-part series pair member (sinh kernel side).
    HiSeries,
    /// Shrinking-disk path series, imaginary side.
    C1IcpSeries,
    /// Shrinking-disk path series, real side.
    C1RdpSeries,
    /// Digamma component series, real part.
    PsRSeries,
    /// Digamma component series, imaginary part.
    PsISeries,
}

/// Parameters of one alternating series evaluation.
#[derive(Clone, Copy, Debug)]
pub struct AlternatingSeriesSpec {
    pub variant: SeriesVariant,
    pub r: f64,
    pub phi: f64,
    pub w: f64,
    pub sigma: f64,
    /// The j ≠ m exclusion for exceptional-point machinery.
    pub excluded_index: Option<u64>,
}

impl AlternatingSeriesSpec {
    pub fn hr(r: f64, phi: f64, w: f64, sigma: f64) -> Self {
        AlternatingSeriesSpec {
            variant: SeriesVariant::HrSeries,
            r,
            phi,
            w,
            sigma,
            excluded_index: None,
        }
    }
}

/// Index of the series term whose denominator vanishes, if the parameters
/// sit at an exceptional combination (|φ| = π and r − w − 1/2 = m ≥ 0).
pub fn singular_index(r: f64, phi: f64, w: f64) -> Option<u64> {
    if (phi.abs() - PI).abs() > 1e-12 {
        return None;
    }
    let m = r - w - 0.5;
    if m < -1e-9 {
        return None;
    }
    let rounded = m.round();
    if (m - rounded).abs() < 1e-9 {
        Some(rounded as u64)
    } else {
        None
    }
}

/// Shared denominator 2r(j+w+1/2)cos φ + r² + (j+w+1/2)².
#[inline]
fn denom(j: f64, r: f64, cos_phi: f64, w: f64) -> f64 {
    let u = j + w + 0.5;
    2.0 * r * u * cos_phi + r * r + u * u
}

fn check_singular(spec: &AlternatingSeriesSpec) -> Result<()> {
    if let Some(m) = singular_index(spec.r, spec.phi, spec.w) {
        if spec.excluded_index != Some(m) {
            return Err(Error::SingularTerm { index: m });
        }
    }
    Ok(())
}

/// Sum Σ_{j≥0, j≠excl} (−1)^j t(j) where t carries no sign.
fn sum_excluding(
    excl: Option<u64>,
    t: impl Fn(f64) -> f64,
    rel_tol: f64,
) -> Result<f64> {
    match excl {
        None => {
            let (v, _) = accel::sum_alternating(
                |j| (if j % 2 == 0 { 1.0 } else { -1.0 }) * t(j as f64),
                rel_tol,
            )?;
            Ok(v)
        }
        Some(m) => {
            // explicit head through the excluded index, accelerated tail
            let mut head = 0.0;
            for j in 0..m {
                head += (if j % 2 == 0 { 1.0 } else { -1.0 }) * t(j as f64);
            }
            let base = m + 1;
            let base_sign = if base % 2 == 0 { 1.0 } else { -1.0 };
            let (tail, _) = accel::sum_alternating(
                |k| (if k % 2 == 0 { 1.0 } else { -1.0 }) * t((base + k) as f64),
                rel_tol,
            )?;
            Ok(head + base_sign * tail)
        }
    }
}

/// The general real/imaginary series pair for arbitrary σ ∈ (0,1):
///
/// value_R = r^{1−σ} ( r sin φ sin(φ(σ−1)) Σ₁ − cos(φ(σ−1)) Σ₂ )
/// value_I = r^{1−σ} ( r cos(φ(σ−1)) sin φ Σ₁ + sin(φ(σ−1)) Σ₂ )
///
/// with Σ₁ = Σ (−1)^j / D_j, Σ₂ = Σ (−1)^j (r cos φ + j + w + 1/2)/D_j and
/// D_j the shared quadratic denominator.
///
/// Orientation: at σ = 1/2, value_R equals the integral of
/// (sin(v ln r)·η_I − cos(v ln r)·η_R)·cosh(φv)/cosh(πv), i.e. the negative
/// of the Re(r^{iv}η)-weighted integral, and value_I equals the integral of
/// (cos(v ln r)·η_I + sin(v ln r)·η_R)·sinh(φv)/cosh(πv), which is the
/// Im(r^{iv}η)-weighted one. value_R is even in φ, value_I odd, so each
/// identity is invariant under φ ↔ −φ.
pub fn hr_hi_series(spec: &AlternatingSeriesSpec) -> Result<(f64, f64)> {
    check_singular(spec)?;
    let (r, phi, w, sigma) = (spec.r, spec.phi, spec.w, spec.sigma);
    let cos_phi = phi.cos();
    let s1 = sum_excluding(spec.excluded_index, |j| 1.0 / denom(j, r, cos_phi, w), 1e-15)?;
    let s2 = sum_excluding(
        spec.excluded_index,
        |j| (r * cos_phi + j + w + 0.5) / denom(j, r, cos_phi, w),
        1e-15,
    )?;
    let pref = r.powf(1.0 - sigma);
    let ang = phi * (sigma - 1.0);
    let hr = pref * (r * phi.sin() * ang.sin() * s1 - ang.cos() * s2);
    let hi = pref * (r * ang.cos() * phi.sin() * s1 + ang.sin() * s2);
    Ok((hr, hi))
}

/// Components of ψ(r cos φ + w + 1/2 + i r sin φ) through the series
/// ψ(z) = −γ − 1/z + Σ_{j≥1} (1/j − 1/(j+z)), with an Euler–Maclaurin
/// tail after 80 explicit terms. Independent of the asymptotic-series
/// digamma implementation.
pub fn psi_components(r: f64, phi: f64, w: f64) -> Result<(f64, f64)> {
    let z = Complex64::new(r * phi.cos() + w + 0.5, r * phi.sin());
    psi_series_at(z)
}

/// Series-route digamma for arbitrary complex argument.
pub fn psi_series_at(z: Complex64) -> Result<(f64, f64)> {
    if z.im.abs() < 1e-12 && z.re <= 1e-12 && (z.re - z.re.round()).abs() < 1e-9 {
        return Err(Error::SingularTerm {
            index: (-z.re.round()) as u64,
        });
    }
    const N: u64 = 80;
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;
    let mut acc = Complex64::new(-EULER_GAMMA, 0.0) - z.inv();
    for j in 1..=N {
        let j = j as f64;
        acc += 1.0 / j - (z + j).inv();
    }
    // Σ_{j=N+1}^∞ f(j) = ∫_a^∞ f + f(a)/2 − f′(a)/12 + f‴(a)/720 − f⁗′(a)/30240,
    // a = N+1, f(t) = 1/t − 1/(t+z); all derivatives in closed form.
    let a = Complex64::new((N + 1) as f64, 0.0);
    let integral = ((a + z) / a).ln();
    let f0 = a.inv() - (a + z).inv();
    let d1 = -(a * a).inv() + ((a + z) * (a + z)).inv();
    let p3 = |x: Complex64| {
        let x2 = x * x;
        (x2 * x2).inv()
    };
    let d3 = -6.0 * p3(a) + 6.0 * p3(a + z);
    let p5 = |x: Complex64| {
        let x2 = x * x;
        (x2 * x2 * x2).inv()
    };
    let d5 = -120.0 * p5(a) + 120.0 * p5(a + z);
    acc += integral + 0.5 * f0 - d1 / 12.0 + d3 / 720.0 - d5 / 30240.0;
    Ok((acc.re, acc.im))
}

/// Pole-free combined path value and the two raw sums of the
/// shrinking-disk series at (q, α) around the exceptional point
/// a = −M (M = m + w + 1/2 with w ∈ {0, 1/2}).
#[derive(Clone, Copy, Debug)]
pub struct DiskSeries {
    /// Σ_{j≠m} (−1)^j M q sin α / ((j−m+Mq cos α)² + M²q² sin²α)
    pub icp_sum: f64,
    /// Σ_{j≠m} (−1)^j (j−m+Mq cos α) / ((j−m+Mq cos α)² + M²q² sin²α)
    pub rdp_sum: f64,
    /// (−1)^m sin α/(qM), +∞-bearing pole term of the imaginary side
    pub icp_pole: f64,
    /// (−1)^m cos α/(qM)
    pub rdp_pole: f64,
}

/// Evaluate the disk-path series pair. `q = 0` is allowed (the sums are
/// regular there); the pole terms are then infinite and must not be used.
pub fn disk_series(m: u64, big_m: f64, q: f64, alpha: f64) -> Result<DiskSeries> {
    let mq_cos = big_m * q * alpha.cos();
    let mq_sin = big_m * q * alpha.sin();
    let num = |j: f64| j - m as f64 + mq_cos;
    let den = |j: f64| {
        let u = num(j);
        u * u + mq_sin * mq_sin
    };
    // guard against an unexpected vanishing denominator at an included index
    for j in 0..=(2 * m + 4) {
        if j != m && den(j as f64) < 1e-28 {
            return Err(Error::SingularTerm { index: j });
        }
    }
    let icp_sum = sum_excluding(Some(m), |j| mq_sin / den(j), 1e-15)?;
    let rdp_sum = sum_excluding(Some(m), |j| num(j) / den(j), 1e-15)?;
    let msign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(DiskSeries {
        icp_sum,
        rdp_sum,
        icp_pole: msign * alpha.sin() / (q * big_m),
        rdp_pole: msign * alpha.cos() / (q * big_m),
    })
}

/// Q ≡ 1 − 2q cos α + q²: squared distance from 1 to q e^{iα}.
pub fn q_factor(q: f64, alpha: f64) -> f64 {
    1.0 - 2.0 * q * alpha.cos() + q * q
}

/// θ-shifted series, single-sided variant. Complex θ is supported so that
/// Taylor coefficients can be extracted on a circle around θ = 0.
///
/// value = √M (e^θ − 1)/2 · Σ_{j≠m} (−1)^j (j+1+e^θ M)/((j−m)(j+1−M e^{2θ}))
///         − (−1)^m e^θ/(2√M (e^{2θ} − 1)),   M = m + 1.
pub fn h2a_series(m: u64, theta: Complex64) -> Result<Complex64> {
    let big_m = (m + 1) as f64;
    let e1 = theta.exp();
    let e2 = (2.0 * theta).exp();
    let msign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let term = |j: f64| (j + 1.0 + e1 * big_m) / ((j - m as f64) * (j + 1.0 - big_m * e2));
    let sum = sum_excluding_complex(m, term, 1e-15)?;
    let pole = msign * e1 / (2.0 * big_m.sqrt() * (e2 - 1.0));
    Ok(big_m.sqrt() * (e1 - 1.0) / 2.0 * sum - pole)
}

/// θ-shifted series, two-sided (principal-value analogue) variant.
///
/// value = √M (e^{2θ}−1) e^θ/2 · Σ_{j≠m} (−1)^j (j+m+2)/(((j+1)e^{2θ}−M)(j+1−M e^{2θ}))
///         − (−1)^m e^θ/(√M (e^{2θ} − 1)).
pub fn h2b_series(m: u64, theta: Complex64) -> Result<Complex64> {
    let big_m = (m + 1) as f64;
    let e1 = theta.exp();
    let e2 = (2.0 * theta).exp();
    let msign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let term = |j: f64| {
        Complex64::new(j + m as f64 + 2.0, 0.0)
            / (((j + 1.0) * e2 - big_m) * (j + 1.0 - big_m * e2))
    };
    let sum = sum_excluding_complex(m, term, 1e-15)?;
    let pole = msign * e1 / (big_m.sqrt() * (e2 - 1.0));
    Ok(big_m.sqrt() * (e2 - 1.0) * e1 / 2.0 * sum - pole)
}

/// The pole-free combination of the two θ-series whose Taylor expansion in
/// θ generates the even tanh-kernel moments.
pub fn hab2_combination(m: u64, theta: Complex64) -> Result<Complex64> {
    Ok(h2b_series(m, theta)? / 2.0 - h2a_series(m, theta)?)
}

fn sum_excluding_complex(
    m: u64,
    t: impl Fn(f64) -> Complex64,
    rel_tol: f64,
) -> Result<Complex64> {
    let mut head = Complex64::new(0.0, 0.0);
    for j in 0..m {
        head += (if j % 2 == 0 { 1.0 } else { -1.0 }) * t(j as f64);
    }
    let base = m + 1;
    let base_sign = if base % 2 == 0 { 1.0 } else { -1.0 };
    let (tail, _) = accel::sum_alternating_complex(
        |k| (if k % 2 == 0 { 1.0 } else { -1.0 }) * t((base + k) as f64),
        rel_tol,
    )?;
    Ok(head + base_sign * tail)
}

/// Evaluate one [`AlternatingSeriesSpec`]. The Hr/Hi variants return their
/// respective pair member; the path and digamma variants are accessible
/// through their dedicated entry points as well.
pub fn evaluate_series(spec: &AlternatingSeriesSpec) -> Result<f64> {
    match spec.variant {
        SeriesVariant::HrSeries => Ok(hr_hi_series(spec)?.0),
        SeriesVariant::HiSeries => Ok(hr_hi_series(spec)?.1),
        SeriesVariant::PsRSeries => Ok(psi_components(spec.r, spec.phi, spec.w)?.0),
        SeriesVariant::PsISeries => Ok(psi_components(spec.r, spec.phi, spec.w)?.1),
        SeriesVariant::C1IcpSeries | SeriesVariant::C1RdpSeries => Err(Error::Domain(
            "disk-path series require explicit (m, M, q, α); use disk_series".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::digamma;

    const LN_2: f64 = std::f64::consts::LN_2;

    #[test]
    fn hr_at_phi_zero_matches_eta_identity() {
        // (r=1, φ=0, w=1/2, σ=1/2): the Re-weighted integral is
        // η(1, 2) = 1 − ln 2, so value_R = −η(1,2); value_I = 0
        let spec = AlternatingSeriesSpec::hr(1.0, 0.0, 0.5, 0.5);
        let (hr, hi) = hr_hi_series(&spec).unwrap();
        assert!((hr + (1.0 - LN_2)).abs() < 1e-12, "hr = {hr}");
        assert_eq!(hi, 0.0);
    }

    #[test]
    fn hr_at_half_matches_w0_form() {
        // (r=1/2, φ=0, w=0): Re-weighted integral √r η(1, 1/2+r) = ln2/√2
        let spec = AlternatingSeriesSpec::hr(0.5, 0.0, 0.0, 0.5);
        let (hr, _) = hr_hi_series(&spec).unwrap();
        assert!(
            (hr + LN_2 / 2f64.sqrt()).abs() < 1e-12,
            "hr = {hr}, expect {}",
            -LN_2 / 2f64.sqrt()
        );
    }

    #[test]
    fn phi_symmetry() {
        // value_R even in φ, value_I odd: each identity is φ ↔ −φ invariant
        for &(r, phi, w) in &[(0.7, 1.3, 0.0), (1.4, 2.8, 0.5), (2.2, 0.4, 0.25)] {
            let a = hr_hi_series(&AlternatingSeriesSpec::hr(r, phi, w, 0.5)).unwrap();
            let b = hr_hi_series(&AlternatingSeriesSpec::hr(r, -phi, w, 0.5)).unwrap();
            assert!((a.0 - b.0).abs() < 1e-14, "even part broke");
            assert!((a.1 + b.1).abs() < 1e-14, "odd part broke");
        }
    }

    #[test]
    fn singular_term_detection() {
        // r − w − 1/2 = 1 at φ = π
        let spec = AlternatingSeriesSpec::hr(1.5, PI, 0.0, 0.5);
        assert!(matches!(
            hr_hi_series(&spec),
            Err(Error::SingularTerm { index: 1 })
        ));
        // excluding the offending index makes it evaluable
        let spec = AlternatingSeriesSpec {
            excluded_index: Some(1),
            ..spec
        };
        assert!(hr_hi_series(&spec).is_ok());
    }

    #[test]
    fn psi_components_match_digamma() {
        for &(r, phi, w) in &[(1.0, 0.5 * PI, 0.0), (2.0, 2.5, 0.0), (1.0, 0.0, 0.5)] {
            let (pr, pi_) = psi_components(r, phi, w).unwrap();
            let z = Complex64::new(r * phi.cos() + w + 0.5, r * phi.sin());
            let d = digamma(z).unwrap();
            assert!(
                (pr - d.re).abs() < 1e-12 && (pi_ - d.im).abs() < 1e-12,
                "({r},{phi},{w}): series ({pr},{pi_}) vs digamma {d}"
            );
        }
        // (r=1, φ=0, w=1/2) → (ψ(2), 0) = (1 − γ, 0)
        let (pr, pi_) = psi_components(1.0, 0.0, 0.5).unwrap();
        assert!((pr - (1.0 - 0.5772156649015329)).abs() < 1e-12);
        assert!(pi_.abs() < 1e-15);
    }

    #[test]
    fn disk_series_q_zero_value() {
        // Σ_{j≠m} (−1)^j (j−m)/(j−m)² = −η(1, m+1)
        for m in 0..3u64 {
            let ds = disk_series(m, (m as f64) + 0.5, 0.0, 1.0).unwrap();
            let eta = crate::special::nielsen_beta(m as f64 + 1.0).unwrap();
            assert!(
                (ds.rdp_sum + eta).abs() < 1e-12,
                "m={m}: sum {} vs −η(1,m+1) {}",
                ds.rdp_sum,
                -eta
            );
            assert_eq!(ds.icp_sum, 0.0);
        }
    }

    #[test]
    fn theta_series_pole_ratio_is_two() {
        // h2a and h2b diverge at θ → 0 with pole coefficients in ratio 2
        let m = 0;
        let a1 = h2a_series(m, Complex64::new(1e-4, 0.0)).unwrap().re;
        let a2 = h2a_series(m, Complex64::new(2e-4, 0.0)).unwrap().re;
        let b1 = h2b_series(m, Complex64::new(1e-4, 0.0)).unwrap().re;
        let b2 = h2b_series(m, Complex64::new(2e-4, 0.0)).unwrap().re;
        // c/θ dominates: c ≈ (f(θ1) − f(θ2))/(1/θ1 − 1/θ2)
        let ca = (a1 - a2) / (1e4 - 0.5e4);
        let cb = (b1 - b2) / (1e4 - 0.5e4);
        assert!((cb / ca - 2.0).abs() < 1e-3, "ratio {}", cb / ca);
    }

    #[test]
    fn hab2_combination_is_pole_free_and_even() {
        let f = |t: f64| hab2_combination(0, Complex64::new(t, 0.0)).unwrap().re;
        let v1 = f(0.05);
        let v2 = f(-0.05);
        assert!((v1 - v2).abs() < 1e-11, "{v1} vs {v2}");
        // quadratic smallness near 0
        assert!(v1.abs() < 0.02);
    }
}
