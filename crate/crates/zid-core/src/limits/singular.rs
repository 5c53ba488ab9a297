//! The isolated singular term, the divergent-term data series behind the
//! on/off-circle figures, and the path angle κ.

use num_complex::Complex64;

use crate::error::{Error, Result};

const PI: f64 = std::f64::consts::PI;

fn at_limit_point(r: f64, phi: f64, m: u64, w: f64) -> bool {
    r == m as f64 + w + 0.5 && phi.abs() == PI
}

/// S(r, φ) = 2√a (−1)^m / (a + w + 1/2 + m), a = r e^{iφ}.
pub fn singular_term(r: f64, phi: f64, m: u64, w: f64) -> Result<Complex64> {
    if at_limit_point(r, phi, m, w) {
        return Err(Error::AtLimitPoint);
    }
    let a = Complex64::from_polar(r, phi);
    let msign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(2.0 * msign * a.sqrt() / (a + w + 0.5 + m as f64))
}

/// D_t, the indexed term of the w = 0 family written with the sign(sin φ)
/// factor:
/// sign(sin φ)·√(2r − 2r cos φ)·(−1)^m·r·sin φ / (2M² + 4Mr cos φ + 2r²),
/// M = m + 1/2.
pub fn divergent_term_dt(r: f64, phi: f64, m: u64) -> Result<f64> {
    let big_m = m as f64 + 0.5;
    if phi.abs() == PI && r == big_m {
        return Err(Error::AtLimitPoint);
    }
    let s = phi.sin();
    let sign = if s > 0.0 {
        1.0
    } else if s < 0.0 {
        -1.0
    } else {
        // sign(0) is the indeterminate X of the step function; the value
        // multiplies sin φ = 0, so the product is taken as 0 off the
        // limit point.
        0.0
    };
    let msign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let num = sign * (2.0 * r - 2.0 * r * phi.cos()).sqrt() * msign * r * s;
    let den = 2.0 * big_m * big_m + 4.0 * big_m * phi.cos() * r + 2.0 * r * r;
    Ok(num / den)
}

/// κ(q, α) = arg(−1 + q cos α + i q sin α), principal branch; κ(0, α) = +π
/// (the positive convention is fixed).
pub fn kappa(q: f64, alpha: f64) -> Result<f64> {
    if q < 0.0 {
        return Err(Error::Domain(format!("kappa requires q ≥ 0, got {q}")));
    }
    let x = -1.0 + q * alpha.cos();
    let y = q * alpha.sin();
    if x.abs() < 1e-14 && y.abs() < 1e-14 {
        return Err(Error::Degenerate(
            "q = 1, α = 0 makes the path angle arg(0) meaningless".into(),
        ));
    }
    Ok(y.atan2(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_at_origin_is_plus_pi() {
        assert_eq!(kappa(0.0, 0.3).unwrap(), PI);
        assert_eq!(kappa(0.0, -2.0).unwrap(), PI);
    }

    #[test]
    fn kappa_degenerate() {
        assert!(matches!(kappa(1.0, 0.0), Err(Error::Degenerate(_))));
    }

    #[test]
    fn kappa_general_point() {
        // arg(−1 + 0.5i) = π − arctan(0.5)
        let k = kappa(0.5, PI / 2.0).unwrap();
        assert!((k - (PI - 0.5f64.atan())).abs() < 1e-15);
    }

    #[test]
    fn singular_term_near_cut_angular() {
        // (r=0.5, φ=π−0.01, m=0, w=0): real part ≈ 4/(√2·0.01)
        let s = singular_term(0.5, PI - 0.01, 0, 0.0).unwrap();
        let expect = 4.0 / (2.0f64.sqrt() * 0.01);
        assert!((s.re - expect).abs() / expect < 0.01, "re = {}", s.re);
    }

    #[test]
    fn singular_term_near_cut_radial() {
        // (r=0.51, φ=π, m=0, w=0): imaginary part ≈ −√2/0.01
        let s = singular_term(0.51, PI, 0, 0.0).unwrap();
        let expect = -2.0f64.sqrt() / 0.01;
        assert!((s.im - expect).abs() / expect.abs() < 0.02, "im = {}", s.im);
    }

    #[test]
    fn singular_term_regular_at_nonexceptional() {
        // r = 1 is not exceptional for w = 0: finite, purely imaginary at φ=π
        let s = singular_term(1.0, PI, 0, 0.0).unwrap();
        assert!(s.re.abs() < 1e-12 && s.im.is_finite());
    }

    #[test]
    fn at_limit_point_errors() {
        assert!(matches!(
            singular_term(0.5, PI, 0, 0.0),
            Err(Error::AtLimitPoint)
        ));
        assert!(matches!(
            divergent_term_dt(0.5, PI, 0),
            Err(Error::AtLimitPoint)
        ));
    }

    #[test]
    fn dt_vanishes_at_phi_zero() {
        assert_eq!(divergent_term_dt(0.7, 0.0, 0).unwrap(), 0.0);
    }

    #[test]
    fn dt_off_circle_has_finite_limit() {
        let near = divergent_term_dt(0.45, PI - 1e-6, 0).unwrap();
        let further = divergent_term_dt(0.45, PI - 1e-3, 0).unwrap();
        assert!(near.abs() < 1.0 && (near - further).abs() < 1e-2);
    }
}
