//! Parameter-derivative helpers: Richardson-extrapolated central
//! differences, Cauchy-circle Taylor coefficients, and small least-squares
//! fits used by the moment identities and the pole-coefficient machinery.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Central finite difference of the given order (1, 2 or 4) with one
/// Richardson step. Returns (derivative, error estimate).
pub fn derivative_wrt_parameter(
    f: &mut impl FnMut(f64) -> Result<f64>,
    x0: f64,
    order: u32,
) -> Result<(f64, f64)> {
    let scale = x0.abs().max(1.0);
    let (h, stencil): (f64, fn(&mut dyn FnMut(f64) -> Result<f64>, f64, f64) -> Result<f64>) =
        match order {
            1 => (1e-4 * scale, |f, x0, h| {
                Ok((f(x0 + h)? - f(x0 - h)?) / (2.0 * h))
            }),
            2 => (1e-3 * scale, |f, x0, h| {
                Ok((f(x0 + h)? - 2.0 * f(x0)? + f(x0 - h)?) / (h * h))
            }),
            4 => (3e-2 * scale, |f, x0, h| {
                Ok((f(x0 - 2.0 * h)? - 4.0 * f(x0 - h)? + 6.0 * f(x0)? - 4.0 * f(x0 + h)?
                    + f(x0 + 2.0 * h)?)
                    / h.powi(4))
            }),
            _ => {
                return Err(Error::Domain(format!(
                    "derivative order {order} not supported (1, 2 or 4)"
                )))
            }
        };
    let coarse = stencil(f, x0, h)?;
    let fine = stencil(f, x0, h / 2.0)?;
    // central stencils have O(h²) leading error: Richardson weight 4/3
    let extrapolated = (4.0 * fine - coarse) / 3.0;
    Ok((extrapolated, (extrapolated - fine).abs()))
}

/// Taylor coefficients c_0..c_{n_max} of an analytic function around 0 by
/// trapezoidal discretization of the Cauchy integral on a circle of the
/// given radius. Spectrally accurate when the radius is safely inside the
/// nearest singularity.
pub fn taylor_coeffs(
    f: &mut impl FnMut(Complex64) -> Result<Complex64>,
    radius: f64,
    n_max: usize,
) -> Result<Vec<Complex64>> {
    const N: usize = 32;
    let mut samples = Vec::with_capacity(N);
    for k in 0..N {
        let phase = 2.0 * std::f64::consts::PI * k as f64 / N as f64;
        let z = Complex64::from_polar(radius, phase);
        samples.push(f(z)?);
    }
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, s) in samples.iter().enumerate() {
            let phase = -2.0 * std::f64::consts::PI * (k * n) as f64 / N as f64;
            acc += s * Complex64::from_polar(1.0, phase);
        }
        out.push(acc / (N as f64 * radius.powi(n as i32)));
    }
    Ok(out)
}

/// Least-squares fit of y ≈ c/x + d over the sample points.
/// Returns (c, d, rms residual).
pub fn fit_pole_linear(steps: &[f64], values: &[f64]) -> (f64, f64, f64) {
    let n = steps.len() as f64;
    let xs: Vec<f64> = steps.iter().map(|s| 1.0 / s).collect();
    let sx: f64 = xs.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sy: f64 = values.iter().sum();
    let sxy: f64 = xs.iter().zip(values).map(|(x, y)| x * y).sum();
    let det = n * sxx - sx * sx;
    let c = (n * sxy - sx * sy) / det;
    let d = (sxx * sy - sx * sxy) / det;
    let mut rss = 0.0;
    for (x, y) in xs.iter().zip(values) {
        let r = y - (c * x + d);
        rss += r * r;
    }
    (c, d, (rss / n).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_derivative_of_cube() {
        let mut f = |x: f64| Ok(x * x * x);
        let (d, _) = derivative_wrt_parameter(&mut f, 1.0, 1).unwrap();
        assert!((d - 3.0).abs() < 1e-9, "got {d}");
    }

    #[test]
    fn second_derivative_of_sin_at_zero() {
        let mut f = |x: f64| Ok(x.sin());
        let (d, _) = derivative_wrt_parameter(&mut f, 0.0, 2).unwrap();
        assert!(d.abs() < 1e-9, "got {d}");
    }

    #[test]
    fn fourth_derivative_of_cos() {
        let mut f = |x: f64| Ok(x.cos());
        let (d, _) = derivative_wrt_parameter(&mut f, 0.0, 4).unwrap();
        assert!((d - 1.0).abs() < 1e-6, "got {d}");
    }

    #[test]
    fn cauchy_coefficients_of_exp() {
        let mut f = |z: Complex64| Ok(z.exp());
        let c = taylor_coeffs(&mut f, 0.5, 6).unwrap();
        let mut fact = 1.0;
        for (n, cn) in c.iter().enumerate() {
            if n > 0 {
                fact *= n as f64;
            }
            assert!(
                (cn - 1.0 / fact).norm() < 1e-12,
                "c_{n} = {cn}, expect {}",
                1.0 / fact
            );
        }
    }

    #[test]
    fn pole_fit_recovers_coefficient() {
        let steps: Vec<f64> = (0..10).map(|k| 10f64.powf(-1.0 - k as f64 / 2.0)).collect();
        let values: Vec<f64> = steps.iter().map(|s| -2.5 / s + 0.7 + 0.1 * s).collect();
        let (c, d, _) = fit_pole_linear(&steps, &values);
        assert!((c + 2.5).abs() < 1e-6, "c = {c}");
        assert!((d - 0.7).abs() < 0.02, "d = {d}");
    }
}
