//! Named constants: eager mathematical constants plus integral-defined
//! constants computed once through the quadrature layer and cached.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::Result;
use crate::quad::{
    integrate_finite, integrate_powerlaw, integrate_semi_infinite, DecayClass, QuadOptions,
};
pub use crate::quad::PrecisionMode;

use super::{digamma, dirichlet_beta, hurwitz_eta, nielsen_beta, riemann_zeta};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;
/// First Stieltjes constant γ(1).
pub const STIELTJES_1: f64 = -0.072_815_845_483_676_724_86;
/// ζ(3).
pub const ZETA_3: f64 = 1.202_056_903_159_594_285_4;
/// ζ(5).
pub const ZETA_5: f64 = 1.036_927_755_143_369_926_3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstantName {
    GammaEuler,
    Stieltjes1,
    Ln2,
    Pi,
    Zeta3,
    Zeta5,
    /// ∫_{1/2}^{1} ψ²(v) dv
    H,
    /// ∫_0^∞ β_I(1/2+iv) e^{−πv}/cosh(πv) dv
    B,
    /// ∫_0^∞ η_I(1/2+iv) e^{−πv}/cosh(πv) dv
    Z0,
    /// √2 ∫_0^∞ (cos(v ln 2) − √2) ζ_I(1/2+iv) e^{−πv}/cosh(πv) dv
    Z1,
    /// √2 ∫_0^∞ sin(v ln 2) ζ_R(1/2+iv) e^{−πv}/cosh(πv) dv
    Z2,
    /// ∫_{1/2}^∞ η(1,v)² dv (Nielsen-beta square moment)
    NbSqFromHalf,
    /// ∫_{1}^∞ η(1,v)² dv
    NbSqFromOne,
}

impl ConstantName {
    pub fn label(&self) -> &'static str {
        match self {
            ConstantName::GammaEuler => "gamma_euler",
            ConstantName::Stieltjes1 => "stieltjes_1",
            ConstantName::Ln2 => "ln2",
            ConstantName::Pi => "pi",
            ConstantName::Zeta3 => "zeta3",
            ConstantName::Zeta5 => "zeta5",
            ConstantName::H => "H",
            ConstantName::B => "B",
            ConstantName::Z0 => "Z0",
            ConstantName::Z1 => "Z1",
            ConstantName::Z2 => "Z2",
            ConstantName::NbSqFromHalf => "nb_sq_from_half",
            ConstantName::NbSqFromOne => "nb_sq_from_one",
        }
    }
}

/// Registry of named constants. Lazy entries are evaluated once through the
/// quadrature oracle registered at construction (the precision mode) and
/// cached; repeated reads return bit-identical values.
pub struct ConstantRegistry {
    mode: PrecisionMode,
    h: OnceLock<f64>,
    b: OnceLock<f64>,
    z0: OnceLock<f64>,
    z1: OnceLock<f64>,
    z2: OnceLock<f64>,
    nb_half: OnceLock<f64>,
    nb_one: OnceLock<f64>,
}

impl ConstantRegistry {
    pub fn new(mode: PrecisionMode) -> Self {
        ConstantRegistry {
            mode,
            h: OnceLock::new(),
            b: OnceLock::new(),
            z0: OnceLock::new(),
            z1: OnceLock::new(),
            z2: OnceLock::new(),
            nb_half: OnceLock::new(),
            nb_one: OnceLock::new(),
        }
    }

    pub fn mode(&self) -> PrecisionMode {
        self.mode
    }

    fn opts(&self) -> QuadOptions {
        QuadOptions {
            tol: 1e-14,
            mode: self.mode,
            singular_at_origin: false,
        }
    }

    /// Read a constant, computing and caching lazy entries on first use.
    /// Quadrature failure in a lazy entry is a programming error in this
    /// crate's own integrands, hence the unwrap-style propagation.
    pub fn get(&self, name: ConstantName) -> Result<f64> {
        Ok(match name {
            ConstantName::GammaEuler => EULER_GAMMA,
            ConstantName::Stieltjes1 => STIELTJES_1,
            ConstantName::Ln2 => std::f64::consts::LN_2,
            ConstantName::Pi => std::f64::consts::PI,
            ConstantName::Zeta3 => ZETA_3,
            ConstantName::Zeta5 => ZETA_5,
            ConstantName::H => *get_or_try(&self.h, || self.compute_h())?,
            ConstantName::B => *get_or_try(&self.b, || self.compute_b())?,
            ConstantName::Z0 => *get_or_try(&self.z0, || self.compute_z(0))?,
            ConstantName::Z1 => *get_or_try(&self.z1, || self.compute_z(1))?,
            ConstantName::Z2 => *get_or_try(&self.z2, || self.compute_z(2))?,
            ConstantName::NbSqFromHalf => *get_or_try(&self.nb_half, || self.compute_nb(0.5))?,
            ConstantName::NbSqFromOne => *get_or_try(&self.nb_one, || self.compute_nb(1.0))?,
        })
    }

    fn compute_h(&self) -> Result<f64> {
        let mut f = |v: f64| {
            let p = digamma(Complex64::new(v, 0.0))?.re;
            Ok(p * p)
        };
        Ok(integrate_finite(&mut f, 0.5, 1.0, &self.opts())?.value)
    }

    fn compute_b(&self) -> Result<f64> {
        let pi = std::f64::consts::PI;
        let mut f = |v: f64| {
            let bi = dirichlet_beta(Complex64::new(0.5, v))?.im;
            Ok(bi * (-pi * v).exp() / (pi * v).cosh())
        };
        Ok(integrate_semi_infinite(&mut f, DecayClass::ExpSech, &self.opts())?.value)
    }

    fn compute_z(&self, which: u8) -> Result<f64> {
        let pi = std::f64::consts::PI;
        let ln2 = std::f64::consts::LN_2;
        let rt2 = std::f64::consts::SQRT_2;
        let mut f = |v: f64| -> Result<f64> {
            let kernel = (-pi * v).exp() / (pi * v).cosh();
            Ok(match which {
                0 => hurwitz_eta(Complex64::new(0.5, v), 1.0)?.im * kernel,
                1 => {
                    let zi = riemann_zeta(Complex64::new(0.5, v))?.im;
                    rt2 * ((v * ln2).cos() - rt2) * zi * kernel
                }
                _ => {
                    let zr = riemann_zeta(Complex64::new(0.5, v))?.re;
                    rt2 * (v * ln2).sin() * zr * kernel
                }
            })
        };
        Ok(integrate_semi_infinite(&mut f, DecayClass::ExpSech, &self.opts())?.value)
    }

    fn compute_nb(&self, from: f64) -> Result<f64> {
        // ∫_from^∞ B(v)² dv with B(v)² ~ 1/(4v²): shift to start at 0 and
        // integrate the power-law tail by inversion
        let mut f = |v: f64| {
            let b = nielsen_beta(v + from)?;
            Ok(b * b)
        };
        Ok(integrate_powerlaw(&mut f, 2.0, 40.0, &self.opts())?.value)
    }
}

fn get_or_try<'a>(cell: &'a OnceLock<f64>, compute: impl FnOnce() -> Result<f64>) -> Result<&'a f64> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = compute()?;
    Ok(cell.get_or_init(|| v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lazy_reads_are_bit_identical() {
        let reg = ConstantRegistry::new(PrecisionMode::Double);
        let a = reg.get(ConstantName::H).unwrap();
        let b = reg.get(ConstantName::H).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn eager_constants_match_references() {
        let reg = ConstantRegistry::new(PrecisionMode::Double);
        assert_eq!(reg.get(ConstantName::Pi).unwrap(), std::f64::consts::PI);
        assert!((reg.get(ConstantName::Zeta3).unwrap() - 1.2020569031595942854).abs() < 1e-15);
        assert!((reg.get(ConstantName::GammaEuler).unwrap() - 0.5772156649015328606).abs() < 1e-15);
    }
}
