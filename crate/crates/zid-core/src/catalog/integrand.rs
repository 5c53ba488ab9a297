//! Declarative left-hand-side integrands: a sum of (component × oscillator)
//! groups under a shared kernel, moment power and domain, assembled into a
//! callable and dispatched to the right integration engine.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::{
    integrate_finite, integrate_powerlaw, integrate_semi_infinite, DecayClass, QuadOptions,
    QuadratureResult,
};
use crate::special::{
    digamma, dirichlet_beta, gamma_abs_sq, hurwitz_eta, hurwitz_zeta, nielsen_beta, riemann_zeta,
    trigamma,
};

const PI: f64 = std::f64::consts::PI;

/// Function-of-v selector. Critical-line components take σ + iv arguments;
/// real-line components are functions of the integration variable itself.
#[derive(Clone, Debug, PartialEq)]
pub enum Component {
    /// Re ζ(σ+iv)
    ZetaRe { sigma: f64 },
    /// Im ζ(σ+iv)
    ZetaIm { sigma: f64 },
    /// Re/Im of the Dirichlet eta function η(σ+iv) = η(σ+iv, 1)
    EtaRe,
    EtaIm,
    /// Re/Im of η(1/2+iv, a)
    HurwitzEtaRe { a: f64 },
    HurwitzEtaIm { a: f64 },
    /// Re/Im β(1/2+iv)
    BetaRe,
    BetaIm,
    /// |ζ(σ+iv)|²
    AbsZetaSq { sigma: f64 },
    /// |β(1/2+iv)|²
    AbsBetaSq,
    /// ψ(v)²  (real line)
    PsiSq,
    /// η(1, v)² = B(v)², optionally shifted
    NielsenBetaSq { shift: f64 },
    /// ζ(s, v + shift)² for real s (real line)
    HurwitzZetaSqReal { s: f64, shift: f64 },
    /// ψ′(v + shift)² (real line; equals ζ(2, v+shift)²)
    TrigammaSq { shift: f64 },
    /// (ψ(v+1) − ln v) · η(1, v+1) (real line)
    PsiShiftLnEta,
    /// v^{s−1} ln v · η(1, v+1) (real line)
    EtaLnMoment { s: f64 },
    /// v^{s−1} η(b+1, v+w+1/2) (theorem left-hand sides)
    PowEta { s: f64, b: f64, w: f64 },
    /// v^{s−1} ζ(b+1, v+w+1/2)
    PowZeta { s: f64, b: f64, w: f64 },
    /// v^{s−1} ζ(b+1, v+w+1/2) η(b+1, v+w+1/2)
    PowZetaEta { s: f64, b: f64, w: f64 },
    /// e^{−av} cos(bv) v^{s−1} (regularized-cosine fixtures)
    ExpCos { a: f64, b: f64, s: f64 },
    /// cos(v) v^{s−1}
    CosPow { s: f64 },
    /// constant 1 (divergence demonstrations)
    One,
}

impl Component {
    fn eval(&self, v: f64) -> Result<f64> {
        Ok(match self {
            Component::ZetaRe { sigma } => riemann_zeta(Complex64::new(*sigma, v))?.re,
            Component::ZetaIm { sigma } => riemann_zeta(Complex64::new(*sigma, v))?.im,
            Component::EtaRe => hurwitz_eta(Complex64::new(0.5, v), 1.0)?.re,
            Component::EtaIm => hurwitz_eta(Complex64::new(0.5, v), 1.0)?.im,
            Component::HurwitzEtaRe { a } => hurwitz_eta(Complex64::new(0.5, v), *a)?.re,
            Component::HurwitzEtaIm { a } => hurwitz_eta(Complex64::new(0.5, v), *a)?.im,
            Component::BetaRe => dirichlet_beta(Complex64::new(0.5, v))?.re,
            Component::BetaIm => dirichlet_beta(Complex64::new(0.5, v))?.im,
            Component::AbsZetaSq { sigma } => riemann_zeta(Complex64::new(*sigma, v))?.norm_sqr(),
            Component::AbsBetaSq => dirichlet_beta(Complex64::new(0.5, v))?.norm_sqr(),
            Component::PsiSq => {
                let p = digamma(Complex64::new(v, 0.0))?.re;
                p * p
            }
            Component::NielsenBetaSq { shift } => {
                let b = nielsen_beta(v + shift)?;
                b * b
            }
            Component::HurwitzZetaSqReal { s, shift } => {
                let z = hurwitz_zeta(Complex64::new(*s, 0.0), v + shift)?.re;
                z * z
            }
            Component::TrigammaSq { shift } => {
                let t = trigamma(Complex64::new(v + shift, 0.0))?.re;
                t * t
            }
            Component::PsiShiftLnEta => {
                let p = digamma(Complex64::new(v + 1.0, 0.0))?.re;
                (p - v.ln()) * nielsen_beta(v + 1.0)?
            }
            Component::EtaLnMoment { s } => v.powf(s - 1.0) * v.ln() * nielsen_beta(v + 1.0)?,
            Component::PowEta { s, b, w } => {
                v.powf(s - 1.0) * hurwitz_eta(Complex64::new(b + 1.0, 0.0), v + w + 0.5)?.re
            }
            Component::PowZeta { s, b, w } => {
                v.powf(s - 1.0) * hurwitz_zeta(Complex64::new(b + 1.0, 0.0), v + w + 0.5)?.re
            }
            Component::PowZetaEta { s, b, w } => {
                let a = v + w + 0.5;
                v.powf(s - 1.0)
                    * hurwitz_zeta(Complex64::new(b + 1.0, 0.0), a)?.re
                    * hurwitz_eta(Complex64::new(b + 1.0, 0.0), a)?.re
            }
            Component::ExpCos { a, b, s } => (-a * v).exp() * (b * v).cos() * v.powf(s - 1.0),
            Component::CosPow { s } => v.cos() * v.powf(s - 1.0),
            Component::One => 1.0,
        })
    }

    /// Algebraic tail exponent p for real-line components with f ~ v^{−p}.
    fn power_tail(&self) -> Option<f64> {
        match self {
            Component::NielsenBetaSq { .. } => Some(2.0),
            Component::HurwitzZetaSqReal { s, .. } => Some(2.0 * s),
            Component::TrigammaSq { .. } => Some(2.0),
            Component::PsiShiftLnEta => Some(2.0),
            // v^{s−1}·(ln v)·v^{−1}/2: treat the log as eaten by a small
            // exponent margin
            Component::EtaLnMoment { s } => Some(2.0 - s - 0.05),
            Component::PowEta { s, b, .. } => Some(b + 2.0 - s),
            Component::PowZeta { s, b, .. } => Some(b + 2.0 - s),
            Component::PowZetaEta { s, b, .. } => Some(2.0 * b + 3.0 - s),
            _ => None,
        }
    }

    fn singular_at_origin(&self) -> bool {
        match self {
            Component::EtaLnMoment { .. } => true,
            Component::PowEta { s, .. } | Component::PowZeta { s, .. } => *s < 1.0,
            Component::PowZetaEta { s, .. } => *s < 1.0,
            Component::ExpCos { s, .. } | Component::CosPow { s } => *s < 1.0,
            Component::PsiShiftLnEta => true, // ln v factor
            _ => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Trig {
    Cos,
    Sin,
    /// 1 − cos(f v), evaluated as 2 sin²(f v/2) for accuracy near v = 0.
    OneMinusCos,
}

/// One oscillator factor: coeff · trig(freq·v). Frequencies are logarithms
/// of the positive rationals and half-integers appearing in the catalog
/// (freq = 0 encodes a constant term).
#[derive(Clone, Copy, Debug)]
pub struct Oscillator {
    pub coeff: f64,
    pub trig: Trig,
    pub freq: f64,
}

impl Oscillator {
    pub fn cos(coeff: f64, freq: f64) -> Self {
        Oscillator { coeff, trig: Trig::Cos, freq }
    }
    pub fn sin(coeff: f64, freq: f64) -> Self {
        Oscillator { coeff, trig: Trig::Sin, freq }
    }
    pub fn constant(coeff: f64) -> Self {
        Oscillator { coeff, trig: Trig::Cos, freq: 0.0 }
    }
    pub fn one_minus_cos(coeff: f64, freq: f64) -> Self {
        Oscillator { coeff, trig: Trig::OneMinusCos, freq }
    }

    fn eval(&self, v: f64) -> f64 {
        match self.trig {
            Trig::Cos => self.coeff * (self.freq * v).cos(),
            Trig::Sin => self.coeff * (self.freq * v).sin(),
            Trig::OneMinusCos => {
                let s = (0.5 * self.freq * v).sin();
                self.coeff * 2.0 * s * s
            }
        }
    }
}

/// Shared kernel factor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Kernel {
    None,
    /// 1/cosh(πv)
    SechPi,
    /// 1/cosh²(πv)
    SechSqPi,
    /// tanh(πv)
    TanhPi,
    /// e^{−πv}/cosh(πv)
    ExpSech,
    /// cosh(φv)/cosh(πv)
    CoshRatio(f64),
    /// sinh(φv)/cosh(πv)
    SinhRatio(f64),
    /// cosh(πv)/cosh(2πv)
    CoshPiOverCosh2Pi,
    /// sinh(πv)/cosh(2πv)
    SinhPiOverCosh2Pi,
    /// 1/sinh(2πv) (pair with moment_power ≥ 1)
    InvSinh2Pi,
    /// |Γ(σ+iv)|²/cosh(πv)
    AbsGammaSqSech(f64),
}

impl Kernel {
    fn eval(&self, v: f64) -> Result<f64> {
        Ok(match *self {
            Kernel::None => 1.0,
            Kernel::SechPi => 1.0 / (PI * v).cosh(),
            Kernel::SechSqPi => {
                let c = (PI * v).cosh();
                1.0 / (c * c)
            }
            Kernel::TanhPi => (PI * v).tanh(),
            Kernel::ExpSech => (-PI * v).exp() / (PI * v).cosh(),
            Kernel::CoshRatio(phi) => {
                // e^{(|φ|−π)|v|}-scale evaluation, overflow-safe
                ((phi * v).abs() - (PI * v).abs()).exp() * 0.5
                    * (1.0 + (-2.0 * (phi * v).abs()).exp())
                    / (0.5 * (1.0 + (-2.0 * (PI * v).abs()).exp()))
            }
            Kernel::SinhRatio(phi) => {
                let sign = (phi * v).signum();
                sign * ((phi * v).abs() - (PI * v).abs()).exp() * 0.5
                    * (1.0 - (-2.0 * (phi * v).abs()).exp())
                    / (0.5 * (1.0 + (-2.0 * (PI * v).abs()).exp()))
            }
            Kernel::CoshPiOverCosh2Pi => {
                ((PI * v).abs() - (2.0 * PI * v).abs()).exp()
                    * (1.0 + (-2.0 * (PI * v).abs()).exp())
                    / (1.0 + (-4.0 * (PI * v).abs()).exp())
            }
            Kernel::SinhPiOverCosh2Pi => {
                let sign = v.signum();
                sign * ((PI * v).abs() - (2.0 * PI * v).abs()).exp()
                    * (1.0 - (-2.0 * (PI * v).abs()).exp())
                    / (1.0 + (-4.0 * (PI * v).abs()).exp())
            }
            Kernel::InvSinh2Pi => 1.0 / (2.0 * PI * v).sinh(),
            Kernel::AbsGammaSqSech(sigma) => gamma_abs_sq(sigma, v)? / (PI * v).cosh(),
        })
    }

    /// Exponential decay classification of the kernel.
    fn decay(&self) -> DecayClass {
        match *self {
            Kernel::None => DecayClass::None,
            Kernel::SechPi => DecayClass::SechPi,
            Kernel::SechSqPi => DecayClass::SechSqPi,
            Kernel::TanhPi => DecayClass::TanhBounded,
            Kernel::ExpSech => DecayClass::ExpSech,
            Kernel::CoshRatio(phi) | Kernel::SinhRatio(phi) => {
                let rate = PI - phi.abs();
                if rate > 1e-9 {
                    DecayClass::CustomExp { rate, amplitude: 2.0 }
                } else {
                    DecayClass::TanhBounded
                }
            }
            Kernel::CoshPiOverCosh2Pi | Kernel::SinhPiOverCosh2Pi => {
                DecayClass::CustomExp { rate: PI, amplitude: 2.0 }
            }
            Kernel::InvSinh2Pi => DecayClass::CustomExp {
                rate: 2.0 * PI,
                amplitude: 4.0,
            },
            Kernel::AbsGammaSqSech(sigma) => DecayClass::CustomExp {
                rate: 2.0 * PI,
                // |Γ(σ+iv)|² ≈ 2π v^{2σ−1} e^{−πv}: fold a safe amplitude
                amplitude: 8.0 * (1.0 + sigma.abs()),
            },
        }
    }
}

/// Integration domain.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Domain {
    ZeroToInf,
    FiniteInterval(f64, f64),
    /// ∫_{−∞}^{∞} of an even integrand, computed as 2·∫_0^∞.
    FullLineEven,
}

/// One component × oscillator-sum group.
#[derive(Clone, Debug)]
pub struct IntegrandTerm {
    pub component: Component,
    pub oscillators: Vec<Oscillator>,
}

impl IntegrandTerm {
    pub fn bare(component: Component) -> Self {
        IntegrandTerm { component, oscillators: vec![] }
    }
    pub fn with(component: Component, oscillators: Vec<Oscillator>) -> Self {
        IntegrandTerm { component, oscillators }
    }

    fn eval(&self, v: f64) -> Result<f64> {
        let osc = if self.oscillators.is_empty() {
            1.0
        } else {
            self.oscillators.iter().map(|o| o.eval(v)).sum()
        };
        Ok(osc * self.component.eval(v)?)
    }
}

/// Declarative left-hand-side integrand.
#[derive(Clone, Debug)]
pub struct IntegrandSpec {
    pub terms: Vec<IntegrandTerm>,
    pub kernel: Kernel,
    /// v^n moment factor, n ≤ 4.
    pub moment_power: u32,
    pub domain: Domain,
    /// Overall scalar multiplier.
    pub amplitude: f64,
    pub singular_at_origin: bool,
}

impl IntegrandSpec {
    pub fn new(terms: Vec<IntegrandTerm>, kernel: Kernel, domain: Domain) -> Self {
        IntegrandSpec {
            terms,
            kernel,
            moment_power: 0,
            domain,
            amplitude: 1.0,
            singular_at_origin: false,
        }
    }

    pub fn moment(mut self, n: u32) -> Self {
        self.moment_power = n;
        self
    }

    pub fn amplitude(mut self, a: f64) -> Self {
        self.amplitude = a;
        self
    }

    pub fn singular(mut self) -> Self {
        self.singular_at_origin = true;
        self
    }

    /// Point evaluation of the assembled integrand.
    pub fn eval(&self, v: f64) -> Result<f64> {
        let mut s = 0.0;
        for t in &self.terms {
            s += t.eval(v)?;
        }
        Ok(self.amplitude * s * v.powi(self.moment_power as i32) * self.kernel.eval(v)?)
    }

    /// Decay classification used to route the integration.
    pub fn decay_class(&self) -> DecayClass {
        match self.domain {
            Domain::FiniteInterval(..) => return DecayClass::None,
            Domain::ZeroToInf | Domain::FullLineEven => {}
        }
        // real-line algebraic components override the kernel class
        let mut power: Option<f64> = None;
        for t in &self.terms {
            if let Some(p) = t.component.power_tail() {
                power = Some(power.map_or(p, |q: f64| q.min(p)));
            }
        }
        if let Some(p) = power {
            let p = p - self.moment_power as f64;
            return match self.kernel.decay() {
                DecayClass::None => DecayClass::PowerLaw { p },
                k => k, // exponential kernel dominates any algebraic factor
            };
        }
        self.kernel.decay()
    }

    fn is_singular(&self) -> bool {
        self.singular_at_origin || self.terms.iter().any(|t| t.component.singular_at_origin())
    }

    /// Integrate the assembled integrand over its domain.
    pub fn integrate(&self, opts: &QuadOptions) -> Result<QuadratureResult> {
        let scale = match self.domain {
            Domain::FullLineEven => 2.0,
            _ => 1.0,
        };
        let local = QuadOptions {
            singular_at_origin: self.is_singular(),
            // the doubling below scales the error too; keep the target
            tol: opts.tol / scale,
            ..*opts
        };
        let mut f = |v: f64| self.eval(v);
        let mut r = match self.domain {
            Domain::FiniteInterval(lo, hi) => integrate_finite(&mut f, lo, hi, &local)?,
            Domain::ZeroToInf | Domain::FullLineEven => match self.decay_class() {
                DecayClass::PowerLaw { p } => {
                    if p <= 1.0 {
                        return Err(Error::Decay(format!(
                            "algebraic tail exponent {p} ≤ 1 does not converge"
                        )));
                    }
                    integrate_powerlaw(&mut f, p, 40.0, &local)?
                }
                DecayClass::TanhBounded | DecayClass::None => {
                    return Err(Error::Decay(
                        "bounded oscillatory integrand; use Cesàro mode".into(),
                    ))
                }
                decay => integrate_semi_infinite(&mut f, decay, &local)?,
            },
        };
        r.value *= scale;
        r.abs_error_estimate *= scale;
        r.tail_bound *= scale;
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sech_kernel_values() {
        assert!((Kernel::SechPi.eval(0.0).unwrap() - 1.0).abs() < 1e-15);
        let v = 3.0;
        let direct = 1.0 / (PI * v).cosh();
        assert!((Kernel::SechPi.eval(v).unwrap() - direct).abs() < 1e-18);
        let direct = (PI * v).cosh() / (2.0 * PI * v).cosh();
        assert!((Kernel::CoshPiOverCosh2Pi.eval(v).unwrap() - direct).abs() < 1e-17);
        let direct = (1.4 * v).sinh() / (PI * v).cosh();
        assert!((Kernel::SinhRatio(1.4).eval(v).unwrap() - direct).abs() < 1e-16);
        // overflow-safe far out
        assert!(Kernel::CoshRatio(3.0).eval(400.0).unwrap().is_finite());
    }

    #[test]
    fn one_minus_cos_accuracy() {
        let o = Oscillator::one_minus_cos(1.0, std::f64::consts::LN_2);
        let v = 1e-7;
        let exact = 2.0 * (0.5 * std::f64::consts::LN_2 * v).sin().powi(2);
        assert_eq!(o.eval(v), exact);
        assert!(o.eval(v) > 0.0);
    }

    #[test]
    fn simple_spec_integrates() {
        // ∫_0^∞ dv/cosh(πv) = 1/2
        let spec = IntegrandSpec::new(
            vec![IntegrandTerm::bare(Component::One)],
            Kernel::SechPi,
            Domain::ZeroToInf,
        );
        let r = spec.integrate(&QuadOptions::with_tol(1e-10)).unwrap();
        assert!((r.value - 0.5).abs() < 1e-10);
    }

    #[test]
    fn tanh_kernel_rejected() {
        let spec = IntegrandSpec::new(
            vec![IntegrandTerm::bare(Component::EtaIm)],
            Kernel::TanhPi,
            Domain::ZeroToInf,
        );
        assert!(matches!(
            spec.integrate(&QuadOptions::with_tol(1e-8)),
            Err(Error::Decay(_))
        ));
    }
}
