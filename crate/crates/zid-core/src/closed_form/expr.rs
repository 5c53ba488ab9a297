//! Expression trees for right-hand sides: leaves are rational literals,
//! named constants, special-function calls with bound real arguments,
//! alternating-series evaluations, or quadrature-backed integrals.

use num_complex::Complex64;

use super::series::{evaluate_series, AlternatingSeriesSpec};
use crate::catalog::integrand::IntegrandSpec;
use crate::error::Result;
use crate::quad::QuadOptions;
use crate::special::{
    digamma, gamma, hurwitz_eta, hurwitz_zeta, trigamma, zeta_prime, ConstantName,
    ConstantRegistry,
};

#[derive(Clone, Debug)]
pub enum Expr {
    Lit(f64),
    Const(ConstantName),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Sqrt(Box<Expr>),
    Ln(Box<Expr>),
    Sin(Box<Expr>),
    Cos(Box<Expr>),
    /// η(s, a), real arguments (entire in s).
    Eta(Box<Expr>, Box<Expr>),
    /// ζ(s, a), real arguments.
    Zeta(Box<Expr>, Box<Expr>),
    /// ζ′(s), real argument.
    ZetaPrime(Box<Expr>),
    /// ψ(x), ψ′(x), Γ(x), real arguments.
    Digamma(Box<Expr>),
    Trigamma(Box<Expr>),
    Gamma(Box<Expr>),
    /// An alternating-series evaluation.
    Series(AlternatingSeriesSpec),
    /// A quadrature-backed integral (for catalog entries whose printed
    /// right-hand side is itself an integral).
    Integral(Box<IntegrandSpec>),
}

/// Context threaded through expression evaluation.
pub struct EvalCtx<'a> {
    pub registry: &'a ConstantRegistry,
    pub quad: QuadOptions,
}

impl<'a> EvalCtx<'a> {
    pub fn new(registry: &'a ConstantRegistry) -> Self {
        EvalCtx {
            registry,
            quad: QuadOptions {
                tol: 1e-10,
                mode: registry.mode(),
                singular_at_origin: false,
            },
        }
    }
}

impl Expr {
    pub fn eval(&self, ctx: &EvalCtx<'_>) -> Result<f64> {
        Ok(match self {
            Expr::Lit(v) => *v,
            Expr::Const(name) => ctx.registry.get(*name)?,
            Expr::Add(a, b) => a.eval(ctx)? + b.eval(ctx)?,
            Expr::Sub(a, b) => a.eval(ctx)? - b.eval(ctx)?,
            Expr::Mul(a, b) => a.eval(ctx)? * b.eval(ctx)?,
            Expr::Div(a, b) => a.eval(ctx)? / b.eval(ctx)?,
            Expr::Pow(a, b) => a.eval(ctx)?.powf(b.eval(ctx)?),
            Expr::Neg(a) => -a.eval(ctx)?,
            Expr::Sqrt(a) => a.eval(ctx)?.sqrt(),
            Expr::Ln(a) => a.eval(ctx)?.ln(),
            Expr::Sin(a) => a.eval(ctx)?.sin(),
            Expr::Cos(a) => a.eval(ctx)?.cos(),
            Expr::Eta(s, a) => {
                hurwitz_eta(Complex64::new(s.eval(ctx)?, 0.0), a.eval(ctx)?)?.re
            }
            Expr::Zeta(s, a) => {
                hurwitz_zeta(Complex64::new(s.eval(ctx)?, 0.0), a.eval(ctx)?)?.re
            }
            Expr::ZetaPrime(s) => zeta_prime(s.eval(ctx)?)?,
            Expr::Digamma(x) => digamma(Complex64::new(x.eval(ctx)?, 0.0))?.re,
            Expr::Trigamma(x) => trigamma(Complex64::new(x.eval(ctx)?, 0.0))?.re,
            Expr::Gamma(x) => gamma(Complex64::new(x.eval(ctx)?, 0.0))?.re,
            Expr::Series(spec) => evaluate_series(spec)?,
            Expr::Integral(spec) => spec.integrate(&ctx.quad)?.value,
        })
    }
}

// Builder shorthand used heavily by the catalog.

pub fn lit(v: f64) -> Expr {
    Expr::Lit(v)
}

pub fn rat(n: i64, d: i64) -> Expr {
    Expr::Lit(n as f64 / d as f64)
}

pub fn named(c: ConstantName) -> Expr {
    Expr::Const(c)
}

pub fn euler_gamma() -> Expr {
    named(ConstantName::GammaEuler)
}

pub fn ln2() -> Expr {
    named(ConstantName::Ln2)
}

pub fn pi() -> Expr {
    named(ConstantName::Pi)
}

pub fn zeta3() -> Expr {
    named(ConstantName::Zeta3)
}

pub fn zeta5() -> Expr {
    named(ConstantName::Zeta5)
}

pub fn sqrt2() -> Expr {
    Expr::Sqrt(Box::new(lit(2.0)))
}

pub fn sqrt_of(e: Expr) -> Expr {
    Expr::Sqrt(Box::new(e))
}

pub fn ln_of(e: Expr) -> Expr {
    Expr::Ln(Box::new(e))
}

/// η(1, a): Nielsen's beta function of a literal argument.
pub fn eta1(a: f64) -> Expr {
    Expr::Eta(Box::new(lit(1.0)), Box::new(lit(a)))
}

pub fn eta(s: f64, a: f64) -> Expr {
    Expr::Eta(Box::new(lit(s)), Box::new(lit(a)))
}

pub fn zeta_at(s: f64) -> Expr {
    Expr::Zeta(Box::new(lit(s)), Box::new(lit(1.0)))
}

pub fn psi(x: f64) -> Expr {
    Expr::Digamma(Box::new(lit(x)))
}

pub fn psi1(x: f64) -> Expr {
    Expr::Trigamma(Box::new(lit(x)))
}

pub fn sq(e: Expr) -> Expr {
    Expr::Mul(Box::new(e.clone()), Box::new(e))
}

impl std::ops::Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(rhs))
    }
}

impl std::ops::Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl std::ops::Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl std::ops::Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(rhs))
    }
}

impl std::ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

impl std::ops::Mul<Expr> for f64 {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(Expr::Lit(self)), Box::new(rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::PrecisionMode;

    #[test]
    fn arithmetic_and_constants() {
        let reg = ConstantRegistry::new(PrecisionMode::Double);
        let ctx = EvalCtx::new(&reg);
        let e = (pi() * pi()) / lit(48.0) - ln2() / lit(4.0);
        let v = e.eval(&ctx).unwrap();
        assert!((v - 0.032329963216041977).abs() < 1e-15);
    }

    #[test]
    fn special_calls() {
        let reg = ConstantRegistry::new(PrecisionMode::Double);
        let ctx = EvalCtx::new(&reg);
        assert!((eta1(1.0).eval(&ctx).unwrap() - std::f64::consts::LN_2).abs() < 1e-13);
        assert!((psi(2.0).eval(&ctx).unwrap() - (1.0 - 0.5772156649015329)).abs() < 1e-13);
    }
}
