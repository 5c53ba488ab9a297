//! zid-core: a numerical laboratory for integral identities that connect the
//! Riemann, Hurwitz, alternating (eta) and Dirichlet beta functions on the
//! critical line.
//!
//! The crate has five layers:
//!
//! * [`special`] — from-scratch special functions for complex arguments
//!   (log-gamma, digamma/trigamma, Hurwitz zeta/eta, Dirichlet beta) plus a
//!   registry of named constants, some of which are defined by integrals and
//!   computed lazily through the quadrature layer.
//! * [`quad`] — adaptive Gauss–Kronrod quadrature on finite intervals,
//!   semi-infinite integration driven by decay envelopes, tanh–sinh panels
//!   for endpoint singularities, Cesàro segment averaging for oscillatory
//!   integrals, and parameter-derivative helpers.
//! * [`closed_form`] — evaluators for every right-hand side: expression
//!   trees over named constants, the alternating j-series families, the
//!   digamma component series, and the three residue ledgers.
//! * [`catalog`] — the machine-readable registry of identities, the
//!   verification engine, and the linear-combination consistency checker.
//! * [`limits`] — numerical exploration of the exceptional limit point:
//!   singular-term evaluation, path-parameterized series, pole-coefficient
//!   fitting and Δ classification.

pub mod accel;
pub mod catalog;
pub mod closed_form;
pub mod error;
pub mod limits;
pub mod quad;
pub mod special;

pub use error::{Error, Result};

/// Complex scalar used for all function arguments and results.
pub type ComplexScalar = num_complex::Complex64;

/// Re-exported constructor shorthand.
pub fn cplx(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}
