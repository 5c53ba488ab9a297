//! Special functions for complex arguments on and near the critical line.
//!
//! Everything here is pure and stateless except [`ConstantRegistry`], which
//! performs one guarded initialization per lazily computed constant.

mod constants;
mod gamma;
mod psi;
mod zeta;

pub use constants::{ConstantName, ConstantRegistry, PrecisionMode};
pub use gamma::{gamma, gamma_abs_sq, ln_cosh, log_gamma};
pub use psi::{digamma, trigamma};
pub use zeta::{
    dirichlet_beta, eta_series_direct, hurwitz_eta, hurwitz_zeta, nielsen_beta, psi_limit_check,
    riemann_zeta, zeta_minus_pole, zeta_prime,
};
