//! Numerical integration engines: finite-interval adaptive Gauss–Kronrod,
//! semi-infinite integrals driven by decay envelopes, tanh–sinh endpoint
//! panels, Cesàro averaging, and derivative helpers.

mod cesaro;
mod dd;
mod diff;
mod engine;
mod gk;
mod tanhsinh;

pub use cesaro::{cesaro_average, CesaroStep};
pub use dd::{Acc, Dd};
pub use diff::{derivative_wrt_parameter, fit_pole_linear, taylor_coeffs};
pub use engine::{
    integrate_finite, integrate_powerlaw, integrate_semi_infinite, DecayClass, PrecisionMode,
    QuadOptions, QuadratureResult,
};
pub use tanhsinh::tanh_sinh;
