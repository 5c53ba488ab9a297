//! Numerical exploration of the exceptional limit point r − w − 1/2 = m,
//! φ = ±π: singular-term evaluation, path-parameterized series,
//! pole-coefficient fitting and Δ classification.

mod fit;
mod paths;
mod singular;
mod sweep;

pub use fit::{fit_pole_coefficient, geometric_steps, LimitClassification, PoleFit};
pub use paths::{
    path_series, regularized_series, theta_pv_combination, ApproachPath, ApproachState,
};
pub use singular::{divergent_term_dt, kappa, singular_term};
pub use sweep::{
    sweep, weighted_arc_combination, weighted_disk_combination, SweepMode, SweepRow,
};
