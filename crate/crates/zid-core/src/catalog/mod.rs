//! Identity catalog (records under construction).
pub mod integrand;
