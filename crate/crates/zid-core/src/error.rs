use std::fmt;

/// Error type shared by every module in the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Evaluation requested exactly at a pole (e.g. Γ at a non-positive
    /// integer, ζ(s,·) at s = 1, sin(πb) = 0 in a fired residue branch).
    Pole(String),
    /// Argument outside the domain of validity (a ≤ 0, violated theorem
    /// constraint, excluded θ, ...).
    Domain(String),
    /// Integrand decay class does not admit direct convergent quadrature.
    Decay(String),
    /// Adaptive subdivision or series summation hit its budget without
    /// meeting the tolerance.
    NonConvergence(String),
    /// A series term has a vanishing denominator at index `index` and the
    /// caller did not exclude it.
    SingularTerm { index: u64 },
    /// Evaluation exactly at the exceptional limit point.
    AtLimitPoint,
    /// Degenerate path input (q = 1, α = 0 makes arg(0) meaningless).
    Degenerate(String),
    /// Pole-coefficient fit residual exceeded 10% of the fitted magnitude.
    Fit(String),
    /// The derivation graph contains a cycle through the named record.
    Cycle(String),
    /// Catalog lookup failed; carries nearby ids for the CLI message.
    UnknownId { id: String, nearest: Vec<String> },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole(m) => write!(f, "pole: {m}"),
            Error::Domain(m) => write!(f, "domain: {m}"),
            Error::Decay(m) => write!(f, "decay: {m}"),
            Error::NonConvergence(m) => write!(f, "non-convergence: {m}"),
            Error::SingularTerm { index } => {
                write!(f, "singular series term at j = {index}")
            }
            Error::AtLimitPoint => write!(f, "evaluation exactly at the exceptional limit point"),
            Error::Degenerate(m) => write!(f, "degenerate input: {m}"),
            Error::Fit(m) => write!(f, "fit: {m}"),
            Error::Cycle(m) => write!(f, "cycle in derivation graph: {m}"),
            Error::UnknownId { id, nearest } => {
                write!(f, "unknown identity id `{id}`; nearest: {}", nearest.join(", "))
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
