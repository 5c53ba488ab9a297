//! Identity records: the machine-readable registry entries binding a
//! left-hand-side integrand, a right-hand-side expression, a verification
//! class and a derivation.

use crate::catalog::integrand::IntegrandSpec;
use crate::closed_form::Expr;
use crate::error::Result;
use crate::quad::{QuadOptions, QuadratureResult};
use crate::special::ConstantName;

/// Verification class of an identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityClass {
    /// Numerically convergent: verified by quadrature against the closed form.
    Convergent,
    /// True by analytic continuation in a hidden parameter; verified through
    /// the consistency machinery only.
    AnalyticContinuation,
    /// Carries the ⟲ tag: downstream of a chosen resolution of an
    /// indeterminate directional limit.
    IndeterminateTagged,
    /// Obtained by differentiating a parameterized family; verified by a
    /// parameter-derivative cross-check at an interior point.
    MomentDerived,
}

impl IdentityClass {
    pub fn label(&self) -> &'static str {
        match self {
            IdentityClass::Convergent => "convergent",
            IdentityClass::AnalyticContinuation => "ac",
            IdentityClass::IndeterminateTagged => "indeterminate",
            IdentityClass::MomentDerived => "moment",
        }
    }
}

/// Left-hand side: a sum of integrand parts (most records have one part;
/// records mixing two kernels carry two).
#[derive(Clone, Debug)]
pub struct LhsSpec {
    pub parts: Vec<IntegrandSpec>,
}

impl LhsSpec {
    pub fn one(spec: IntegrandSpec) -> Self {
        LhsSpec { parts: vec![spec] }
    }

    pub fn integrate(&self, opts: &QuadOptions) -> Result<QuadratureResult> {
        let mut total: Option<QuadratureResult> = None;
        for p in &self.parts {
            let r = p.integrate(opts)?;
            total = Some(match total {
                None => r,
                Some(acc) => QuadratureResult {
                    value: acc.value + r.value,
                    abs_error_estimate: acc.abs_error_estimate + r.abs_error_estimate,
                    truncation_point: acc.truncation_point.max(r.truncation_point),
                    subdivisions: acc.subdivisions + r.subdivisions,
                    tail_bound: acc.tail_bound + r.tail_bound,
                },
            });
        }
        Ok(total.expect("LhsSpec must have at least one part"))
    }
}

/// One term of a linear-combination derivation.
#[derive(Clone, Debug)]
pub struct ComboTerm {
    pub coeff: f64,
    pub source: ComboSource,
}

#[derive(Clone, Debug)]
pub enum ComboSource {
    /// Another record's right-hand-side value.
    Record(&'static str),
    /// A named constant.
    Constant(ConstantName),
}

pub fn rec_term(coeff: f64, id: &'static str) -> ComboTerm {
    ComboTerm {
        coeff,
        source: ComboSource::Record(id),
    }
}

pub fn const_term(coeff: f64, c: ConstantName) -> ComboTerm {
    ComboTerm {
        coeff,
        source: ComboSource::Constant(c),
    }
}

/// Pure-arithmetic machinery routes that re-derive a record's value from
/// the series/limit machinery instead of a linear combination.
#[derive(Clone, Debug)]
pub enum MachineryRoute {
    /// Real-part series at φ = π, non-exceptional: the value is exactly 0.
    HrAtPi { r: f64, w: f64 },
    /// scale · (−√r · Σ(−1)^j/(j+w+1/2−r)) — the imaginary-part series at
    /// φ = π (non-exceptional), through the digamma continuation.
    HiAtPi { r: f64, w: f64, scale: f64 },
    /// scale · cₙ where cₙ is the θ-expansion coefficient of the pole-free
    /// θ-series combination at the given m.
    ThetaCoeff { m: u64, order: usize, scale: f64, tol: f64 },
    /// Pole-coefficient ratio of the two θ-series branches must equal 2.
    ThetaPoleRatio { m: u64 },
    /// scale · (pole + sum) of one side of the disk-path series at (q, α).
    PathQ { m: u64, w_half: bool, q: f64, alpha: f64, icp_side: bool, scale: f64 },
    /// scale · regularized (q = 0) α-independent value.
    Regularized { m: u64, w_half: bool, scale: f64 },
    /// −π√M ordered-limit value.
    PiSqrtM { big_m: f64, scale: f64 },
    /// √(m+1)(ψ(m+1) − ln(m+1)) ordered-limit value.
    OaValue { m: u64 },
    /// Preferred-limit value of the w=0 tanh family at the exceptional point.
    LimwValue { m: u64 },
    /// ψ-series (instead of asymptotic digamma) evaluation of the record's
    /// right-hand side at φ = π.
    PsiPiPart { r: f64, sigma: f64, w: f64, imag: bool, scale: f64 },
    /// Interior-φ derivative cross-check of a parameterized family.
    MomentFamily { r: f64, w: f64, zeta_side: bool },
}

/// How a record's value is re-derived for the consistency check.
#[derive(Clone, Debug)]
pub enum Derivation {
    /// A root: verified by quadrature or theorem checks only.
    Root,
    /// Exact linear combination of parent values (tolerance 1e-12).
    Combo(Vec<ComboTerm>),
    /// Machinery re-derivation; `roots` names the family records the route
    /// depends on (graph edges for acyclicity/reachability).
    Machinery {
        roots: Vec<&'static str>,
        route: MachineryRoute,
    },
}

/// One verifiable identity.
#[derive(Clone, Debug)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub class: IdentityClass,
    pub lhs: Option<LhsSpec>,
    pub rhs: Expr,
    pub params: Vec<(&'static str, f64)>,
    /// Section-style anchor label for audit.
    pub anchor: &'static str,
    pub derivation: Derivation,
    /// Free-form caveat (e.g. flagged printing discrepancies).
    pub note: &'static str,
}

impl IdentityRecord {
    pub fn parent_ids(&self) -> Vec<&'static str> {
        match &self.derivation {
            Derivation::Root => vec![],
            Derivation::Combo(terms) => terms
                .iter()
                .filter_map(|t| match t.source {
                    ComboSource::Record(id) => Some(id),
                    ComboSource::Constant(_) => None,
                })
                .collect(),
            Derivation::Machinery { roots, .. } => roots.clone(),
        }
    }
}
