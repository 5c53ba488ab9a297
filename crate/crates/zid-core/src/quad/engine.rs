//! Adaptive integration engines: finite intervals, semi-infinite integrals
//! classified by decay envelope, and power-law tails via inversion.

use std::collections::BinaryHeap;

use super::dd::Acc;
use super::gk::qk21;
use super::tanhsinh::tanh_sinh;
use crate::error::{Error, Result};

/// Subdivision budget (panels).
const MAX_PANELS: u32 = 1 << 20;

/// Accumulation precision for quadrature sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrecisionMode {
    Double,
    DoubleDouble,
}

impl PrecisionMode {
    pub fn from_env_or(default: PrecisionMode) -> PrecisionMode {
        match std::env::var("ZID_PRECISION").ok().as_deref() {
            Some("dd") => PrecisionMode::DoubleDouble,
            Some("double") => PrecisionMode::Double,
            _ => default,
        }
    }
}

/// Options shared by the integration entry points.
#[derive(Clone, Copy, Debug)]
pub struct QuadOptions {
    pub tol: f64,
    pub mode: PrecisionMode,
    /// Left endpoint carries an integrable singularity: open the interval
    /// with a tanh–sinh panel.
    pub singular_at_origin: bool,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            tol: 1e-8,
            mode: PrecisionMode::Double,
            singular_at_origin: false,
        }
    }
}

impl QuadOptions {
    pub fn with_tol(tol: f64) -> Self {
        QuadOptions {
            tol,
            ..Default::default()
        }
    }
}

/// Outcome of a quadrature call.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    /// Upper limit V actually used (the interval end for finite integrals).
    pub truncation_point: f64,
    pub subdivisions: u32,
    /// Envelope bound on the discarded tail (0 for finite integrals).
    pub tail_bound: f64,
}

/// Decay classification of a semi-infinite integrand.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DecayClass {
    /// ~ e^{−πv} (kernel 1/cosh(πv))
    SechPi,
    /// ~ e^{−2πv} (kernel 1/cosh²(πv))
    SechSqPi,
    /// e^{−πv}/cosh(πv) ~ e^{−2πv}
    ExpSech,
    /// explicit exponential rate (kernels like cosh(φv)/cosh(πv))
    CustomExp { rate: f64, amplitude: f64 },
    /// algebraic tail ~ v^{−p}; integrated by inversion, not an envelope
    PowerLaw { p: f64 },
    /// bounded, non-decaying (tanh kernels)
    TanhBounded,
    None,
}

impl DecayClass {
    /// (rate, amplitude) of the exponential envelope, if any.
    fn envelope(&self) -> Option<(f64, f64)> {
        match *self {
            DecayClass::SechPi => Some((std::f64::consts::PI, 2.0)),
            DecayClass::SechSqPi => Some((2.0 * std::f64::consts::PI, 4.0)),
            DecayClass::ExpSech => Some((2.0 * std::f64::consts::PI, 2.0)),
            DecayClass::CustomExp { rate, amplitude } => Some((rate, amplitude)),
            _ => None,
        }
    }
}

#[derive(PartialEq)]
struct Panel {
    err: f64,
    lo: f64,
    hi: f64,
    val: f64,
    splittable: bool,
}

impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // max-heap by error; deterministic tie-break on position
        self.err
            .total_cmp(&other.err)
            .then(other.lo.total_cmp(&self.lo))
    }
}

struct AdaptiveOutcome {
    value: f64,
    err: f64,
    subdivisions: u32,
    converged: bool,
}

fn adaptive(
    f: &mut impl FnMut(f64) -> Result<f64>,
    splits: &[f64],
    opts: &QuadOptions,
) -> Result<AdaptiveOutcome> {
    let dd = opts.mode == PrecisionMode::DoubleDouble;
    let mut heap = BinaryHeap::new();
    let mut total_val = 0.0f64;
    let mut total_err = 0.0f64;
    let mut count = 0u32;
    let scale = splits[splits.len() - 1] - splits[0];

    let push = |heap: &mut BinaryHeap<Panel>,
                    total_val: &mut f64,
                    total_err: &mut f64,
                    f: &mut dyn FnMut(f64) -> Result<f64>,
                    lo: f64,
                    hi: f64|
     -> Result<()> {
        let mut g = |x: f64| f(x);
        let (val, err) = qk21(&mut g, lo, hi, dd)?;
        *total_val += val;
        *total_err += err;
        let splittable = (hi - lo) > 1e-14 * scale.max(1.0);
        heap.push(Panel {
            err,
            lo,
            hi,
            val,
            splittable,
        });
        Ok(())
    };

    for w in splits.windows(2) {
        push(&mut heap, &mut total_val, &mut total_err, f, w[0], w[1])?;
        count += 1;
    }

    let mut frozen: Vec<Panel> = Vec::new();
    let mut budget_hit = false;
    loop {
        let floor = (5e-16 * total_val.abs()).max(1e-305);
        if total_err <= opts.tol.max(floor) {
            break;
        }
        if count >= MAX_PANELS {
            budget_hit = true;
            break;
        }
        match heap.pop() {
            None => break,
            Some(top) if !top.splittable => {
                // roundoff-width panel: keep its contribution, stop refining it
                frozen.push(top);
            }
            Some(top) => {
                total_val -= top.val;
                total_err -= top.err;
                let mid = 0.5 * (top.lo + top.hi);
                push(&mut heap, &mut total_val, &mut total_err, f, top.lo, mid)?;
                push(&mut heap, &mut total_val, &mut total_err, f, mid, top.hi)?;
                count += 1;
            }
        }
    }

    // deterministic, compensated final reduction
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.append(&mut frozen);
    panels.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    let mut acc = Acc::new(dd);
    let mut errs = 0.0;
    for p in &panels {
        acc.add(p.val);
        errs += p.err;
    }
    let value = acc.value();
    let converged =
        !budget_hit && errs <= opts.tol.max((5e-16 * value.abs()).max(1e-305)) * 1.5;
    Ok(AdaptiveOutcome {
        value,
        err: errs,
        subdivisions: count,
        converged,
    })
}

/// Adaptive integration over [lo, hi] with a nested 10–21 Gauss–Kronrod
/// pair and bisection of the worst panel.
pub fn integrate_finite(
    f: &mut impl FnMut(f64) -> Result<f64>,
    lo: f64,
    hi: f64,
    opts: &QuadOptions,
) -> Result<QuadratureResult> {
    if !(lo < hi) {
        return Err(Error::Domain(format!("bad interval [{lo}, {hi}]")));
    }
    let mut head = 0.0;
    let mut head_err = 0.0;
    let mut start = lo;
    if opts.singular_at_origin {
        let first = (hi - lo).min(1.0);
        let (v, e) = tanh_sinh(f, lo, lo + first, opts.tol / 10.0)?;
        head = v;
        head_err = e;
        start = lo + first;
        if start >= hi {
            return Ok(QuadratureResult {
                value: head,
                abs_error_estimate: head_err,
                truncation_point: hi,
                subdivisions: 1,
                tail_bound: 0.0,
            });
        }
    }
    let out = adaptive(f, &[start, hi], opts)?;
    if !out.converged {
        return Err(Error::NonConvergence(format!(
            "finite quadrature on [{lo}, {hi}]: {} panels, err {:.3e}",
            out.subdivisions, out.err
        )));
    }
    Ok(QuadratureResult {
        value: head + out.value,
        abs_error_estimate: head_err + out.err,
        truncation_point: hi,
        subdivisions: out.subdivisions,
        tail_bound: 0.0,
    })
}

/// ∫_V^∞ A e^{−rv}(1+v)³ dv, the envelope remainder.
fn envelope_tail(rate: f64, amp: f64, v: f64) -> f64 {
    let u = 1.0 + v;
    amp * (-rate * v).exp()
        * (u.powi(3) / rate + 3.0 * u.powi(2) / rate.powi(2) + 6.0 * u / rate.powi(3)
            + 6.0 / rate.powi(4))
}

/// Semi-infinite integration for exponentially decaying integrands.
///
/// Truncates at the first V where the decay envelope times the conservative
/// polynomial-growth margin (1+V)³ drops below tol/10, then integrates
/// [0, V] adaptively. The envelope remainder is reported as `tail_bound`.
pub fn integrate_semi_infinite(
    f: &mut impl FnMut(f64) -> Result<f64>,
    decay: DecayClass,
    opts: &QuadOptions,
) -> Result<QuadratureResult> {
    let Some((rate, amp)) = decay.envelope() else {
        return Err(Error::Decay(format!(
            "integrand class {decay:?} is not admissible for direct convergent quadrature"
        )));
    };
    if rate <= 0.0 {
        return Err(Error::Decay(format!("non-positive decay rate {rate}")));
    }
    let mut v = 1.0f64;
    while amp * (-rate * v).exp() * (1.0 + v).powi(3) > opts.tol / 10.0 {
        v += 0.5;
        if v > 5000.0 {
            return Err(Error::Decay(format!(
                "envelope never reaches tolerance {} at rate {rate}",
                opts.tol
            )));
        }
    }
    let tail = envelope_tail(rate, amp, v);

    let mut head = 0.0;
    let mut head_err = 0.0;
    let mut start = 0.0;
    if opts.singular_at_origin {
        let (hv, he) = tanh_sinh(f, 0.0, 1.0f64.min(v), opts.tol / 10.0)?;
        head = hv;
        head_err = he;
        start = 1.0f64.min(v);
    }
    // geometric seed panels keep the heap from chasing the decaying tail
    let mut splits = vec![start];
    let mut x = (start + 1.0).min(v);
    while x < v {
        splits.push(x);
        x = (x * 2.0).min(v);
    }
    splits.push(v);
    let out = adaptive(f, &splits, opts)?;
    if !out.converged {
        return Err(Error::NonConvergence(format!(
            "semi-infinite quadrature: {} panels, err {:.3e}",
            out.subdivisions, out.err
        )));
    }
    Ok(QuadratureResult {
        value: head + out.value,
        abs_error_estimate: head_err + out.err + tail,
        truncation_point: v,
        subdivisions: out.subdivisions,
        tail_bound: tail,
    })
}

/// Semi-infinite integration of an integrand with an algebraic tail
/// f(v) ~ c·v^{−p}, p > 1: [0, v0] directly plus the inverted tail
/// ∫_{v0}^∞ f = ∫_0^{1/v0} f(1/u)/u² du (tanh–sinh near u = 0 when the
/// transformed integrand is singular there, i.e. p < 2).
pub fn integrate_powerlaw(
    f: &mut impl FnMut(f64) -> Result<f64>,
    p: f64,
    v0: f64,
    opts: &QuadOptions,
) -> Result<QuadratureResult> {
    if !(p > 1.0) {
        return Err(Error::Decay(format!("power-law tail exponent {p} ≤ 1")));
    }
    let front = integrate_finite(f, 0.0, v0, opts)?;
    let mut g = |u: f64| -> Result<f64> { Ok(f(1.0 / u)? / (u * u)) };
    let tail_opts = QuadOptions {
        singular_at_origin: p < 2.0,
        ..*opts
    };
    let tail = integrate_finite(&mut g, 0.0, 1.0 / v0, &tail_opts)?;
    Ok(QuadratureResult {
        value: front.value + tail.value,
        abs_error_estimate: front.abs_error_estimate + tail.abs_error_estimate,
        truncation_point: v0,
        subdivisions: front.subdivisions + tail.subdivisions,
        tail_bound: tail.abs_error_estimate,
    })
}

/// Best-effort segment integral for the Cesàro driver: never fails on
/// slow convergence, instead returns `converged = false`.
pub(crate) fn segment_best_effort(
    f: &mut impl FnMut(f64) -> Result<f64>,
    lo: f64,
    hi: f64,
    opts: &QuadOptions,
) -> Result<(f64, f64, bool)> {
    let mut head = 0.0;
    let mut head_err = 0.0;
    let mut start = lo;
    if opts.singular_at_origin && lo == 0.0 {
        let first = (hi - lo).min(1.0);
        let (v, e) = tanh_sinh(f, lo, lo + first, opts.tol / 10.0)?;
        head = v;
        head_err = e;
        start = lo + first;
    }
    let out = adaptive(f, &[start, hi], opts)?;
    Ok((head + out.value, head_err + out.err, out.converged))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(tol: f64) -> QuadOptions {
        QuadOptions::with_tol(tol)
    }

    #[test]
    fn cubic_exact() {
        let mut f = |x: f64| Ok(x * x);
        let r = integrate_finite(&mut f, 0.0, 1.0, &opts(1e-12)).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn sech_integral() {
        // ∫_0^∞ dv/cosh(πv) = 1/2
        let mut f = |v: f64| Ok(1.0 / (std::f64::consts::PI * v).cosh());
        let r = integrate_semi_infinite(&mut f, DecayClass::SechPi, &opts(1e-10)).unwrap();
        assert!((r.value - 0.5).abs() < 1e-10, "got {}", r.value);
        assert!(r.truncation_point > 0.0 && r.tail_bound >= 0.0);
    }

    #[test]
    fn decay_error_for_bounded() {
        let mut f = |v: f64| Ok((std::f64::consts::PI * v).tanh());
        assert!(matches!(
            integrate_semi_infinite(&mut f, DecayClass::TanhBounded, &opts(1e-8)),
            Err(Error::Decay(_))
        ));
    }

    #[test]
    fn oscillatory_finite() {
        let mut f = |x: f64| Ok((10.0 * x).cos());
        let r = integrate_finite(&mut f, 0.0, 3.0, &opts(1e-12)).unwrap();
        assert!((r.value - (30.0f64).sin() / 10.0).abs() < 1e-12);
    }

    #[test]
    fn powerlaw_tail() {
        // ∫_0^∞ dv/(1+v)² = 1
        let mut f = |v: f64| Ok(1.0 / (1.0 + v).powi(2));
        let r = integrate_powerlaw(&mut f, 2.0, 10.0, &opts(1e-10)).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9, "got {}", r.value);
    }

    #[test]
    fn powerlaw_slow_tail_with_origin_singularity() {
        // ∫_0^∞ v^{-1/2} (1+v)^{-2} dv = π/2
        let mut f = |v: f64| Ok(1.0 / (v.sqrt() * (1.0 + v).powi(2)));
        let o = QuadOptions {
            singular_at_origin: true,
            ..opts(1e-10)
        };
        let r = integrate_powerlaw(&mut f, 2.5, 10.0, &o).unwrap();
        assert!(
            (r.value - std::f64::consts::PI / 2.0).abs() < 1e-9,
            "got {}",
            r.value
        );
    }

    #[test]
    fn dd_mode_matches_double() {
        let mut f = |v: f64| Ok((-v).exp() * v.sin());
        let a = integrate_finite(&mut f, 0.0, 45.0, &opts(1e-12)).unwrap();
        let o = QuadOptions {
            mode: PrecisionMode::DoubleDouble,
            ..opts(1e-12)
        };
        let b = integrate_finite(&mut f, 0.0, 45.0, &o).unwrap();
        assert!((a.value - b.value).abs() < 1e-13);
        assert!((a.value - 0.5).abs() < 1e-12);
    }
}
