//! Compensated double-double accumulator for the optional high-precision
//! summation mode. Term evaluations stay in f64; only the accumulation is
//! protected against rounding.

/// Error-free transformation: a + b = s + e exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Unevaluated sum hi + lo with |lo| ≤ ulp(hi)/2.
#[derive(Clone, Copy, Debug, Default)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    pub fn zero() -> Self {
        Dd { hi: 0.0, lo: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let (s, e) = two_sum(self.hi, x);
        self.lo += e;
        self.hi = s;
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }
}

/// Accumulator that is a plain f64 sum in `Double` mode and a compensated
/// sum in `DoubleDouble` mode.
#[derive(Clone, Copy, Debug)]
pub enum Acc {
    Double(f64),
    DoubleDouble(Dd),
}

impl Acc {
    pub fn new(dd: bool) -> Self {
        if dd {
            Acc::DoubleDouble(Dd::zero())
        } else {
            Acc::Double(0.0)
        }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        match self {
            Acc::Double(s) => *s += x,
            Acc::DoubleDouble(d) => d.add(x),
        }
    }

    #[inline]
    pub fn value(&self) -> f64 {
        match self {
            Acc::Double(s) => *s,
            Acc::DoubleDouble(d) => d.value(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_beats_naive() {
        let mut dd = Dd::zero();
        let mut naive = 0.0f64;
        // 10^7 copies of 0.1 plus a large head that wipes low bits
        dd.add(1e16);
        naive += 1e16;
        for _ in 0..1_000_000 {
            dd.add(0.1);
            naive += 0.1;
        }
        dd.add(-1e16);
        naive += -1e16;
        assert!((dd.value() - 100_000.0).abs() < 1e-4);
        // the naive sum typically drifts by more than the dd sum
        assert!((dd.value() - 100_000.0).abs() <= (naive - 100_000.0).abs());
    }
}
