//! Compensated summation and deterministic parallel reduction.
//!
//! Every series and quadrature in the crate funnels through these
//! accumulators. Parallel reductions split the index range into fixed-size
//! blocks, accumulate each block independently and combine the block
//! partials in index order, so the result does not depend on the number of
//! worker threads.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Block length used by the parallel reductions.
pub const REDUCTION_BLOCK: usize = 64;

/// Arithmetic mode for accumulations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrecisionMode {
    /// Neumaier-compensated binary64 summation.
    #[default]
    Standard,
    /// Double-word (head + tail) accumulation with renormalisation after
    /// every addition.
    Extended,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn fast_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// Running sum with Neumaier compensation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Double-word accumulator: the value is `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DoubleWord {
    hi: f64,
    lo: f64,
}

impl DoubleWord {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let (s, e) = two_sum(self.hi, x);
        let (hi, lo) = fast_two_sum(s, self.lo + e);
        self.hi = hi;
        self.lo = lo;
    }

    pub fn add_dw(&mut self, other: DoubleWord) {
        self.add(other.hi);
        self.add(other.lo);
    }

    pub fn value(&self) -> f64 {
        self.hi + self.lo
    }

    pub fn parts(&self) -> (f64, f64) {
        (self.hi, self.lo)
    }
}

/// Mode-dispatched real accumulator.
#[derive(Clone, Copy, Debug)]
pub enum Accumulator {
    Standard(Neumaier),
    Extended(DoubleWord),
}

impl Accumulator {
    pub fn new(mode: PrecisionMode) -> Self {
        match mode {
            PrecisionMode::Standard => Accumulator::Standard(Neumaier::new()),
            PrecisionMode::Extended => Accumulator::Extended(DoubleWord::new()),
        }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        match self {
            Accumulator::Standard(n) => n.add(x),
            Accumulator::Extended(d) => d.add(x),
        }
    }

    /// Folds another accumulator of the same mode into this one without
    /// rounding its tail away.
    pub fn merge(&mut self, other: &Accumulator) {
        match (self, other) {
            (Accumulator::Standard(a), Accumulator::Standard(b)) => {
                a.add(b.sum);
                a.add(b.comp);
            }
            (Accumulator::Extended(a), Accumulator::Extended(b)) => a.add_dw(*b),
            (a, b) => a.add(b.value()),
        }
    }

    pub fn value(&self) -> f64 {
        match self {
            Accumulator::Standard(n) => n.value(),
            Accumulator::Extended(d) => d.value(),
        }
    }
}

/// Component-wise compensated complex accumulator.
#[derive(Clone, Copy, Debug)]
pub struct ComplexAccumulator {
    re: Accumulator,
    im: Accumulator,
}

impl ComplexAccumulator {
    pub fn new(mode: PrecisionMode) -> Self {
        Self {
            re: Accumulator::new(mode),
            im: Accumulator::new(mode),
        }
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn merge(&mut self, other: &ComplexAccumulator) {
        self.re.merge(&other.re);
        self.im.merge(&other.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// Sums an iterator in order with the requested mode.
pub fn sum_ordered<I: IntoIterator<Item = f64>>(values: I, mode: PrecisionMode) -> f64 {
    let mut acc = Accumulator::new(mode);
    for v in values {
        acc.add(v);
    }
    acc.value()
}

/// Complex counterpart of [`sum_ordered`].
pub fn sum_ordered_complex<I: IntoIterator<Item = Complex64>>(
    values: I,
    mode: PrecisionMode,
) -> Complex64 {
    let mut acc = ComplexAccumulator::new(mode);
    for v in values {
        acc.add(v);
    }
    acc.value()
}

/// Deterministic parallel sum of `f(i)` for `i` in `range`.
pub fn par_sum<F>(range: std::ops::Range<usize>, mode: PrecisionMode, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    let start = range.start;
    let len = range.end.saturating_sub(start);
    let blocks = len.div_ceil(REDUCTION_BLOCK);
    let partials: Vec<Accumulator> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let lo = start + b * REDUCTION_BLOCK;
            let hi = (lo + REDUCTION_BLOCK).min(range.end);
            let mut acc = Accumulator::new(mode);
            for i in lo..hi {
                acc.add(f(i));
            }
            acc
        })
        .collect();
    let mut total = Accumulator::new(mode);
    for p in &partials {
        total.merge(p);
    }
    total.value()
}

/// Deterministic parallel complex sum; stops at the first error in index
/// order.
pub fn try_par_sum_complex<F, E>(
    range: std::ops::Range<usize>,
    mode: PrecisionMode,
    f: F,
) -> Result<Complex64, E>
where
    F: Fn(usize) -> Result<Complex64, E> + Sync,
    E: Send,
{
    let start = range.start;
    let len = range.end.saturating_sub(start);
    let blocks = len.div_ceil(REDUCTION_BLOCK);
    let partials: Vec<Result<ComplexAccumulator, E>> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let lo = start + b * REDUCTION_BLOCK;
            let hi = (lo + REDUCTION_BLOCK).min(range.end);
            let mut acc = ComplexAccumulator::new(mode);
            for i in lo..hi {
                acc.add(f(i)?);
            }
            Ok(acc)
        })
        .collect();
    let mut total = ComplexAccumulator::new(mode);
    for p in partials {
        total.merge(&p?);
    }
    Ok(total.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensation_recovers_cancelled_small_terms() {
        let xs = [1.0, 1e100, 1.0, -1e100];
        assert_eq!(sum_ordered(xs, PrecisionMode::Standard), 2.0);
        assert_eq!(sum_ordered(xs, PrecisionMode::Extended), 2.0);
        let naive: f64 = xs.iter().sum();
        assert_eq!(naive, 0.0);
    }

    #[test]
    fn harmonic_sum_matches_reference() {
        // H_100000 to 17 digits
        let reference = 12.090_146_129_863_428;
        for mode in [PrecisionMode::Standard, PrecisionMode::Extended] {
            let h = sum_ordered((1..=100_000).map(|n| 1.0 / n as f64), mode);
            assert!((h - reference).abs() < 4e-15, "{mode:?}: {h}");
        }
    }

    #[test]
    fn parallel_sum_is_independent_of_thread_count() {
        let f = |i: usize| ((i as f64) * 0.37).sin() / (1.0 + i as f64);
        let a = par_sum(0..10_000, PrecisionMode::Standard, f);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| par_sum(0..10_000, PrecisionMode::Standard, f));
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn parallel_complex_sum_propagates_first_error() {
        let r: Result<Complex64, usize> =
            try_par_sum_complex(0..1000, PrecisionMode::Standard, |i| {
                if i == 700 || i == 900 {
                    Err(i)
                } else {
                    Ok(Complex64::new(1.0, 0.0))
                }
            });
        assert_eq!(r, Err(700));
    }

    proptest::proptest! {
        #[test]
        fn parallel_sum_is_bitwise_the_serial_block_sum(xs in proptest::collection::vec(-1e6f64..1e6, 0..5000)) {
            for mode in [PrecisionMode::Standard, PrecisionMode::Extended] {
                let par = par_sum(0..xs.len(), mode, |i| xs[i]);
                let again = par_sum(0..xs.len(), mode, |i| xs[i]);
                proptest::prop_assert_eq!(par.to_bits(), again.to_bits());
                let serial = sum_ordered(xs.iter().copied(), mode);
                proptest::prop_assert!((par - serial).abs() <= 1e-9 * xs.iter().map(|x| x.abs()).sum::<f64>().max(1.0));
            }
        }

        #[test]
        fn extended_sum_is_exact_on_integers(xs in proptest::collection::vec(-(1i64 << 40)..(1i64 << 40), 0..2000)) {
            let exact: i64 = xs.iter().sum();
            let got = sum_ordered(xs.iter().map(|&x| x as f64), PrecisionMode::Extended);
            proptest::prop_assert_eq!(got, exact as f64);
        }
    }
}
