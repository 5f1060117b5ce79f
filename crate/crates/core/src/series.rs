//! Finite prefixes of arithmetic sequences.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Real values `c_1..c_N` together with a claimed growth exponent θ,
/// `|c_n| = O(n^θ)`. Index 1 is stored at position 0.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoefficientSeries {
    pub values: Vec<f64>,
    pub growth_exponent: f64,
}

impl CoefficientSeries {
    pub fn new(values: Vec<f64>, growth_exponent: f64) -> Self {
        Self { values, growth_exponent }
    }

    pub fn from_integers(values: &[BigInt], scale: f64, growth_exponent: f64) -> Self {
        let values = values.iter().map(|v| scale * bigint_to_f64(v)).collect();
        Self { values, growth_exponent }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `c_n` for `1 <= n <= len`.
    pub fn get(&self, n: usize) -> f64 {
        self.values[n - 1]
    }

    pub fn scaled(&self, lambda: f64) -> Self {
        Self {
            values: self.values.iter().map(|v| v * lambda).collect(),
            growth_exponent: self.growth_exponent,
        }
    }

    /// Least-squares slope of `ln|c_n|` against `ln n` over `[N/2, N]`,
    /// skipping zero entries. `None` when fewer than two usable points.
    pub fn fitted_slope(&self) -> Option<f64> {
        let n = self.values.len();
        let pts: Vec<(f64, f64)> = ((n / 2).max(1)..=n)
            .filter_map(|i| {
                let v = self.values[i - 1].abs();
                (v > 0.0).then(|| ((i as f64).ln(), v.ln()))
            })
            .collect();
        if pts.len() < 2 {
            return None;
        }
        let m = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
        (sxx > 0.0).then(|| sxy / sxx)
    }

    /// The declared growth is consistent with the data: fitted slope at
    /// most θ + 0.2.
    pub fn growth_consistent(&self) -> bool {
        self.fitted_slope().is_none_or(|s| s <= self.growth_exponent + 0.2)
    }

    /// Largest `|c_n| / n^θ` over the prefix; with θ this gives the
    /// envelope `K n^θ` used by tail bounds.
    pub fn growth_constant(&self) -> f64 {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| v.abs() / ((i + 1) as f64).powf(self.growth_exponent))
            .fold(0.0, f64::max)
    }
}

/// Nearest binary64 to an arbitrary-precision integer.
pub fn bigint_to_f64(v: &BigInt) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}
