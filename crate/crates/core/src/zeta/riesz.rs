//! The Riesz-type sum `Σ_{n≤N} μ(n)/n · exp(−x/n²)`.

use serde::{Deserialize, Serialize};

use super::mobius::mobius_values;
use crate::sum::{Accumulator, PrecisionMode};

/// Result of [`riesz_sum`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RieszSum {
    /// The literal partial sum `Σ_{n≤N} μ(n)/n · e^{−x/n²}`.
    pub value: f64,
    /// `Σ_{n≤N} μ(n)/n · (e^{−x/n²} − 1)`: the same sum with the vanishing
    /// series `Σ μ(n)/n` subtracted term by term. Its tail beyond N is at
    /// most `x/(2N²)` in absolute value.
    pub completed: f64,
    /// Estimated distance of `value` from the infinite sum:
    /// `|Σ_{n≤N} μ(n)/n| + x/(2N²)`.
    pub tail_estimate: f64,
    /// Set when `tail_estimate` exceeds 1e-12 of `|value|`.
    pub warning: Option<String>,
}

/// Both partial sums for one `x > 0`, using a precomputed Möbius table
/// covering at least `1..=n`.
pub fn riesz_sum_with_table(x: f64, n: usize, mu: &[i8], mode: PrecisionMode) -> RieszSum {
    let mut lit = Accumulator::new(mode);
    let mut comp = Accumulator::new(mode);
    let mut head = Accumulator::new(mode);
    for (k, &m) in mu.iter().enumerate().take(n + 1).skip(1) {
        if m == 0 {
            continue;
        }
        let kf = k as f64;
        let w = m as f64 / kf;
        let e = -x / (kf * kf);
        lit.add(w * e.exp());
        comp.add(w * e.exp_m1());
        head.add(w);
    }
    let value = lit.value();
    let nf = n as f64;
    let tail_estimate = head.value().abs() + x / (2.0 * nf * nf);
    let warning = (tail_estimate > 1e-12 * value.abs()).then(|| {
        format!("truncation at N={n} leaves an estimated error {tail_estimate:.3e} for x={x}")
    });
    RieszSum { value, completed: comp.value(), tail_estimate, warning }
}

/// `Σ_{n≤N} μ(n)/n · exp(−x/n²)` with its completed counterpart and a
/// truncation diagnostic.
pub fn riesz_sum(x: f64, n: usize) -> Result<RieszSum, super::ZetaError> {
    if !(x.is_finite() && x > 0.0) || n == 0 {
        return Err(super::ZetaError::InvalidArgument(format!(
            "riesz_sum needs x > 0 and N >= 1, got x={x}, N={n}"
        )));
    }
    let mu = mobius_values(n);
    Ok(riesz_sum_with_table(x, n, &mu, PrecisionMode::Standard))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_x_recovers_plain_partial_sum() {
        let mu = mobius_values(1000);
        let plain: f64 = (1..=1000).map(|n| mu[n] as f64 / n as f64).sum();
        let r = riesz_sum(1e-12, 1000).unwrap();
        assert!((r.value - plain).abs() < 1e-12);
    }

    #[test]
    fn matches_naive_loop() {
        let n = 100_000;
        let mu = mobius_values(n);
        let mut naive = 0.0;
        for k in 1..=n {
            naive += mu[k] as f64 / k as f64 * (-1.0 / (k * k) as f64).exp();
        }
        let r = riesz_sum(1.0, n).unwrap();
        assert!((r.value - naive).abs() < 1e-12);
    }

    #[test]
    fn completed_sum_is_small_for_large_x() {
        let n = 1_000_000;
        let mu = mobius_values(n);
        for x in [10.0f64, 1e2, 1e3, 1e4] {
            let r = riesz_sum_with_table(x, n, &mu, PrecisionMode::Standard);
            assert!(r.completed.abs() * x.powf(0.25 - 0.01) < 10.0, "x={x}: {}", r.completed);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(riesz_sum(0.0, 10).is_err());
        assert!(riesz_sum(1.0, 0).is_err());
    }
}
