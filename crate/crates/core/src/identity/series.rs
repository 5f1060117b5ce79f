//! The two exponentially convergent series of the identity: the Lambert
//! series itself and the Whittaker series V_k.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::{envelope_tail, IdentityError, TransformPair, SERIES_REL_TOL};
use crate::lfunc::SkInstance;
use crate::series::CoefficientSeries;
use crate::specfun::{meijer_g_2012_log, MeijerIndices};
use crate::sum::{par_sum, Accumulator, PrecisionMode};

/// A truncated series with its rigorous-envelope tail bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesValue {
    pub value: f64,
    pub tail_bound: f64,
    pub n_terms: usize,
}

fn lambert_tail(c: &CoefficientSeries, alpha: f64, n: usize) -> f64 {
    let k = c.growth_constant();
    envelope_tail(k.ln(), c.growth_exponent, 4.0 * PI * alpha, n)
}

fn check_tail(what: &str, value: f64, tail: f64, n: usize) -> Result<(), IdentityError> {
    let target = SERIES_REL_TOL * value.abs();
    if tail > target {
        return Err(IdentityError::TruncationInsufficient { what: what.into(), terms: n, bound: tail, target });
    }
    Ok(())
}

/// `Σ_{n≤N} c_n e^{−4πnα}` with compensated summation.
///
/// The tail is bounded by `K n^θ` with θ the series' growth exponent and K
/// its largest observed `|c_n|/n^θ`; it must fall below 1e−12 of the sum.
pub fn lambert_lhs(
    c: &CoefficientSeries,
    pair: TransformPair,
    n: usize,
    mode: PrecisionMode,
) -> Result<SeriesValue, IdentityError> {
    if n == 0 || n > c.len() {
        return Err(IdentityError::InvalidArgument(format!(
            "need 1 <= N <= {} coefficients, got N = {n}",
            c.len()
        )));
    }
    let rate = 4.0 * PI * pair.alpha;
    let value = par_sum(0..n, mode, |i| c.values[i] * (-rate * (i + 1) as f64).exp());
    let tail_bound = lambert_tail(c, pair.alpha, n);
    check_tail("Lambert series", value, tail_bound, n)?;
    Ok(SeriesValue { value, tail_bound, n_terms: n })
}

/// [`lambert_lhs`] at the smallest N whose tail bound meets the target.
pub fn lambert_lhs_auto(
    c: &CoefficientSeries,
    pair: TransformPair,
    mode: PrecisionMode,
) -> Result<SeriesValue, IdentityError> {
    let rate = 4.0 * PI * pair.alpha;
    let mut acc = Accumulator::new(mode);
    for n in 1..=c.len() {
        acc.add(c.values[n - 1] * (-rate * n as f64).exp());
        let tail = lambert_tail(c, pair.alpha, n);
        if tail <= SERIES_REL_TOL * acc.value().abs() {
            return lambert_lhs(c, pair, n, mode);
        }
    }
    let n = c.len().max(1);
    Err(IdentityError::TruncationInsufficient {
        what: "Lambert series".into(),
        terms: n,
        bound: lambert_tail(c, pair.alpha, n),
        target: SERIES_REL_TOL * acc.value().abs(),
    })
}

/// `ln(β^{2k−2} / π^{3/2})`.
fn vk_ln_prefactor(k: u32, beta: f64) -> f64 {
    (2.0 * k as f64 - 2.0) * beta.ln() - 1.5 * PI.ln()
}

/// Signed term `a(n) · G(4πnβ) · β^{2k−2}/π^{3/2}`, together with the ratio
/// of `G` to its envelope `e^{−z} z^{3/2}`.
fn vk_term(a_n: f64, k: u32, beta: f64, n: usize) -> Result<(f64, f64), IdentityError> {
    let z = 4.0 * PI * n as f64 * beta;
    let (ln_g, sign) = meijer_g_2012_log(MeijerIndices::for_weight(k), z)?;
    let ratio = (ln_g + z - 1.5 * z.ln()).exp();
    if a_n == 0.0 || sign == 0.0 {
        return Ok((0.0, ratio));
    }
    let ln_abs = vk_ln_prefactor(k, beta) + ln_g + a_n.abs().ln();
    Ok((a_n.signum() * sign * ln_abs.exp(), ratio))
}

fn vk_tail(a: &CoefficientSeries, k: u32, beta: f64, ratio: f64, n: usize) -> f64 {
    let z1 = 4.0 * PI * beta;
    let ln_k = vk_ln_prefactor(k, beta) + a.growth_constant().ln() + ratio.max(1.0).ln() + 1.5 * z1.ln();
    envelope_tail(ln_k, a.growth_exponent + 1.5, z1, n)
}

/// `V_k = (β^{2k−2}/π^{3/2}) Σ_{n≤N} a(n) (4πnβ)^{(1−k)/2} W_{k/2+1, k/2−1}(4πnβ) e^{−2πnβ}`.
///
/// Each term is the Meijer function `G^{2,0}_{1,2}(4πnβ | ½−k; 0, 2−k)`,
/// evaluated in log space so that very small terms do not underflow
/// prematurely. The tail is bounded with the envelope `e^{−z} z^{3/2}`.
pub fn whittaker_series_vk(
    inst: &SkInstance,
    pair: TransformPair,
    n: usize,
    mode: PrecisionMode,
) -> Result<SeriesValue, IdentityError> {
    let a = inst.a_series(n)?;
    let mut acc = Accumulator::new(mode);
    let mut ratio = 1.0f64;
    for m in 1..=n {
        let (t, r) = vk_term(a.get(m), inst.k, pair.beta, m)?;
        acc.add(t);
        ratio = ratio.max(r);
    }
    let value = acc.value();
    let tail_bound = vk_tail(&inst.a_series(inst.terms())?, inst.k, pair.beta, ratio, n);
    check_tail("Whittaker series", value, tail_bound, n)?;
    Ok(SeriesValue { value, tail_bound, n_terms: n })
}

/// [`whittaker_series_vk`] at the smallest N whose tail bound meets the
/// target.
pub fn whittaker_series_vk_auto(
    inst: &SkInstance,
    pair: TransformPair,
    mode: PrecisionMode,
) -> Result<SeriesValue, IdentityError> {
    let a = inst.a_series(inst.terms())?;
    let mut acc = Accumulator::new(mode);
    let mut ratio = 1.0f64;
    let mut tail = f64::INFINITY;
    for n in 1..=a.len() {
        let (t, r) = vk_term(a.get(n), inst.k, pair.beta, n)?;
        acc.add(t);
        ratio = ratio.max(r);
        tail = vk_tail(&a, inst.k, pair.beta, ratio, n);
        if tail <= SERIES_REL_TOL * acc.value().abs() {
            return Ok(SeriesValue { value: acc.value(), tail_bound: tail, n_terms: n });
        }
    }
    Err(IdentityError::TruncationInsufficient {
        what: "Whittaker series".into(),
        terms: a.len(),
        bound: tail,
        target: SERIES_REL_TOL * acc.value().abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{whittaker_w, WhittakerParams};
    use std::sync::OnceLock;

    fn k10() -> &'static SkInstance {
        static I: OnceLock<SkInstance> = OnceLock::new();
        I.get_or_init(|| SkInstance::new(10, 600, 1.0).unwrap())
    }

    #[test]
    fn trivial_lambert_inputs() {
        let p = TransformPair::new(0.7).unwrap();
        let zeros = CoefficientSeries::new(vec![0.0; 50], 9.0);
        assert_eq!(lambert_lhs_auto(&zeros, p, PrecisionMode::Standard).unwrap().value, 0.0);
        let mut one = vec![0.0; 50];
        one[0] = 1.0;
        let s = CoefficientSeries::new(one, 9.0);
        let v = lambert_lhs_auto(&s, p, PrecisionMode::Standard).unwrap().value;
        assert!((v - (-4.0 * PI * 0.7f64).exp()).abs() < 1e-18);
    }

    #[test]
    fn lambert_matches_naive_loop() {
        let c = k10().sk_petersson_coeffs(600).unwrap();
        let p = TransformPair::new(1.0).unwrap();
        let v = lambert_lhs_auto(&c, p, PrecisionMode::Extended).unwrap();
        let naive: f64 = (1..=v.n_terms).map(|n| c.get(n) * (-4.0 * PI * n as f64).exp()).sum();
        assert!((v.value - naive).abs() < 1e-12 * naive.abs());
        assert!(lambert_lhs(&c, p, 3, PrecisionMode::Standard).is_err());
    }

    #[test]
    fn single_vk_term() {
        let beta = 1.3f64;
        let z = 4.0 * PI * beta;
        let w = whittaker_w(WhittakerParams::new(6.0, 4.0, z).unwrap()).unwrap();
        let expected = beta.powi(18) / PI.powf(1.5) * z.powf(-4.5) * w * (-z / 2.0).exp();
        let (t, _) = vk_term(1.0, 10, beta, 1).unwrap();
        assert!((t - expected).abs() < 1e-12 * expected.abs(), "{t} vs {expected}");
    }

    #[test]
    fn vk_vanishes_fast_for_large_beta() {
        let inst = k10();
        let mut prev = f64::INFINITY;
        for beta in [10.0, 20.0, 40.0] {
            let p = TransformPair::new(1.0 / beta).unwrap();
            let v = whittaker_series_vk_auto(inst, p, PrecisionMode::Standard).unwrap();
            let scaled = v.value.abs() * f64::powi(beta, 10);
            assert!(scaled < prev);
            prev = scaled;
        }
        assert!(prev < 1e-100);
    }
}
