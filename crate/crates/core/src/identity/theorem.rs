//! Assembly of the full identity, the residue-theorem closure and the
//! small-α sweep.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::lines::{c1_contour, c1_line_quadrature, mellin_contour, mellin_quadrature_lhs};
use super::residues::{residue_rk, zero_sum, ZeroSumPartial};
use super::series::{lambert_lhs, lambert_lhs_auto, whittaker_series_vk, whittaker_series_vk_auto};
use super::{IdentityError, TransformPair};
use crate::lfunc::{AfeConfig, SkInstance};
use crate::sum::PrecisionMode;
use crate::zeta::{bracket_zeros, find_zeros, Bracket, ZetaZero, DEFAULT_A0};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Truncations {
    pub n_terms: usize,
    pub zero_count: usize,
    /// Height and step of the weight-function quadrature inside every
    /// L-value.
    #[serde(rename = "quad_T")]
    pub quad_t: f64,
    pub quad_step: f64,
}

/// Both sides of the identity at one α.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub lhs: f64,
    pub v_k: f64,
    pub r_k: f64,
    pub zero_sum_partials: Vec<ZeroSumPartial>,
    /// `lhs − (v_k + r_k + last partial)`.
    pub residual: f64,
    pub truncations: Truncations,
    #[serde(skip)]
    pub warnings: Vec<String>,
}

impl TheoremReport {
    pub fn zero_sum(&self) -> f64 {
        self.zero_sum_partials.last().map_or(0.0, |p| p.cum)
    }
}

/// The identity with the first `zero_count` zeros of ζ, bracketed with the
/// default separation constant.
pub fn verify_main_identity(
    inst: &SkInstance,
    pair: TransformPair,
    zero_count: usize,
    n_terms: Option<usize>,
    mode: PrecisionMode,
) -> Result<TheoremReport, IdentityError> {
    let zeros = if zero_count == 0 { Vec::new() } else { find_zeros(zero_count)? };
    let brackets = bracket_zeros(&zeros, DEFAULT_A0);
    verify_main_identity_with_zeros(inst, pair, &zeros, &brackets, n_terms, mode)
}

/// The identity with caller-supplied zeros and brackets. With `n_terms`
/// unset each series stops at its own tail bound.
pub fn verify_main_identity_with_zeros(
    inst: &SkInstance,
    pair: TransformPair,
    zeros: &[ZetaZero],
    brackets: &[Bracket],
    n_terms: Option<usize>,
    mode: PrecisionMode,
) -> Result<TheoremReport, IdentityError> {
    let (lhs, vk) = match n_terms {
        Some(n) => (
            lambert_lhs(&inst.sk_petersson_coeffs(n)?, pair, n, mode)?,
            whittaker_series_vk(inst, pair, n, mode)?,
        ),
        None => (
            lambert_lhs_auto(&inst.sk_petersson_coeffs(inst.terms())?, pair, mode)?,
            whittaker_series_vk_auto(inst, pair, mode)?,
        ),
    };
    let r_k = residue_rk(inst, pair);
    let zs = zero_sum(inst, pair, zeros, brackets, mode)?;
    let residual = lhs.value - (vk.value + r_k + zs.total());
    let afe = AfeConfig::default();
    Ok(TheoremReport {
        lhs: lhs.value,
        v_k: vk.value,
        r_k,
        zero_sum_partials: zs.partials,
        residual,
        truncations: Truncations {
            n_terms: lhs.n_terms.max(vk.n_terms),
            zero_count: zeros.len(),
            quad_t: afe.height,
            quad_step: afe.step,
        },
        warnings: zs.warning.into_iter().collect(),
    })
}

/// The residue theorem between the c-line and the c₁-line, without any
/// series: `mellin − c1_line − r_k` should equal the full zero sum.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidueClosure {
    pub mellin: f64,
    pub c1_line: f64,
    pub r_k: f64,
    pub zero_sum: f64,
    /// `mellin − c1_line − r_k − zero_sum`.
    pub difference: f64,
}

pub fn residue_closure(
    inst: &SkInstance,
    pair: TransformPair,
    zeros: &[ZetaZero],
    brackets: &[Bracket],
    mode: PrecisionMode,
) -> Result<ResidueClosure, IdentityError> {
    let mellin = mellin_quadrature_lhs(inst, pair, &mellin_contour(inst, pair), mode)?.value;
    let c1_line = c1_line_quadrature(inst, pair, &c1_contour(inst), mode)?.value;
    let r_k = residue_rk(inst, pair);
    let zero_sum = zero_sum(inst, pair, zeros, brackets, mode)?.total();
    Ok(ResidueClosure { mellin, c1_line, r_k, zero_sum, difference: mellin - c1_line - r_k - zero_sum })
}

/// `90 ⟨F₁,F₂⟩ / π²`, the limit of `α^k · LHS` as α → 0.
pub fn asymptotic_target(inst: &SkInstance) -> f64 {
    90.0 * inst.petersson_scalar / (PI * PI)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub alpha: f64,
    pub scaled_lhs: f64,
    #[serde(skip)]
    pub n_terms: usize,
}

/// `α^k · Σ c_n e^{−4πnα}` over a decreasing list of α.
pub fn asymptotic_sweep(
    inst: &SkInstance,
    alphas: &[f64],
    mode: PrecisionMode,
) -> Result<Vec<SweepPoint>, IdentityError> {
    if alphas.windows(2).any(|w| w[1] >= w[0]) {
        return Err(IdentityError::InvalidArgument("alphas must be strictly decreasing".into()));
    }
    let c = inst.sk_petersson_coeffs(inst.terms())?;
    alphas
        .iter()
        .map(|&alpha| {
            let pair = TransformPair::new(alpha)?;
            let lhs = lambert_lhs_auto(&c, pair, mode)?;
            let scaled_lhs = (inst.k as f64 * alpha.ln()).exp() * lhs.value;
            Ok(SweepPoint { alpha, scaled_lhs, n_terms: lhs.n_terms })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_has_exact_fields() {
        let inst = SkInstance::new(10, 200, 1.0).unwrap();
        let p = TransformPair::new(1.0).unwrap();
        let r = verify_main_identity(&inst, p, 20, None, PrecisionMode::Standard).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(|s| s.as_str()).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["lhs", "r_k", "residual", "truncations", "v_k", "zero_sum_partials"]);
        let mut t: Vec<&str> = v["truncations"].as_object().unwrap().keys().map(|s| s.as_str()).collect();
        t.sort_unstable();
        assert_eq!(t, ["n_terms", "quad_T", "quad_step", "zero_count"]);
        assert!(v["zero_sum_partials"][0]["bracket"].is_u64());
        assert!(v["zero_sum_partials"][0]["cum"].is_f64());
        assert!(r.residual.abs() < 1e-9 * r.lhs.abs(), "{}", r.residual);
    }

    #[test]
    fn sweep_requires_decreasing_alphas() {
        let inst = SkInstance::new(10, 50, 1.0).unwrap();
        assert!(asymptotic_sweep(&inst, &[0.5, 1.0], PrecisionMode::Standard).is_err());
    }
}
