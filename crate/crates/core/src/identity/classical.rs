//! Classical validators: the Hardy–Littlewood Möbius identity and the
//! constant term of `y^{12}|Δ(x+iy)|²`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::residues::ZeroSumPartial;
use super::series::SeriesValue;
use super::{envelope_tail, IdentityError, TransformPair, SERIES_REL_TOL};
use crate::lfunc::delta_tau;
use crate::series::bigint_to_f64;
use crate::specfun::log_gamma;
use crate::sum::{par_sum, Accumulator, PrecisionMode};
use crate::zeta::{mobius_values, riesz_sum_with_table, zeta_derivative, Bracket, ZetaZero, SIMPLICITY_THRESHOLD};

/// Both sides of the Hardy–Littlewood identity at one pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HlReport {
    pub lhs: f64,
    /// Last bracketed partial of the zero side.
    pub rhs: f64,
    pub rhs_partials: Vec<ZeroSumPartial>,
    /// Truncation estimate of the two Möbius sums together.
    pub lhs_tail: f64,
}

/// Hardy–Littlewood with the pair evaluated at `(a, b) = (πα, πβ)`:
///
/// √a Σ μ(n)/n e^{−(a/n)²/π} − √b Σ μ(n)/n e^{−(b/n)²/π}
///   = −(√π / 2√b) Σ_ρ Γ((1−ρ)/2) (b/√π)^ρ / ζ′(ρ).
///
/// The Möbius sums are taken in completed form, with `e^{−x} − 1` in place
/// of `e^{−x}` (the difference is the vanishing series Σ μ(n)/n), which
/// makes their tails `O(x/N²)`.
pub fn hl_identity(
    pair: TransformPair,
    zeros: &[ZetaZero],
    brackets: &[Bracket],
    n: usize,
    mode: PrecisionMode,
) -> Result<HlReport, IdentityError> {
    if n == 0 {
        return Err(IdentityError::InvalidArgument("need at least one Möbius term".into()));
    }
    let a = PI * pair.alpha;
    let b = PI * pair.beta;
    let mu = mobius_values(n);
    let sa = riesz_sum_with_table(a * a / PI, n, &mu, mode);
    let sb = riesz_sum_with_table(b * b / PI, n, &mu, mode);
    let lhs = a.sqrt() * sa.completed - b.sqrt() * sb.completed;
    let nf = n as f64;
    let lhs_tail = (a.sqrt() * a * a + b.sqrt() * b * b) / (2.0 * PI * nf * nf);

    let ln_base = (b / PI.sqrt()).ln();
    let terms: Vec<Result<f64, IdentityError>> = zeros
        .par_iter()
        .map(|z| {
            let rho = z.rho();
            let zp = zeta_derivative(rho)?;
            if zp.norm() < SIMPLICITY_THRESHOLD {
                return Err(IdentityError::SimplicityViolation { index: z.index, gamma: z.gamma, derivative: zp.norm() });
            }
            let term = |r: Complex64, d: Complex64| -> Result<Complex64, IdentityError> {
                Ok((log_gamma((1.0 - r) / 2.0)? + r * ln_base).exp() / d)
            };
            Ok((term(rho, zp)? + term(rho.conj(), zp.conj())?).re)
        })
        .collect();
    let scale = -PI.sqrt() / (2.0 * b.sqrt());
    let mut acc = Accumulator::new(mode);
    let mut rhs_partials = Vec::with_capacity(brackets.len());
    for (i, bracket) in brackets.iter().enumerate() {
        for &m in &bracket.members {
            let pos = zeros.iter().position(|z| z.index == m).ok_or_else(|| {
                IdentityError::InvalidArgument(format!("bracket {} names zero {m}, which was not supplied", i + 1))
            })?;
            match &terms[pos] {
                Ok(t) => acc.add(*t),
                Err(e) => return Err(e.clone()),
            }
        }
        rhs_partials.push(ZeroSumPartial { bracket: i + 1, cum: scale * acc.value() });
    }
    Ok(HlReport { lhs, rhs: rhs_partials.last().map_or(0.0, |p| p.cum), rhs_partials, lhs_tail })
}

fn tau_squared(n: usize) -> Vec<f64> {
    delta_tau(n).iter().map(|t| bigint_to_f64(t).powi(2)).collect()
}

/// `|τ(n)|² ≤ d(n)² n^{11} ≤ 4 n^{12}`.
fn c0_tail(y: f64, n: usize) -> f64 {
    (12.0 * y.ln() + 4f64.ln()).exp() * envelope_tail(0.0, 12.0, 4.0 * PI * y, n)
}

/// `c₀(y) = y^{12} Σ_{n≤N} τ(n)² e^{−4πny}`, the constant Fourier term of
/// `y^{12}|Δ(x+iy)|²`.
pub fn zagier_c0(y: f64, n: usize, mode: PrecisionMode) -> Result<SeriesValue, IdentityError> {
    if !(y.is_finite() && y >= TransformPair::MIN) || n == 0 {
        return Err(IdentityError::InvalidArgument(format!("need y >= {} and N >= 1, got y={y}, N={n}", TransformPair::MIN)));
    }
    let t2 = tau_squared(n);
    let rate = 4.0 * PI * y;
    let ln_y12 = 12.0 * y.ln();
    let value = par_sum(0..n, mode, |i| t2[i] * (ln_y12 - rate * (i + 1) as f64).exp());
    let tail_bound = c0_tail(y, n);
    let target = SERIES_REL_TOL * value.abs();
    if tail_bound > target {
        return Err(IdentityError::TruncationInsufficient { what: "c0 series".into(), terms: n, bound: tail_bound, target });
    }
    Ok(SeriesValue { value, tail_bound, n_terms: n })
}

/// [`zagier_c0`] with N grown by doubling until the tail bound holds.
pub fn zagier_c0_auto(y: f64, mode: PrecisionMode) -> Result<SeriesValue, IdentityError> {
    let mut n = 16usize;
    loop {
        match zagier_c0(y, n, mode) {
            Err(IdentityError::TruncationInsufficient { .. }) if n < 1 << 22 => n *= 2,
            other => return other,
        }
    }
}

/// Plain loop over `y^{12} τ(n)² e^{−4πny}`, an oracle for [`zagier_c0`].
pub fn zagier_c0_naive(y: f64, n: usize) -> f64 {
    let t2 = tau_squared(n);
    let mut s = 0.0;
    for (i, t) in t2.iter().enumerate() {
        s += t * (-4.0 * PI * y * (i + 1) as f64).exp();
    }
    s * y.powi(12)
}
