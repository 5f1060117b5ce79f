//! Vertical-line integrals standing behind each analytic step:
//!
//! * the c-line, `Re s = c > k`, whose integral is the Lambert series;
//! * the c₁-line, `k−3 < Re s < k−2`, left of every pole;
//! * the d₁-line, `k < Re w < k+1`, its image under the functional
//!   equation, which expands into the Whittaker series;
//! * the single-term integral `I_k(n, β)`, a Meijer G-function.

use num_complex::Complex64;

use super::{IdentityError, TransformPair, QUAD_REL_TOL};
use crate::lfunc::SkInstance;
use crate::specfun::quad::{vertical_line_conj, ContourSpec, LineIntegral};
use crate::specfun::{log_gamma, meijer_g_2012, meijer_g_2012_line_quadrature, MeijerIndices};
use crate::sum::PrecisionMode;
use crate::zeta::zeta;

const C_STEP: f64 = 0.1;
const C1_STEP: f64 = 0.05;
const D1_STEP: f64 = 0.05;
const IK_STEP: f64 = 0.1;

/// Heights are chosen where the gamma envelope has dropped by e^{-40}.
const LN_HEIGHT_DROP: f64 = -40.0;
const MAX_HEIGHT: f64 = 400.0;

/// Smallest integer height T at which
/// `Σ ln|Γ(num + iT)| − Σ ln|Γ(den + iT)| + poly·ln(1+T)` lies
/// `LN_HEIGHT_DROP` below its value at T = 0.
fn stirling_height(num: &[f64], den: &[f64], poly: f64) -> f64 {
    let ln_at = |t: f64| -> f64 {
        let lg = |s: f64| log_gamma(Complex64::new(s, t)).map(|v| v.re).unwrap_or(f64::NAN);
        num.iter().map(|&s| lg(s)).sum::<f64>() - den.iter().map(|&s| lg(s)).sum::<f64>()
            + poly * (1.0 + t).ln()
    };
    let base = ln_at(0.0);
    let mut t = 1.0;
    while t < MAX_HEIGHT && ln_at(t) - base > LN_HEIGHT_DROP {
        t += 1.0;
    }
    t
}

fn require_abscissa(spec: &ContourSpec, lo: f64, hi: f64, line: &str) -> Result<(), IdentityError> {
    if spec.abscissa <= lo || spec.abscissa >= hi {
        return Err(IdentityError::InvalidArgument(format!(
            "{line} abscissa must lie in ({lo}, {hi}), got {}",
            spec.abscissa
        )));
    }
    Ok(())
}

fn require_tail(r: LineIntegral) -> Result<LineIntegral, IdentityError> {
    let target = QUAD_REL_TOL * r.value.abs();
    if !(r.tail_estimate <= target) {
        return Err(IdentityError::TailTooLarge {
            abscissa: r.spec.abscissa,
            height: r.spec.height,
            tail: r.tail_estimate,
            target,
        });
    }
    Ok(r)
}

/// `Γ(s) D(s) (4πα)^{-s} / ζ(2s−2k+4)`.
fn lambert_mellin_integrand(
    inst: &SkInstance,
    pair: TransformPair,
    s: Complex64,
) -> Result<Complex64, IdentityError> {
    let k = inst.k as f64;
    let ln_x = (4.0 * std::f64::consts::PI * pair.alpha).ln();
    let g = (log_gamma(s)? - s * ln_x).exp();
    Ok(g * inst.eval_d(s)? / zeta(2.0 * s - 2.0 * k + 4.0)?)
}

/// The c-line for [`mellin_quadrature_lhs`]: abscissa at the saddle point
/// `4πα` of `Γ(s)(4πα)^{-s}`, kept within `[k+3, k+16]`.
pub fn mellin_contour(inst: &SkInstance, pair: TransformPair) -> ContourSpec {
    let k = inst.k as f64;
    let c = (4.0 * std::f64::consts::PI * pair.alpha).clamp(k + 3.0, k + 16.0);
    let height = stirling_height(&[c], &[], 1.0);
    ContourSpec { abscissa: c, height, step: C_STEP }
}

/// `(1/2πi) ∫_{(c)} Γ(s) D(s) (4πα)^{-s} / ζ(2s−2k+4) ds`, which equals the
/// Lambert series for `c > k`.
pub fn mellin_quadrature_lhs(
    inst: &SkInstance,
    pair: TransformPair,
    spec: &ContourSpec,
    mode: PrecisionMode,
) -> Result<LineIntegral, IdentityError> {
    let k = inst.k as f64;
    require_abscissa(spec, k, f64::INFINITY, "c-line")?;
    require_tail(vertical_line_conj(spec, mode, |s| lambert_mellin_integrand(inst, pair, s))?)
}

/// The c₁-line at `k − 5/2`.
pub fn c1_contour(inst: &SkInstance) -> ContourSpec {
    let c1 = inst.k as f64 - 2.5;
    ContourSpec { abscissa: c1, height: stirling_height(&[c1], &[], 8.0), step: C1_STEP }
}

/// The Lambert-series Mellin integrand integrated on the c₁-line; by the
/// residue theorem it is the c-line value minus `R_k` and every `R_ρ`.
pub fn c1_line_quadrature(
    inst: &SkInstance,
    pair: TransformPair,
    spec: &ContourSpec,
    mode: PrecisionMode,
) -> Result<LineIntegral, IdentityError> {
    let k = inst.k as f64;
    require_abscissa(spec, k - 3.0, k - 2.0, "c1-line")?;
    require_tail(vertical_line_conj(spec, mode, |s| lambert_mellin_integrand(inst, pair, s))?)
}

/// The d₁-line at `k + 1/2`.
pub fn d1_contour(inst: &SkInstance) -> ContourSpec {
    let k = inst.k as f64;
    let d1 = k + 0.5;
    ContourSpec { abscissa: d1, height: stirling_height(&[d1, d1 - k + 2.0], &[d1 - k + 0.5], 4.0), step: D1_STEP }
}

/// `(β^{2k−2}/π^{3/2}) (1/2πi) ∫_{(d₁)} Γ(w)Γ(w−k+2) D(w) (4πβ)^{-w} / (Γ(w−k+½) ζ(2w+1−2k)) dw`,
/// the integral representation of V_k.
pub fn d1_line_quadrature(
    inst: &SkInstance,
    pair: TransformPair,
    spec: &ContourSpec,
    mode: PrecisionMode,
) -> Result<LineIntegral, IdentityError> {
    let k = inst.k as f64;
    require_abscissa(spec, k, k + 1.0, "d1-line")?;
    let ln_x = (4.0 * std::f64::consts::PI * pair.beta).ln();
    let ln_pref = (2.0 * k - 2.0) * pair.beta.ln() - 1.5 * std::f64::consts::PI.ln();
    require_tail(vertical_line_conj(spec, mode, |w: Complex64| {
        let g = log_gamma(w)? + log_gamma(w - k + 2.0)? - log_gamma(w - k + 0.5)? - w * ln_x + ln_pref;
        Ok::<_, IdentityError>(g.exp() * inst.eval_d(w)? / zeta(2.0 * w + 1.0 - 2.0 * k)?)
    })?)
}

/// Line for `I_k(n, β)` through the saddle point of the integrand,
/// `Re w ≈ max(4πnβ, k + ½)`. Any abscissa right of `k − 2` represents the
/// same integral; at the saddle the integrand does not cancel.
pub fn ik_saddle_contour(n: usize, beta: f64, k: u32) -> ContourSpec {
    let k = k as f64;
    let z = 4.0 * std::f64::consts::PI * n as f64 * beta;
    let c = z.max(k + 0.5);
    ContourSpec { abscissa: c, height: stirling_height(&[c, c - k + 2.0], &[c - k + 0.5], 0.0), step: IK_STEP }
}

/// `I_k(n, β) = (1/2πi) ∫ Γ(w)Γ(w−k+2)(4πnβ)^{-w}/Γ(w−k+½) dw` by
/// quadrature on `spec`, and in closed form
/// `(4πnβ)^{(1−k)/2} W_{k/2+1, k/2−1}(4πnβ) e^{−2πnβ}`.
pub fn ik_closed_vs_quadrature(
    n: usize,
    beta: f64,
    k: u32,
    spec: &ContourSpec,
) -> Result<(f64, f64), IdentityError> {
    if n == 0 || !(beta.is_finite() && beta > 0.0) {
        return Err(IdentityError::InvalidArgument(format!("need n >= 1 and beta > 0, got n={n}, beta={beta}")));
    }
    let idx = MeijerIndices::for_weight(k);
    let z = 4.0 * std::f64::consts::PI * n as f64 * beta;
    let quad = meijer_g_2012_line_quadrature(idx, z, spec)?;
    let closed = meijer_g_2012(idx, z)?;
    Ok((quad, closed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ik_components_agree() {
        for (n, beta) in [(1, 1.0), (5, 0.5)] {
            let spec = ik_saddle_contour(n, beta, 10);
            let (q, c) = ik_closed_vs_quadrature(n, beta, 10, &spec).unwrap();
            assert!((q - c).abs() < 1e-9 * c.abs(), "n={n} beta={beta}: {q} vs {c}");
        }
    }

    #[test]
    fn ik_depends_on_product_only() {
        let (_, a) = ik_closed_vs_quadrature(2, 0.75, 10, &ik_saddle_contour(2, 0.75, 10)).unwrap();
        let (_, b) = ik_closed_vs_quadrature(3, 0.5, 10, &ik_saddle_contour(3, 0.5, 10)).unwrap();
        assert!((a - b).abs() <= 1e-14 * a.abs());
    }

    #[test]
    fn contour_constraints() {
        let inst = SkInstance::new(10, 50, 1.0).unwrap();
        let p = TransformPair::new(1.0).unwrap();
        let bad = ContourSpec { abscissa: 8.5, height: 10.0, step: 0.1 };
        assert!(c1_line_quadrature(&inst, p, &bad, PrecisionMode::Standard).is_err());
        assert!(d1_line_quadrature(&inst, p, &bad, PrecisionMode::Standard).is_err());
        assert!(mellin_quadrature_lhs(&inst, p, &bad, PrecisionMode::Standard).is_err());
        assert!(mellin_contour(&inst, p).abscissa > 10.0);
        let c1 = c1_contour(&inst).abscissa;
        assert!(c1 > 7.0 && c1 < 8.0);
    }
}
