//! L-functions of level-one eigenforms by a smoothed approximate functional
//! equation.
//!
//! For a weight-w form with `Λ(s) = γ(s) L(s) = ε Λ(w−s)`,
//! `γ(s) = (2π)^{-s} Γ(s)`, and any `X > 0`:
//!
//! L(s) = Σ a_n n^{-s} V_s(n/X) + ε γ(w−s)/γ(s) Σ a_n n^{-(w−s)} V_{w−s}(nX),
//!
//! V_s(y) = (1/2πi) ∫_{(c)} y^{-u} G(u) γ(s+u)/γ(s) du/u,  G(u) = e^{Bu²}.
//!
//! The weight integral is discretised once per s by the trapezoidal rule on
//! `u = c + iv`; the sum over n then costs one Horner evaluation per term,
//! because the nodes form a geometric progression in `y^{-iv}`. Both sums
//! stay of the size of `L(s)` itself, so there is no exponential
//! cancellation at large `|Im s|`.

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::LfuncError;
use crate::series::CoefficientSeries;
use crate::specfun::log_gamma;
use crate::sum::{try_par_sum_complex, PrecisionMode};

/// Discretisation of the smoothed functional equation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AfeConfig {
    /// Balance point X between the two sums.
    pub x: f64,
    /// Gaussian width B in `G(u) = e^{Bu²}`.
    pub gaussian: f64,
    /// Abscissa c of the weight integral.
    pub abscissa: f64,
    pub step: f64,
    pub height: f64,
    /// Terms are kept while `y <= cutoff·(|s| + 4)`.
    pub cutoff: f64,
}

impl Default for AfeConfig {
    fn default() -> Self {
        Self { x: 1.0, gaussian: 0.125, abscissa: 2.0, step: 0.2, height: 32.0, cutoff: 16.0 }
    }
}

impl AfeConfig {
    /// Number of coefficients needed to evaluate at `s` with weight `w`.
    pub fn terms_needed(&self, weight: f64, s: Complex64) -> usize {
        let main = self.cutoff * (s.norm() + 4.0) * self.x;
        let dual = self.cutoff * ((weight - s).norm() + 4.0) / self.x;
        main.max(dual).ceil() as usize
    }
}

fn ln_gamma_factor(s: Complex64) -> Result<Complex64, LfuncError> {
    Ok(-s * (2.0 * PI).ln() + log_gamma(s)?)
}

/// `Σ_{n≤N} a_n n^{-s} V_s(n·scale)`.
fn smoothed_sum(
    a: &[f64],
    s: Complex64,
    scale: f64,
    cfg: &AfeConfig,
) -> Result<Complex64, LfuncError> {
    let y_max = cfg.cutoff * (s.norm() + 4.0);
    let n_max = (y_max / scale).ceil() as usize;
    if n_max > a.len() {
        return Err(LfuncError::InsufficientCoefficients { needed: n_max, available: a.len() });
    }
    let nodes = (2.0 * cfg.height / cfg.step).round() as usize + 1;
    let ln_gs = ln_gamma_factor(s)?;
    let mut g = Vec::with_capacity(nodes);
    for j in 0..nodes {
        let u = Complex64::new(cfg.abscissa, -cfg.height + j as f64 * cfg.step);
        let w = (u * u * cfg.gaussian + ln_gamma_factor(s + u)? - ln_gs).exp() / u;
        g.push(w * (cfg.step / (2.0 * PI)));
    }
    try_par_sum_complex(1..n_max + 1, PrecisionMode::Standard, |n| {
        let an = a[n - 1];
        if an == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let ln_n = (n as f64).ln();
        let ln_y = ln_n + scale.ln();
        let omega = Complex64::from_polar(1.0, -cfg.step * ln_y);
        let mut acc = Complex64::new(0.0, 0.0);
        for gj in g.iter().rev() {
            acc = acc * omega + gj;
        }
        // y^{-u_0} with u_0 = c − iH
        let base = Complex64::new(-cfg.abscissa * ln_y, cfg.height * ln_y).exp();
        Ok::<_, LfuncError>((-s * ln_n).exp() * base * acc * an)
    })
}

/// The two halves `(A, B)` with `L(s) = A + ε B`.
pub fn afe_parts(
    a: &[f64],
    weight: f64,
    s: Complex64,
    cfg: &AfeConfig,
) -> Result<(Complex64, Complex64), LfuncError> {
    let dual_s = Complex64::new(weight, 0.0) - s;
    if s.re + cfg.abscissa <= 0.5 || dual_s.re + cfg.abscissa <= 0.5 {
        return Err(LfuncError::NonConvergence(format!(
            "Re s = {} is outside the strip ({}, {}) handled by the smoothed sums",
            s.re,
            0.5 - cfg.abscissa,
            weight - 0.5 + cfg.abscissa
        )));
    }
    let main = smoothed_sum(a, s, 1.0 / cfg.x, cfg)?;
    let ratio = (ln_gamma_factor(dual_s)? - ln_gamma_factor(s)?).exp();
    let dual = ratio * smoothed_sum(a, dual_s, cfg.x, cfg)?;
    Ok((main, dual))
}

/// Root number of the functional equation, recovered from the requirement
/// that `L(s)` not depend on X.
pub fn determine_sign(a: &[f64], weight: f64) -> Result<i32, LfuncError> {
    let s = Complex64::new(0.5 * weight + 0.5, 1.5);
    let c1 = AfeConfig::default();
    let c2 = AfeConfig { x: 1.25, ..c1 };
    let (a1, b1) = afe_parts(a, weight, s, &c1)?;
    let (a2, b2) = afe_parts(a, weight, s, &c2)?;
    let eps = (a2 - a1) / (b1 - b2);
    for sign in [1, -1] {
        if (eps - sign as f64).norm() < 1e-6 {
            return Ok(sign);
        }
    }
    Err(LfuncError::SignUndetermined(eps.re))
}

/// A normalized Hecke eigenform of level one: weight, exact coefficients and
/// the root number of its L-function.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EigenformSpec {
    pub weight: u32,
    #[serde(skip)]
    pub coefficients: Vec<BigInt>,
    pub values: CoefficientSeries,
    pub sign: i32,
}

impl EigenformSpec {
    /// Wraps exact coefficients; the sign is determined numerically.
    pub fn new(weight: u32, coefficients: Vec<BigInt>) -> Result<Self, LfuncError> {
        let growth = (weight as f64 - 1.0) / 2.0;
        let values = CoefficientSeries::from_integers(&coefficients, 1.0, growth);
        let sign = determine_sign(&values.values, weight as f64)?;
        Ok(Self { weight, coefficients, values, sign })
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

/// Absolute bound on the Dirichlet-series tail accepted by [`eval_lf`].
const DIRECT_TAIL: f64 = 1e-15;

/// `Σ_{n>N} |a_n| n^{-σ} ≤ Σ_{n>N} 2√n n^{(w−1)/2−σ}`, or `None` when that
/// majorant diverges.
fn direct_tail(weight: u32, sigma: f64, n: usize) -> Option<f64> {
    let e = sigma - (weight as f64 - 1.0) / 2.0 - 1.5;
    (e > 0.0).then(|| 2.0 * (n as f64).powf(-e) / e)
}

/// `Σ a_n n^{-s}` over all stored coefficients.
fn direct_sum(f: &EigenformSpec, s: Complex64) -> Complex64 {
    let mut acc = crate::sum::ComplexAccumulator::new(PrecisionMode::Standard);
    for (i, an) in f.values.values.iter().enumerate() {
        if *an != 0.0 {
            acc.add((-s * ((i + 1) as f64).ln()).exp() * *an);
        }
    }
    acc.value()
}

impl AfeConfig {
    /// The default discretisation with `X = 2^{(σ − w/2)/2}`, moved towards 1
    /// as far as needed to fit in `available` coefficients. Away from the
    /// centre this keeps the side whose coefficients `a_n n^{-s}` grow
    /// short, where a fixed X = 1 would multiply the rounding floor of the
    /// weight function by those growing terms.
    pub fn balanced(weight: f64, s: Complex64, available: usize) -> Self {
        let base = Self::default();
        let target = 2f64.powf(0.5 * (s.re - 0.5 * weight));
        let main = base.cutoff * (s.norm() + 4.0);
        let dual = base.cutoff * ((weight - s).norm() + 4.0);
        let avail = available as f64;
        let x = if target >= 1.0 { target.min(avail / main).max(1.0) } else { target.max(dual / avail).min(1.0) };
        Self { x, ..base }
    }
}

/// L(f, s): the Dirichlet series itself where its tail is negligible,
/// otherwise the smoothed functional equation with [`AfeConfig::balanced`].
pub fn eval_lf(f: &EigenformSpec, s: Complex64) -> Result<Complex64, LfuncError> {
    if direct_tail(f.weight, s.re, f.len()).is_some_and(|t| t <= DIRECT_TAIL) {
        return Ok(direct_sum(f, s));
    }
    eval_lf_with(f, s, &AfeConfig::balanced(f.weight as f64, s, f.len()))
}

pub fn eval_lf_with(
    f: &EigenformSpec,
    s: Complex64,
    cfg: &AfeConfig,
) -> Result<Complex64, LfuncError> {
    let (a, b) = afe_parts(&f.values.values, f.weight as f64, s, cfg)?;
    Ok(a + b * f.sign as f64)
}

/// Completed `Λ(f, s) = (2π)^{-s} Γ(s) L(f, s)`.
pub fn completed_lf(f: &EigenformSpec, s: Complex64) -> Result<Complex64, LfuncError> {
    Ok(ln_gamma_factor(s)?.exp() * eval_lf(f, s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfunc::modular::eigenform_coefficients;
    use std::sync::OnceLock;

    fn f18() -> &'static EigenformSpec {
        static F: OnceLock<EigenformSpec> = OnceLock::new();
        F.get_or_init(|| EigenformSpec::new(18, eigenform_coefficients(18, 4096).unwrap()).unwrap())
    }

    #[test]
    fn sign_is_minus_one_for_weight_eighteen() {
        assert_eq!(f18().sign, -1);
    }

    #[test]
    fn absolute_convergence_region_matches_naive_sum() {
        let f = f18();
        let s = 13.0;
        let naive: f64 = f.values.values.iter().enumerate().map(|(i, a)| a * ((i + 1) as f64).powf(-s)).sum();
        let l = eval_lf(f, Complex64::new(s, 0.0)).unwrap();
        assert!((l.re - naive).abs() < 1e-10 * naive.abs(), "{l} vs {naive}");
        assert!(l.im.abs() < 1e-14);
    }

    #[test]
    fn completed_symmetry() {
        let f = f18();
        let s = Complex64::new(8.5, 5.0);
        let lhs = completed_lf(f, s).unwrap();
        let rhs = completed_lf(f, Complex64::new(18.0, 0.0) - s).unwrap() * f.sign as f64;
        assert!((lhs - rhs).norm() < 1e-8 * lhs.norm());
    }

    #[test]
    fn centre_value_is_real_and_vanishes_for_odd_sign() {
        let l = eval_lf(f18(), Complex64::new(9.0, 0.0)).unwrap();
        assert!(l.norm() < 1e-9, "{l}");
    }

    #[test]
    fn frozen_special_value() {
        // L(f, 10) for f = E6·Δ, from an independent incomplete-gamma series in mpmath
        let l = eval_lf(f18(), Complex64::new(10.0, 0.0)).unwrap();
        assert!((l.re - 0.484_096_460_746_456_76).abs() < 1e-12, "{l}");
    }

    #[test]
    fn independent_of_balance_point_high_up() {
        let f = f18();
        let s = Complex64::new(8.25, 118.0);
        let a = eval_lf(f, s).unwrap();
        let b = eval_lf_with(f, s, &AfeConfig { x: 1.2, ..AfeConfig::default() }).unwrap();
        assert!((a - b).norm() < 1e-9 * a.norm().max(1e-3), "{a} vs {b}");
    }

    #[test]
    fn far_right_uses_the_dirichlet_series() {
        let f = f18();
        let s = Complex64::new(25.0, 7.0);
        let naive: Complex64 =
            f.values.values.iter().take(40).enumerate().map(|(i, a)| Complex64::new((i + 1) as f64, 0.0).powc(-s) * a).sum();
        let l = eval_lf(f, s).unwrap();
        assert!((l - naive).norm() < 1e-15, "{l} vs {naive}");
        let t = Complex64::new(16.5, 3.0);
        let afe = eval_lf_with(f, t, &AfeConfig::balanced(18.0, t, f.len())).unwrap();
        let direct = eval_lf(f, t).unwrap();
        assert!((direct - afe).norm() < 1e-11, "{direct} vs {afe}");
    }

    #[test]
    fn insufficient_coefficients_reported() {
        let short = &f18().values.values[..50];
        let err = afe_parts(short, 18.0, Complex64::new(9.0, 30.0), &AfeConfig::default());
        assert!(matches!(err, Err(LfuncError::InsufficientCoefficients { .. })));
    }
}
