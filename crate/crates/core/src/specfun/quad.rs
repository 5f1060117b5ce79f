//! Quadrature rules used across the crate.
//!
//! Vertical-line integrals `(1/2πi) ∫_{(c)} f(s) ds` are computed with the
//! trapezoidal rule in `Im s`, which converges geometrically for integrands
//! analytic in a strip around the line. When the integrand satisfies
//! `f(s̄) = conj f(s)` only the upper half-line is sampled.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::SpecFunError;
use crate::sum::{Accumulator, ComplexAccumulator, PrecisionMode};

/// Vertical line `Re s = abscissa`, truncated to `|Im s| <= height` and
/// sampled with spacing `step`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    pub abscissa: f64,
    pub height: f64,
    pub step: f64,
}

impl ContourSpec {
    pub fn new(abscissa: f64, height: f64, step: f64) -> Result<Self, SpecFunError> {
        if !(abscissa.is_finite() && height.is_finite() && step.is_finite()) {
            return Err(SpecFunError::NonFinite);
        }
        if height <= 0.0 || step <= 0.0 || step > height {
            return Err(SpecFunError::InvalidParameters(format!(
                "contour needs 0 < step <= height, got step={step}, height={height}"
            )));
        }
        Ok(Self { abscissa, height, step })
    }

    /// Number of nodes on the upper half-line, including `Im s = 0`.
    pub fn half_nodes(&self) -> usize {
        (self.height / self.step).ceil() as usize + 1
    }

    pub fn node(&self, j: usize) -> Complex64 {
        Complex64::new(self.abscissa, j as f64 * self.step)
    }
}

/// Result of a vertical-line quadrature.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineIntegral {
    pub value: f64,
    /// `|f|` at the outermost node.
    pub edge_magnitude: f64,
    /// Estimated contribution of `|Im s| > height`, from the decay rate
    /// observed over the last unit of height.
    pub tail_estimate: f64,
    pub spec: ContourSpec,
}

fn tail_from_edge(mags: &[f64], step: f64) -> f64 {
    let n = mags.len();
    let edge = mags[n - 1];
    if edge == 0.0 {
        return 0.0;
    }
    let back = ((1.0 / step).ceil() as usize).clamp(1, n - 1);
    let earlier = mags[n - 1 - back];
    let rate = if earlier > 0.0 { (earlier / edge).ln() / (back as f64 * step) } else { 0.0 };
    if rate <= 1e-3 {
        f64::INFINITY
    } else {
        edge / (rate * PI)
    }
}

/// `(1/2πi) ∫_{(c)} f(s) ds` for a conjugate-symmetric integrand, returned
/// as a real number. Nodes are evaluated in parallel and reduced in index
/// order.
pub fn vertical_line_conj<F, E>(
    spec: &ContourSpec,
    mode: PrecisionMode,
    f: F,
) -> Result<LineIntegral, E>
where
    F: Fn(Complex64) -> Result<Complex64, E> + Sync,
    E: Send,
{
    let n = spec.half_nodes();
    let vals: Vec<Result<Complex64, E>> =
        (0..n).into_par_iter().map(|j| f(spec.node(j))).collect();
    let mut acc = Accumulator::new(mode);
    let mut mags = Vec::with_capacity(n);
    for (j, v) in vals.into_iter().enumerate() {
        let v = v?;
        mags.push(v.norm());
        acc.add(if j == 0 { 0.5 * v.re } else { v.re });
    }
    Ok(LineIntegral {
        value: acc.value() * spec.step / PI,
        edge_magnitude: mags[n - 1],
        tail_estimate: tail_from_edge(&mags, spec.step),
        spec: *spec,
    })
}

/// `(1/2πi) ∫_{(c)} f(s) ds` sampling both half-lines; no symmetry assumed.
pub fn vertical_line_full<F, E>(
    spec: &ContourSpec,
    mode: PrecisionMode,
    f: F,
) -> Result<Complex64, E>
where
    F: Fn(Complex64) -> Result<Complex64, E> + Sync,
    E: Send,
{
    let half = spec.half_nodes() as i64 - 1;
    let vals: Vec<Result<Complex64, E>> = (-half..=half)
        .into_par_iter()
        .map(|j| f(Complex64::new(spec.abscissa, j as f64 * spec.step)))
        .collect();
    let mut acc = ComplexAccumulator::new(mode);
    for v in vals {
        acc.add(v?);
    }
    Ok(acc.value() * (spec.step / (2.0 * PI)))
}

/// Grows the height of a conjugate-symmetric line integral in blocks until
/// the estimated tail falls below `rel_tol·|value|`, or `max_height` is
/// reached (reported through a tail estimate above tolerance).
pub fn vertical_line_adaptive<F, E>(
    abscissa: f64,
    step: f64,
    initial_height: f64,
    max_height: f64,
    rel_tol: f64,
    mode: PrecisionMode,
    f: F,
) -> Result<LineIntegral, E>
where
    F: Fn(Complex64) -> Result<Complex64, E> + Sync,
    E: Send,
{
    let block = ((initial_height / step).ceil() as usize).max(16);
    let mut acc = Accumulator::new(mode);
    let mut mags: Vec<f64> = Vec::new();
    let mut start = 0usize;
    loop {
        let end = start + block;
        let vals: Vec<Result<Complex64, E>> = (start..end)
            .into_par_iter()
            .map(|j| f(Complex64::new(abscissa, j as f64 * step)))
            .collect();
        for (i, v) in vals.into_iter().enumerate() {
            let v = v?;
            mags.push(v.norm());
            acc.add(if start + i == 0 { 0.5 * v.re } else { v.re });
        }
        start = end;
        let height = (start - 1) as f64 * step;
        let value = acc.value() * step / PI;
        let tail = tail_from_edge(&mags, step);
        if tail <= rel_tol * value.abs() || height >= max_height {
            return Ok(LineIntegral {
                value,
                edge_magnitude: *mags.last().unwrap(),
                tail_estimate: tail,
                spec: ContourSpec { abscissa, height, step },
            });
        }
    }
}

/// `∫_0^∞ exp(ln_f(x)) dx` by exp-sinh (double-exponential) quadrature.
///
/// The integrand is supplied through its logarithm as a function of `ln x`,
/// which keeps integrable endpoint singularities `x^{a-1}` with small `a`
/// representable. The step is halved until two successive levels agree to
/// `rel_tol`.
pub fn exp_sinh<F>(ln_f: F, rel_tol: f64) -> Result<f64, SpecFunError>
where
    F: Fn(f64) -> f64,
{
    let half_pi = 0.5 * PI;
    let term = |t: f64| -> f64 {
        let ln_x = half_pi * t.sinh();
        let ln_w = ln_x + (half_pi * t.cosh()).ln();
        let v = (ln_f(ln_x) + ln_w).exp();
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    // Sum over the grid t = offset + j·h, j ∈ ℤ, walking outwards from the
    // centre until the terms are negligible.
    let sweep = |h: f64, offset: f64, scale: f64| -> f64 {
        let mut acc = Accumulator::new(PrecisionMode::Standard);
        for right in [true, false] {
            let mut quiet = 0;
            let mut j = 0usize;
            loop {
                let t = if right { offset + j as f64 * h } else { offset - (j + 1) as f64 * h };
                let v = term(t);
                acc.add(v);
                let small = v.abs() <= 1e-20 * scale.max(acc.value().abs());
                quiet = if small { quiet + 1 } else { 0 };
                j += 1;
                if quiet >= 4 || t.abs() > 12.0 {
                    break;
                }
            }
        }
        acc.value()
    };
    let mut h = 0.5;
    let mut total = sweep(h, 0.0, 0.0);
    let mut estimate = total * h;
    for _ in 0..12 {
        // Midpoints of the current grid: t = ±(h/2 + j·h).
        let mid = sweep(h, 0.5 * h, total.abs());
        total += mid;
        h *= 0.5;
        let next = total * h;
        if (next - estimate).abs() <= rel_tol * next.abs() {
            return Ok(next);
        }
        estimate = next;
    }
    Err(SpecFunError::Convergence(format!(
        "exp-sinh quadrature did not reach relative tolerance {rel_tol}"
    )))
}
