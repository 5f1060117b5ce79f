//! Critical-line zeros of ζ(s).
//!
//! Sign changes of the Hardy Z-function are located on a grid whose spacing
//! is an eighth of the mean zero gap `2π / ln(t/2π)`, refined by bisection,
//! and the census is certified against the argument-principle count
//! `N(T) = θ(T)/π + 1 + S(T)`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::eval::{hardy_z, theta, zeta, zeta_derivative};
use super::ZetaError;

/// Ordinates refined below this half-width.
pub const DEFAULT_ZERO_TOL: f64 = 1e-9;

/// Below this `|ζ′(ρ)|` a zero is treated as possibly multiple.
pub const SIMPLICITY_THRESHOLD: f64 = 1e-6;

const SCAN_START: f64 = 10.0;
const WINDOW: f64 = 8.0;

/// A nontrivial zero `ρ = 1/2 + iγ`, with Z changing sign on
/// `[γ − tol, γ + tol]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZetaZero {
    pub index: usize,
    pub gamma: f64,
    pub tol: f64,
}

impl ZetaZero {
    pub fn rho(&self) -> Complex64 {
        Complex64::new(0.5, self.gamma)
    }

    /// Re-evaluates the sign-change certificate.
    pub fn certificate_holds(&self) -> Result<bool, ZetaError> {
        Ok(hardy_z(self.gamma - self.tol)? * hardy_z(self.gamma + self.tol)? < 0.0)
    }
}

/// Mean spacing of zeros near height t.
fn mean_gap(t: f64) -> f64 {
    2.0 * PI / (t / (2.0 * PI)).ln().max(1.0)
}

/// Riemann–von Mangoldt main term `(T/2π) ln(T/2πe) + 7/8`.
pub fn riemann_von_mangoldt(t: f64) -> f64 {
    let x = t / (2.0 * PI);
    x * (x.ln() - 1.0) + 0.875
}

fn bisect(mut lo: f64, mut hi: f64, mut zlo: f64, tol: f64) -> Result<f64, ZetaError> {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let zm = hardy_z(mid)?;
        if zm == 0.0 {
            return Ok(mid);
        }
        if (zm > 0.0) == (zlo > 0.0) {
            lo = mid;
            zlo = zm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Sign changes of Z in `[a, b)` on a grid of `refine` points per mean gap,
/// each refined to half-width `tol`.
fn scan_window(a: f64, b: f64, refine: f64, tol: f64) -> Result<Vec<f64>, ZetaError> {
    let mut out = Vec::new();
    let mut t = a;
    let mut zt = hardy_z(t)?;
    while t < b {
        let next = (t + mean_gap(t) / refine).min(b);
        let zn = hardy_z(next)?;
        if (zt > 0.0) != (zn > 0.0) {
            out.push(bisect(t, next, zt, tol)?);
        }
        t = next;
        zt = zn;
    }
    Ok(out)
}

fn scan(a: f64, b: f64, refine: f64, tol: f64) -> Result<Vec<f64>, ZetaError> {
    let n = ((b - a) / WINDOW).ceil().max(1.0) as usize;
    let parts: Vec<Result<Vec<f64>, ZetaError>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let lo = a + i as f64 * WINDOW;
            let hi = (lo + WINDOW).min(b);
            scan_window(lo, hi, refine, tol)
        })
        .collect();
    let mut all = Vec::new();
    for p in parts {
        all.extend(p?);
    }
    Ok(all)
}

/// Argument of ζ(σ + iT) continued from σ = 3 down to σ = 1/2.
fn arg_on_critical_line(t: f64) -> Result<f64, ZetaError> {
    let mut sigma = 3.0;
    let mut z = zeta(Complex64::new(sigma, t))?;
    let mut arg = z.arg();
    let mut step = 0.1;
    while sigma > 0.5 {
        let next = (sigma - step).max(0.5);
        let zn = zeta(Complex64::new(next, t))?;
        let delta = (zn / z).arg();
        if delta.abs() > PI / 8.0 && step > 1e-6 {
            step *= 0.5;
            continue;
        }
        arg += delta;
        sigma = next;
        z = zn;
        step = (step * 1.5).min(0.1);
    }
    if z.norm() < 1e-10 {
        return Err(ZetaError::InvalidArgument(format!(
            "height {t} is too close to a zero for the argument principle"
        )));
    }
    Ok(arg)
}

/// Number of zeros with `0 < Im ρ <= T`, by the argument principle.
pub fn zero_count(t: f64) -> Result<u64, ZetaError> {
    if !(t.is_finite() && t > 0.0) {
        return Err(ZetaError::InvalidArgument(format!("height must be positive, got {t}")));
    }
    if t < 14.0 {
        return Ok(0);
    }
    let n = theta(t) / PI + 1.0 + arg_on_critical_line(t)? / PI;
    let rounded = n.round();
    if (n - rounded).abs() > 0.05 {
        return Err(ZetaError::Convergence(format!(
            "argument-principle count {n} at T={t} is not near an integer"
        )));
    }
    Ok(rounded as u64)
}

/// The first `count` zeros on the critical line, refined to `tol`, with the
/// census certified by [`zero_count`] and every zero checked for
/// simplicity.
pub fn find_zeros_with_tol(count: usize, tol: f64) -> Result<Vec<ZetaZero>, ZetaError> {
    if count == 0 {
        return Err(ZetaError::InvalidArgument("count must be at least 1".into()));
    }
    let mut refine = 8.0;
    let mut last = (0.0, 0u64);
    for _ in 0..4 {
        let mut end = SCAN_START + WINDOW;
        while riemann_von_mangoldt(end) < count as f64 + 3.0 {
            end += WINDOW;
        }
        let mut found = scan(SCAN_START, end, refine, tol)?;
        while found.len() < count + 1 {
            let more = scan(end, end + 4.0 * WINDOW, refine, tol)?;
            found.extend(more);
            end += 4.0 * WINDOW;
        }
        let height = 0.5 * (found[count - 1] + found[count]);
        let expected = zero_count(height)?;
        if expected as usize == count {
            let zeros: Vec<ZetaZero> = found[..count]
                .iter()
                .enumerate()
                .map(|(i, &gamma)| ZetaZero { index: i + 1, gamma, tol })
                .collect();
            for z in &zeros {
                let d = zeta_derivative(z.rho())?.norm();
                if d <= SIMPLICITY_THRESHOLD {
                    return Err(ZetaError::MultipleZeroSuspected { gamma: z.gamma, derivative: d });
                }
            }
            return Ok(zeros);
        }
        last = (height, expected);
        refine *= 2.0;
    }
    Err(ZetaError::MissedZero { height: last.0, expected: last.1, found: count as u64 })
}

/// [`find_zeros_with_tol`] with the default tolerance 1e-9.
pub fn find_zeros(count: usize) -> Result<Vec<ZetaZero>, ZetaError> {
    find_zeros_with_tol(count, DEFAULT_ZERO_TOL)
}

/// JSON array `[{"index":1,"gamma":…,"tol":…}, …]`.
pub fn zeros_to_json(zeros: &[ZetaZero]) -> String {
    serde_json::to_string_pretty(zeros).expect("zeros serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_zeros() {
        let z = find_zeros(2).unwrap();
        assert!((z[0].gamma - 14.134_725_141_734_693).abs() < 1e-8);
        assert!(z[1].gamma > 20.0 && z[1].gamma < 22.0);
        for zero in &z {
            assert!(zero.certificate_holds().unwrap());
        }
        assert!(zeta_derivative(z[0].rho()).unwrap().norm() > 0.5);
    }

    #[test]
    fn counts() {
        assert_eq!(zero_count(100.0).unwrap(), 29);
        assert_eq!(zero_count(14.0).unwrap(), 0);
        assert_eq!(zero_count(15.0).unwrap(), 1);
        let n50 = zero_count(50.0).unwrap() as f64;
        assert!((n50 - riemann_von_mangoldt(50.0)).abs() <= 2.0);
    }

    #[test]
    fn json_shape() {
        let z = [ZetaZero { index: 1, gamma: 14.5, tol: 1e-9 }];
        let v: serde_json::Value = serde_json::from_str(&zeros_to_json(&z)).unwrap();
        assert_eq!(v[0]["index"], 1);
        assert_eq!(v[0]["tol"], 1e-9);
    }
}
