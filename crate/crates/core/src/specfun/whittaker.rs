//! Whittaker W_{κ,μ}(z) for real parameters and real z > 0.
//!
//! Everything is computed through the scaled function
//! `Ŵ(z) = W_{κ,μ}(z)·e^{z/2}·z^{-κ} = z^a U(a, b, z)` with `a = ½ + μ − κ`,
//! `b = 1 + 2μ`, which tends to 1 as z → ∞ and stays representable long
//! after `W` itself has underflowed.
//!
//! * `z >= 1`: the Laplace-type integral
//!   `Ŵ = Γ(a)^{-1} ∫_0^∞ e^{-x} x^{a-1} (1 + x/z)^{μ+κ-½} dx` for `a > 0`;
//!   for `a <= 0` the value is reached by recurrence in κ from the two
//!   nearest parameters with `a ∈ (0, 2]`.
//! * `z < 1`: the convergent expansion of U about the origin (logarithmic
//!   form when b is an integer, the Kummer M combination otherwise).
//! * `a` a non-positive integer: U is a polynomial and is summed exactly.

use serde::{Deserialize, Serialize};

use super::{digamma, gamma_real, ln_gamma_abs, quad::exp_sinh, rgamma_real, SpecFunError};

/// Below this argument the origin expansion is used.
const SERIES_SWITCH: f64 = 1.0;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Parameters of one Whittaker evaluation `W_{κ,μ}(z)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WhittakerParams {
    pub kappa: f64,
    pub mu: f64,
    pub z: f64,
}

impl WhittakerParams {
    pub fn new(kappa: f64, mu: f64, z: f64) -> Result<Self, SpecFunError> {
        if !(kappa.is_finite() && mu.is_finite() && z.is_finite()) {
            return Err(SpecFunError::NonFinite);
        }
        if z <= 0.0 {
            return Err(SpecFunError::InvalidParameters(format!(
                "Whittaker argument must be positive, got {z}"
            )));
        }
        Ok(Self { kappa, mu, z })
    }

    fn a(&self) -> f64 {
        0.5 + self.mu.abs() - self.kappa
    }

    fn b(&self) -> f64 {
        1.0 + 2.0 * self.mu.abs()
    }
}

/// `W_{κ,μ}(z)·e^{z/2}·z^{-κ}`.
pub fn whittaker_w_scaled(p: WhittakerParams) -> Result<f64, SpecFunError> {
    let p = WhittakerParams::new(p.kappa, p.mu, p.z)?;
    let a = p.a();
    if a <= 0.0 && a == a.round() {
        return Ok(polynomial_scaled(-a as u32, p.b(), p.z));
    }
    if p.z >= SERIES_SWITCH {
        large_z_scaled(p)
    } else {
        series_scaled(p)
    }
}

/// `(ln|W_{κ,μ}(z)|, sign W)`.
pub fn whittaker_w_log(p: WhittakerParams) -> Result<(f64, f64), SpecFunError> {
    let w = whittaker_w_scaled(p)?;
    if w == 0.0 {
        return Ok((f64::NEG_INFINITY, 0.0));
    }
    Ok((-0.5 * p.z + p.kappa * p.z.ln() + w.abs().ln(), w.signum()))
}

/// `W_{κ,μ}(z)`; if the value is below the normal range an
/// [`SpecFunError::Underflow`] carries its logarithm.
pub fn whittaker_w(p: WhittakerParams) -> Result<f64, SpecFunError> {
    let (ln_abs, sign) = whittaker_w_log(p)?;
    if sign == 0.0 {
        return Ok(0.0);
    }
    if ln_abs < f64::MIN_POSITIVE.ln() {
        return Err(SpecFunError::Underflow { ln_abs, sign });
    }
    Ok(sign * ln_abs.exp())
}

/// Integral representation, valid for `a > 0`.
fn integral_scaled(a: f64, mu: f64, kappa: f64, z: f64) -> Result<f64, SpecFunError> {
    let power = mu + kappa - 0.5;
    let ln_norm = ln_gamma_abs(a)?;
    exp_sinh(
        |ln_x| {
            let x = ln_x.exp();
            -x + (a - 1.0) * ln_x + power * (x / z).ln_1p() - ln_norm
        },
        1e-14,
    )
}

fn large_z_scaled(p: WhittakerParams) -> Result<f64, SpecFunError> {
    let mu = p.mu.abs();
    let a = p.a();
    let z = p.z;
    if a > 0.0 {
        return integral_scaled(a, mu, p.kappa, z);
    }
    // Step κ down by m so that a0 = a + m lies in (0, 1]; then
    // Ŵ_{κ+1} = (1 − 2κ/z) Ŵ_κ − ((κ−μ−½)(κ+μ−½)/z²) Ŵ_{κ−1}.
    let m = (-a).floor() + 1.0;
    let kappa0 = p.kappa - m;
    let mut prev = integral_scaled(a + m + 1.0, mu, kappa0 - 1.0, z)?;
    let mut cur = integral_scaled(a + m, mu, kappa0, z)?;
    let mut kappa = kappa0;
    for _ in 0..m as usize {
        let next =
            (1.0 - 2.0 * kappa / z) * cur - ((kappa - mu - 0.5) * (kappa + mu - 0.5) / (z * z)) * prev;
        prev = cur;
        cur = next;
        kappa += 1.0;
    }
    Ok(cur)
}

fn pochhammer(x: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, i| acc * (x + i as f64))
}

/// `z^{-m} U(−m, b, z)` for a non-negative integer m.
fn polynomial_scaled(m: u32, b: f64, z: f64) -> f64 {
    // U(−m, b, z) = (−1)^m Σ_s C(m,s) (b+s)_{m−s} (−z)^s
    let mut sum = 0.0;
    let mut binom = 1.0;
    for s in 0..=m {
        sum += binom * pochhammer(b + s as f64, m - s) * (-z).powi(s as i32);
        binom = binom * (m - s) as f64 / (s + 1) as f64;
    }
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * sum * z.powi(-(m as i32))
}

/// Kummer M(a, b, z) by its power series (used for |z| < 1).
fn kummer_m(a: f64, b: f64, z: f64) -> Result<f64, SpecFunError> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..500 {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            return Ok(sum);
        }
    }
    Err(SpecFunError::Convergence("Kummer M series".into()))
}

fn series_scaled(p: WhittakerParams) -> Result<f64, SpecFunError> {
    let a = p.a();
    let b = p.b();
    let z = p.z;
    let u = if b == b.round() {
        u_integer_b(a, b as u32 - 1, z)?
    } else {
        let t1 = gamma_real(1.0 - b)? * rgamma_real(a - b + 1.0) * kummer_m(a, b, z)?;
        let t2 = gamma_real(b - 1.0)?
            * rgamma_real(a)
            * z.powf(1.0 - b)
            * kummer_m(a - b + 1.0, 2.0 - b, z)?;
        t1 + t2
    };
    Ok(z.powf(a) * u)
}

/// U(a, n+1, z) for non-negative integer n, a not a non-positive integer:
///
/// U = (−1)^{n+1}/(n! Γ(a−n)) Σ_k (a)_k/((n+1)_k k!) z^k
///       [ln z + ψ(a+k) − ψ(1+k) − ψ(n+k+1)]
///   + Γ(a)^{-1} Σ_{k=1}^{n} (k−1)! (1−a+k)_{n−k}/(n−k)! z^{−k}.
fn u_integer_b(a: f64, n: u32, z: f64) -> Result<f64, SpecFunError> {
    let nf = n as f64;
    let mut finite = 0.0;
    for k in 1..=n {
        let fact_km1 = pochhammer(1.0, k - 1);
        let fact_nmk = pochhammer(1.0, n - k);
        finite += fact_km1 * pochhammer(1.0 - a + k as f64, n - k) / fact_nmk * z.powi(-(k as i32));
    }
    finite *= rgamma_real(a);

    let lead = rgamma_real(a - nf);
    if lead == 0.0 {
        return Ok(finite);
    }
    let sign = if n.is_multiple_of(2) { -1.0 } else { 1.0 };
    let lead = sign * lead / pochhammer(1.0, n);
    let ln_z = z.ln();
    let mut psi_a = digamma(a)?;
    let mut psi_1 = -EULER_GAMMA;
    let mut psi_n = -EULER_GAMMA + (1..=n).map(|j| 1.0 / j as f64).sum::<f64>();
    let mut coeff = 1.0;
    let mut sum = 0.0;
    for k in 0..500u32 {
        let kf = k as f64;
        let term = coeff * (ln_z + psi_a - psi_1 - psi_n);
        sum += term;
        if k > 2 && term.abs() <= 1e-17 * sum.abs().max(1e-300) {
            return Ok(lead * sum + finite);
        }
        coeff *= (a + kf) / ((nf + 1.0 + kf) * (kf + 1.0)) * z;
        psi_a += 1.0 / (a + kf);
        psi_1 += 1.0 / (kf + 1.0);
        psi_n += 1.0 / (nf + kf + 1.0);
    }
    Err(SpecFunError::Convergence("logarithmic U series".into()))
}

#[cfg(test)]
pub(crate) fn scaled_by_series(p: WhittakerParams) -> Result<f64, SpecFunError> {
    series_scaled(p)
}

#[cfg(test)]
pub(crate) fn scaled_by_integral(p: WhittakerParams) -> Result<f64, SpecFunError> {
    large_z_scaled(p)
}
