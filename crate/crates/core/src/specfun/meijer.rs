//! The Meijer G-function G^{2,0}_{1,2}(z | a1; b1, b2) on z > 0.
//!
//! It is the inverse Mellin transform
//! `(1/2πi) ∫ Γ(b1+s) Γ(b2+s) / Γ(a1+s) z^{-s} ds`
//! and reduces to a Whittaker function:
//! `G = z^{(b1+b2−1)/2} e^{−z/2} W_{κ,μ}(z)`, `κ = (b1+b2+1)/2 − a1`,
//! `μ = (b1−b2)/2`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::quad::{vertical_line_conj, ContourSpec};
use super::{log_gamma, whittaker_w_log, SpecFunError, WhittakerParams};
use crate::sum::PrecisionMode;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeijerIndices {
    pub a1: f64,
    pub b1: f64,
    pub b2: f64,
}

fn is_positive_integer(x: f64) -> bool {
    x >= 1.0 && x == x.round()
}

impl MeijerIndices {
    pub fn new(a1: f64, b1: f64, b2: f64) -> Result<Self, SpecFunError> {
        if !(a1.is_finite() && b1.is_finite() && b2.is_finite()) {
            return Err(SpecFunError::NonFinite);
        }
        for (name, d) in [("a1 − b1", a1 - b1), ("a1 − b2", a1 - b2)] {
            if is_positive_integer(d) {
                return Err(SpecFunError::InvalidIndices(format!(
                    "{name} = {d} is a positive integer"
                )));
            }
        }
        Ok(Self { a1, b1, b2 })
    }

    /// Indices of the gamma ratio `Γ(w)Γ(w−k+2)/Γ(w−k+½)` met when
    /// transforming the weight-k Lambert series.
    pub fn for_weight(k: u32) -> Self {
        let k = k as f64;
        Self { a1: 0.5 - k, b1: 0.0, b2: 2.0 - k }
    }

    /// `(κ, μ)` of the equivalent Whittaker function.
    pub fn whittaker_indices(&self) -> (f64, f64) {
        (0.5 * (self.b1 + self.b2 + 1.0) - self.a1, 0.5 * (self.b1 - self.b2))
    }

    /// The contour must pass to the right of every pole of the numerator.
    pub fn min_abscissa(&self) -> f64 {
        -self.b1.min(self.b2)
    }
}

/// `ln G^{2,0}_{1,2}(z)`; G is positive on z > 0 for the indices used here,
/// and the sign is returned separately for general input.
pub fn meijer_g_2012_log(idx: MeijerIndices, z: f64) -> Result<(f64, f64), SpecFunError> {
    let (kappa, mu) = idx.whittaker_indices();
    let (ln_w, sign) = whittaker_w_log(WhittakerParams::new(kappa, mu, z)?)?;
    Ok((0.5 * (idx.b1 + idx.b2 - 1.0) * z.ln() - 0.5 * z + ln_w, sign))
}

/// G^{2,0}_{1,2}(z | a1; b1, b2) through the Whittaker closed form.
pub fn meijer_g_2012(idx: MeijerIndices, z: f64) -> Result<f64, SpecFunError> {
    let idx = MeijerIndices::new(idx.a1, idx.b1, idx.b2)?;
    let (ln_abs, sign) = meijer_g_2012_log(idx, z)?;
    if sign != 0.0 && ln_abs < f64::MIN_POSITIVE.ln() {
        return Err(SpecFunError::Underflow { ln_abs, sign });
    }
    Ok(sign * ln_abs.exp())
}

/// Direct trapezoidal evaluation of the defining line integral. Independent
/// of the Whittaker route; used as its oracle.
pub fn meijer_g_2012_line_quadrature(
    idx: MeijerIndices,
    z: f64,
    spec: &ContourSpec,
) -> Result<f64, SpecFunError> {
    if spec.abscissa <= idx.min_abscissa() {
        return Err(SpecFunError::InvalidParameters(format!(
            "abscissa {} must exceed {}",
            spec.abscissa,
            idx.min_abscissa()
        )));
    }
    let ln_z = z.ln();
    vertical_line_conj(spec, PrecisionMode::Standard, |s: Complex64| {
        let l = log_gamma(s + idx.b1)? + log_gamma(s + idx.b2)? - log_gamma(s + idx.a1)?
            - s * ln_z;
        Ok::<_, SpecFunError>(l.exp())
    })
    .map(|r| r.value)
}
