//! Both sides of the Lambert-series identity
//!
//! Σ c_n e^{−4πnα} = V_k(α) + R_k(α) + Σ_ρ R_ρ(α),   αβ = 1,
//!
//! the contour-integral oracles that validate each analytic step, the
//! small-α sweep and two classical validators.

mod classical;
mod lines;
mod oracles;
mod residues;
mod series;
mod theorem;

pub use classical::{hl_identity, zagier_c0, zagier_c0_auto, zagier_c0_naive, HlReport};
pub use lines::{
    c1_contour, c1_line_quadrature, d1_contour, d1_line_quadrature, ik_closed_vs_quadrature,
    ik_saddle_contour, mellin_contour, mellin_quadrature_lhs,
};
pub use oracles::{oracle_suite, OracleCheck};
pub use residues::{
    residue_rk, residue_rk_from_residue, zero_residue, zero_sum, ZeroSum, ZeroSumPartial,
};
pub use series::{
    lambert_lhs, lambert_lhs_auto, whittaker_series_vk, whittaker_series_vk_auto, SeriesValue,
};
pub use theorem::{
    asymptotic_sweep, asymptotic_target, residue_closure, verify_main_identity,
    verify_main_identity_with_zeros, ResidueClosure, SweepPoint, TheoremReport, Truncations,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lfunc::LfuncError;
use crate::specfun::SpecFunError;
use crate::zeta::ZetaError;

/// Series are truncated once the tail bound falls below this fraction of
/// the partial sum.
pub const SERIES_REL_TOL: f64 = 1e-12;

/// Largest admissible tail estimate of a line integral, relative to its
/// value.
pub const QUAD_REL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IdentityError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{what}: tail bound {bound:e} after {terms} terms exceeds target {target:e}")]
    TruncationInsufficient { what: String, terms: usize, bound: f64, target: f64 },
    #[error("line integral at Re s = {abscissa}, height {height}: tail estimate {tail:e} exceeds {target:e}")]
    TailTooLarge { abscissa: f64, height: f64, tail: f64, target: f64 },
    #[error("zero {index} at gamma = {gamma}: |zeta'(rho)| = {derivative:e} below the simplicity threshold")]
    SimplicityViolation { index: usize, gamma: f64, derivative: f64 },
    #[error(transparent)]
    Lfunc(#[from] LfuncError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

/// `(α, β)` with `αβ = 1`; β is stored as `1/α`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransformPair {
    pub alpha: f64,
    pub beta: f64,
}

impl TransformPair {
    /// Smallest α (and β) accepted; tail bounds degenerate below it.
    pub const MIN: f64 = 1e-4;

    pub fn new(alpha: f64) -> Result<Self, IdentityError> {
        if !(alpha.is_finite() && (Self::MIN..=1.0 / Self::MIN).contains(&alpha)) {
            return Err(IdentityError::InvalidArgument(format!(
                "alpha must lie in [{}, {}], got {alpha}",
                Self::MIN,
                1.0 / Self::MIN
            )));
        }
        Ok(Self { alpha, beta: 1.0 / alpha })
    }

    pub fn swapped(&self) -> Self {
        Self { alpha: self.beta, beta: self.alpha }
    }
}

/// Upper bound on `Σ_{m>n} e^{ln_k} m^θ e^{−rate·m}` by a geometric majorant
/// started at `m = n + 1` (successive ratios only shrink for θ ≥ 0).
pub(crate) fn envelope_tail(ln_k: f64, theta: f64, rate: f64, n: usize) -> f64 {
    if ln_k == f64::NEG_INFINITY {
        return 0.0;
    }
    let m = (n + 1) as f64;
    let q = (theta * (1.0 + 1.0 / m).ln() - rate).exp();
    if q >= 1.0 {
        return f64::INFINITY;
    }
    (ln_k + theta * m.ln() - rate * m).exp() / (1.0 - q)
}
