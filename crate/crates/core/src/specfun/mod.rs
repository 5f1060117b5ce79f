//! Complex special functions: log-gamma, Whittaker W on the positive real
//! axis, the Meijer G^{2,0}_{1,2} case that arises from the gamma-ratio
//! contour integrals, and vertical-line quadrature helpers.

mod gamma;
mod meijer;
pub mod quad;
mod whittaker;

pub use gamma::{
    digamma, gamma, gamma_real, ln_gamma_abs, ln_stirling_envelope, log_gamma, rgamma_real,
    stirling_envelope,
};
pub use meijer::{meijer_g_2012, meijer_g_2012_log, meijer_g_2012_line_quadrature, MeijerIndices};
pub use whittaker::{whittaker_w, whittaker_w_log, whittaker_w_scaled, WhittakerParams};

use thiserror::Error;

/// Errors raised by the special-function kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("non-finite argument")]
    NonFinite,
    #[error("gamma function pole at {0}")]
    GammaPole(f64),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid Meijer-G indices: {0}")]
    InvalidIndices(String),
    /// The unscaled value is below the smallest normal double. The natural
    /// log of the magnitude and the sign are carried so callers can keep
    /// working in log space.
    #[error("result underflows binary64 (ln|value| = {ln_abs})")]
    Underflow { ln_abs: f64, sign: f64 },
    #[error("no convergence: {0}")]
    Convergence(String),
}
