//! Coefficient pipelines and L-function evaluation: Ramanujan's τ, the
//! weight-(2k−2) eigenform, the Saito–Kurokawa model Dirichlet series and
//! its functional equation.

mod dirichlet;
mod lfun;
mod modular;
mod sk;

pub use dirichlet::{
    dirichlet_convolve, dirichlet_convolve_naive, power_series, square_mobius_series,
    square_power_series,
};
pub use lfun::{
    afe_parts, completed_lf, determine_sign, eval_lf, eval_lf_with, AfeConfig, EigenformSpec,
};
pub use modular::{
    deligne_bound_holds, delta_tau, divisor_power_sums, eigenform_by_product,
    eigenform_coefficients,
};
pub use sk::{
    eigenform_2km2, FeCheck, Factor, LFunctionModel, SkInstance, DEFAULT_EIGENFORM_TERMS,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LfuncError {
    #[error("no supported eigenform of weight {0} (supported: 18, 22, 26)")]
    UnsupportedWeight(u32),
    #[error("need {needed} coefficients, only {available} available")]
    InsufficientCoefficients { needed: usize, available: usize },
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("functional-equation sign not close to +-1 (estimate {0})")]
    SignUndetermined(f64),
    #[error("pole of D(s) at s = {0}")]
    Pole(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Zeta(#[from] crate::zeta::ZetaError),
    #[error(transparent)]
    SpecFun(#[from] crate::specfun::SpecFunError),
}
