//! Riemann zeta machinery: evaluation, critical-line zeros, bracketing,
//! Möbius tables and the Riesz-type sum.

mod bracket;
mod eval;
mod mobius;
mod riesz;
mod zeros;

pub use bracket::{bracket_zeros, Bracket, DEFAULT_A0};
pub use eval::{hardy_z, theta, zeta, zeta_derivative, zeta_real, zeta_with_derivative};
pub use mobius::{mobius_sieve, mobius_values};
pub use riesz::{riesz_sum, riesz_sum_with_table, RieszSum};
pub use zeros::{
    find_zeros, find_zeros_with_tol, riemann_von_mangoldt, zero_count, zeros_to_json, ZetaZero,
    DEFAULT_ZERO_TOL, SIMPLICITY_THRESHOLD,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("pole of zeta at s = 1")]
    Pole,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("zero census mismatch below T = {height}: argument principle gives {expected}, sign changes give {found}")]
    MissedZero { height: f64, expected: u64, found: u64 },
    #[error("possible multiple zero at gamma = {gamma}: |zeta'(rho)| = {derivative:e}")]
    MultipleZeroSuspected { gamma: f64, derivative: f64 },
    #[error("no convergence: {0}")]
    Convergence(String),
    #[error(transparent)]
    SpecFun(#[from] crate::specfun::SpecFunError),
}
