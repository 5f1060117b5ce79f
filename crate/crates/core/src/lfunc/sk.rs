//! The Saito–Kurokawa model: `D(s) = C·ζ(s−k+1)·ζ(s−k+2)·L(f, s)` for the
//! weight-(2k−2) eigenform f, its coefficient sequences and functional
//! equation.

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::dirichlet::{dirichlet_convolve, power_series, square_mobius_series, square_power_series};
use super::lfun::{eval_lf, EigenformSpec};
use super::modular::eigenform_coefficients;
use super::LfuncError;
use crate::series::CoefficientSeries;
use crate::specfun::{ln_gamma_abs, log_gamma};
use crate::zeta::zeta;

/// Eigenform coefficients kept for L-evaluation regardless of the requested
/// series length; enough for the smoothed sums up to `|s| ≈ 250`.
pub const DEFAULT_EIGENFORM_TERMS: usize = 4096;

/// The normalized eigenform of weight `2k−2` (k = 10, 12, 14), with `n`
/// exact coefficients.
pub fn eigenform_2km2(k: u32, n: usize) -> Result<EigenformSpec, LfuncError> {
    if k < 2 {
        return Err(LfuncError::UnsupportedWeight(0));
    }
    let weight = 2 * k - 2;
    EigenformSpec::new(weight, eigenform_coefficients(weight, n)?)
}

/// One multiplicative piece of a Dirichlet series.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Factor {
    /// `ζ(s − shift)`.
    ZetaShift(f64),
    /// `L(f, s)` of the attached eigenform.
    Eigenform,
}

/// Factorisation, gamma completion and reflection of the model series.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LFunctionModel {
    pub factors: Vec<Factor>,
    /// `D*(s) = (2π)^{-2s} Γ(s + g₀) Γ(s + g₁) D(s)`.
    pub gamma_shifts: [f64; 2],
    /// `D*(s) = D*(reflection − s)`.
    pub reflection: f64,
}

impl LFunctionModel {
    pub fn saito_kurokawa(k: u32) -> Self {
        let k = k as f64;
        Self {
            factors: vec![Factor::ZetaShift(k - 1.0), Factor::ZetaShift(k - 2.0), Factor::Eigenform],
            gamma_shifts: [0.0, 2.0 - k],
            reflection: 2.0 * k - 2.0,
        }
    }
}

/// One point of the functional-equation self-check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FeCheck {
    pub s: Complex64,
    pub direct: Complex64,
    pub reflected: Complex64,
    pub rel_err: f64,
}

/// A Saito–Kurokawa test instance of weight k.
#[derive(Clone, Debug)]
pub struct SkInstance {
    pub k: u32,
    pub f: EigenformSpec,
    /// Overall scale C of D(s).
    pub normalization: f64,
    /// `⟨F₁, F₂⟩ = (k−1)!/(4^k π^{k+2}) · Res_{s=k} D(s)`.
    pub petersson_scalar: f64,
    pub model: LFunctionModel,
    c_exact: Vec<BigInt>,
    a_exact: Vec<BigInt>,
}

impl SkInstance {
    /// Builds the instance with `n_terms` exact coefficients `c_n`, `a(n)`.
    pub fn new(k: u32, n_terms: usize, normalization: f64) -> Result<Self, LfuncError> {
        if k < 10 || k % 2 == 1 {
            return Err(LfuncError::InvalidArgument(format!("weight k must be even and >= 10, got {k}")));
        }
        if !(normalization.is_finite() && normalization > 0.0) {
            return Err(LfuncError::InvalidArgument(format!(
                "normalization must be positive, got {normalization}"
            )));
        }
        if n_terms == 0 {
            return Err(LfuncError::InvalidArgument("need at least one coefficient".into()));
        }
        let f = eigenform_2km2(k, n_terms.max(DEFAULT_EIGENFORM_TERMS))?;
        let c_exact = model_coefficients(k, &f.coefficients[..n_terms]);
        let a_exact = a_from_c(k, &c_exact);
        let mut inst = Self {
            k,
            f,
            normalization,
            petersson_scalar: 0.0,
            model: LFunctionModel::saito_kurokawa(k),
            c_exact,
            a_exact,
        };
        inst.residue_at_k()?;
        Ok(inst)
    }

    /// Number of exact coefficients held.
    pub fn terms(&self) -> usize {
        self.c_exact.len()
    }

    /// `c_n` at C = 1.
    pub fn c_exact(&self) -> &[BigInt] {
        &self.c_exact
    }

    /// `a(n)` at C = 1.
    pub fn a_exact(&self) -> &[BigInt] {
        &self.a_exact
    }

    /// The same instance with C (and hence every derived quantity) times λ.
    pub fn scaled(&self, lambda: f64) -> Self {
        let mut out = self.clone();
        out.normalization *= lambda;
        out.petersson_scalar *= lambda;
        out
    }

    fn check_len(&self, n: usize) -> Result<(), LfuncError> {
        if n > self.c_exact.len() {
            return Err(LfuncError::InsufficientCoefficients { needed: n, available: self.c_exact.len() });
        }
        Ok(())
    }

    /// `c_1..c_N` scaled by C, with growth exponent `k − 1`.
    pub fn sk_petersson_coeffs(&self, n: usize) -> Result<CoefficientSeries, LfuncError> {
        self.check_len(n)?;
        Ok(CoefficientSeries::from_integers(&self.c_exact[..n], self.normalization, self.k as f64 - 1.0))
    }

    /// `a(1..N)` scaled by C. The `e^{2k−1}` weights at squares push the
    /// growth exponent to `k − 1/2`.
    pub fn a_series(&self, n: usize) -> Result<CoefficientSeries, LfuncError> {
        self.check_len(n)?;
        Ok(CoefficientSeries::from_integers(&self.a_exact[..n], self.normalization, self.k as f64 - 0.5))
    }

    /// `D(s)` by evaluating each factor.
    pub fn eval_d(&self, s: Complex64) -> Result<Complex64, LfuncError> {
        let mut acc = Complex64::new(self.normalization, 0.0);
        for factor in &self.model.factors {
            acc *= match *factor {
                Factor::ZetaShift(shift) => {
                    let z = s - shift;
                    if z == Complex64::new(1.0, 0.0) {
                        return Err(LfuncError::Pole(s.re));
                    }
                    zeta(z)?
                }
                Factor::Eigenform => eval_lf(&self.f, s)?,
            };
        }
        Ok(acc)
    }

    /// `D*(s) = (2π)^{-2s} Γ(s) Γ(s−k+2) D(s)`.
    pub fn completed_d(&self, s: Complex64) -> Result<Complex64, LfuncError> {
        let [g0, g1] = self.model.gamma_shifts;
        let ln = -2.0 * s * (2.0 * PI).ln() + log_gamma(s + g0)? + log_gamma(s + g1)?;
        Ok(ln.exp() * self.eval_d(s)?)
    }

    /// Compares `D*(s)` with `D*(2k−2−s)` at each point.
    pub fn functional_equation_check(&self, points: &[Complex64]) -> Result<Vec<FeCheck>, LfuncError> {
        points
            .iter()
            .map(|&s| {
                let direct = self.completed_d(s)?;
                let reflected = self.completed_d(self.model.reflection - s)?;
                let rel_err = (direct - reflected).norm() / direct.norm().max(reflected.norm());
                Ok(FeCheck { s, direct, reflected, rel_err })
            })
            .collect()
    }

    /// `Res_{s=k} D(s) = C·ζ(2)·L(f, k)`; also refreshes `petersson_scalar`.
    pub fn residue_at_k(&mut self) -> Result<f64, LfuncError> {
        let k = self.k as f64;
        let lk = eval_lf(&self.f, Complex64::new(k, 0.0))?.re;
        let residue = self.normalization * PI * PI / 6.0 * lk;
        let ln_scale = ln_gamma_abs(k)? - k * 4f64.ln() - (k + 2.0) * PI.ln();
        self.petersson_scalar = ln_scale.exp() * residue;
        Ok(residue)
    }

    /// The residue recovered from the stored Petersson scalar.
    pub fn residue(&self) -> f64 {
        let k = self.k as f64;
        let ln_scale = k * 4f64.ln() + (k + 2.0) * PI.ln() - ln_gamma_abs(k).unwrap_or(f64::NAN);
        self.petersson_scalar * ln_scale.exp()
    }

    /// JSON description: k, weight, C, sign and N.
    pub fn describe(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "weight": self.f.weight,
            "C": self.normalization,
            "sign": self.f.sign,
            "N": self.terms(),
        })
    }
}

/// `c = n^{k−1} * n^{k−2} * a_f * [μ(e) e^{2k−4} at e²]`, all at C = 1.
fn model_coefficients(k: u32, af: &[BigInt]) -> Vec<BigInt> {
    let n = af.len();
    let zz = dirichlet_convolve(&power_series(k - 1, n), &power_series(k - 2, n));
    let zzl = dirichlet_convolve(&zz, af);
    dirichlet_convolve(&zzl, &square_mobius_series(2 * k - 4, n))
}

/// `a(n) = Σ_{d²e²m=n} d^{2k−4} μ(e) e^{2k−1} c_m`.
fn a_from_c(k: u32, c: &[BigInt]) -> Vec<BigInt> {
    let n = c.len();
    let kernel = dirichlet_convolve(&square_power_series(2 * k - 4, n), &square_mobius_series(2 * k - 1, n));
    dirichlet_convolve(&kernel, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfunc::dirichlet_convolve_naive;
    use std::sync::OnceLock;

    fn k10() -> &'static SkInstance {
        static I: OnceLock<SkInstance> = OnceLock::new();
        I.get_or_init(|| SkInstance::new(10, 400, 1.0).unwrap())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn leading_coefficients() {
        let inst = k10();
        assert_eq!(inst.c_exact()[..5], ints(&[1, 240, 21960, 135424, 1317900])[..]);
        assert_eq!(inst.a_exact()[0], BigInt::from(1));
    }

    #[test]
    fn a_four_by_hand() {
        let inst = k10();
        let expected = &inst.c_exact()[3] + BigInt::from(1i64 << 16) - BigInt::from(1i64 << 19);
        assert_eq!(inst.a_exact()[3], expected);
        assert_eq!(inst.a_exact()[3], BigInt::from(-323_328));
    }

    #[test]
    fn brute_force_and_roundtrip_to_one_hundred() {
        let inst = k10();
        let n = 100;
        let af = &inst.f.coefficients[..n];
        let mut c = dirichlet_convolve_naive(&power_series(9, n), &power_series(8, n));
        c = dirichlet_convolve_naive(&c, af);
        c = dirichlet_convolve_naive(&c, &square_mobius_series(16, n));
        assert_eq!(c, inst.c_exact()[..n]);
        // ζ(2s+1−2k)/ζ(2s−2k+4) undoes the passage from c to a
        let back = dirichlet_convolve_naive(
            &dirichlet_convolve_naive(&square_power_series(19, n), &square_mobius_series(16, n)),
            &inst.a_exact()[..n],
        );
        assert_eq!(back, inst.c_exact()[..n]);
    }

    #[test]
    fn growth_is_consistent() {
        let c = k10().sk_petersson_coeffs(400).unwrap();
        assert!(c.growth_consistent(), "slope {:?}", c.fitted_slope());
        assert!(k10().sk_petersson_coeffs(401).is_err());
    }

    #[test]
    fn residue_and_scalar_close() {
        let mut inst = k10().clone();
        let r = inst.residue_at_k().unwrap();
        let lk = eval_lf(&inst.f, Complex64::new(10.0, 0.0)).unwrap().re;
        assert!((r - PI * PI / 6.0 * lk).abs() < 1e-15);
        assert!((inst.residue() - r).abs() < 1e-14 * r);
    }

    #[test]
    fn limit_approaches_residue() {
        let inst = k10();
        let r = inst.residue();
        for off in [1e-7, 1e-8, 1e-9, 1e-10] {
            let x = 10.0 + off;
            let v = inst.eval_d(Complex64::new(x, 0.0)).unwrap() * (x - 10.0);
            assert!((v.re - r).abs() < 10.0 * off * r, "offset {off}: {} vs {r}", v.re);
        }
        assert!(matches!(inst.eval_d(Complex64::new(10.0, 0.0)), Err(LfuncError::Pole(_))));
    }

    #[test]
    fn functional_equation_holds() {
        let pts = [
            Complex64::new(9.5, 3.0),
            Complex64::new(7.5, 10.0),
            Complex64::new(8.25, 20.0),
            Complex64::new(10.5, 1.0),
            Complex64::new(9.0, 40.0),
        ];
        for chk in k10().functional_equation_check(&pts).unwrap() {
            assert!(chk.rel_err < 1e-6, "{:?}", chk);
        }
    }

    #[test]
    fn rejects_bad_instances() {
        assert!(SkInstance::new(9, 10, 1.0).is_err());
        assert!(SkInstance::new(10, 10, 0.0).is_err());
        assert!(matches!(eigenform_2km2(13, 10), Err(LfuncError::UnsupportedWeight(24))));
    }
}
