use num_complex::Complex64;
use std::f64::consts::PI;

use super::SpecFunError;

/// ln(2π)/2
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_7;

/// Stirling is applied once |z| >= this and Re z >= 0.
const STIRLING_RADIUS: f64 = 15.0;

/// B_{2j} / (2j (2j-1)) for j = 1..=10.
const STIRLING_COEFFS: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

fn is_nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

fn stirling(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING_COEFFS {
        series += p * c;
        p *= inv2;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_2PI + series
}

/// Log-gamma on the standard branch: analytic on ℂ minus the non-positive
/// real axis, real for s > 0, and satisfying
/// `ln Γ(s+1) = ln Γ(s) + ln s` with the principal logarithm.
pub fn log_gamma(s: Complex64) -> Result<Complex64, SpecFunError> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(SpecFunError::NonFinite);
    }
    if is_nonpositive_integer(s) {
        return Err(SpecFunError::GammaPole(s.re));
    }
    // ln Γ(s) = ln Γ(s+m) − Σ ln(s+j). The real parts are accumulated as
    // logs of short products, the imaginary parts as a sum of arguments.
    let mut z = s;
    let mut ln_mod = 0.0;
    let mut arg = 0.0;
    let mut prod = 1.0;
    let mut count = 0;
    while z.re < 0.0 || z.norm() < STIRLING_RADIUS {
        prod *= z.norm();
        arg += z.arg();
        z += 1.0;
        count += 1;
        if count % 8 == 0 {
            ln_mod += prod.ln();
            prod = 1.0;
        }
    }
    ln_mod += prod.ln();
    Ok(stirling(z) - Complex64::new(ln_mod, arg))
}

/// Γ(s) = exp(ln Γ(s)).
pub fn gamma(s: Complex64) -> Result<Complex64, SpecFunError> {
    log_gamma(s).map(|l| l.exp())
}

/// Γ(x) for real x; errors at the poles.
pub fn gamma_real(x: f64) -> Result<f64, SpecFunError> {
    gamma(Complex64::new(x, 0.0)).map(|g| g.re)
}

/// ln|Γ(x)| for real x.
pub fn ln_gamma_abs(x: f64) -> Result<f64, SpecFunError> {
    log_gamma(Complex64::new(x, 0.0)).map(|g| g.re)
}

/// 1/Γ(x), entire: zero at the non-positive integers.
pub fn rgamma_real(x: f64) -> f64 {
    match gamma_real(x) {
        Ok(g) => 1.0 / g,
        Err(_) => 0.0,
    }
}

/// Digamma ψ(x) for real x away from the poles.
pub fn digamma(x: f64) -> Result<f64, SpecFunError> {
    if x <= 0.0 && x == x.round() {
        return Err(SpecFunError::GammaPole(x));
    }
    if x < 0.5 {
        // ψ(1-x) - ψ(x) = π cot(πx)
        return Ok(digamma(1.0 - x)? - PI / (PI * x).tan());
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < 15.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    // Σ B_{2j}/(2j) y^{-2j}, j = 1..=7
    const COEFFS: [f64; 7] =
        [1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0];
    let tail = COEFFS.iter().rev().fold(0.0, |t, c| (t + c) * inv2);
    Ok(acc + y.ln() - 0.5 / y - tail)
}

/// Stirling magnitude envelope √(2π)|T|^{σ-1/2} e^{-π|T|/2} for Γ(σ+iT).
pub fn stirling_envelope(sigma: f64, t: f64) -> f64 {
    let at = t.abs();
    (2.0 * PI).sqrt() * at.powf(sigma - 0.5) * (-0.5 * PI * at).exp()
}

/// Natural log of [`stirling_envelope`].
pub fn ln_stirling_envelope(sigma: f64, t: f64) -> f64 {
    let at = t.abs();
    0.5 * (2.0 * PI).ln() + (sigma - 0.5) * at.ln() - 0.5 * PI * at
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn special_values() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-14);
        assert!(log_gamma(c(2.0, 0.0)).unwrap().norm() < 1e-14);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half.re - 0.5 * PI.ln()).abs() < 1e-14);
        assert_eq!(half.im, 0.0);
        assert!((gamma_real(5.0).unwrap() - 24.0).abs() < 1e-12);
        assert!((gamma_real(10.0).unwrap() - 362_880.0).abs() / 362_880.0 < 1e-14);
    }

    #[test]
    fn poles_are_rejected() {
        for x in [0.0, -1.0, -7.0] {
            assert!(matches!(log_gamma(c(x, 0.0)), Err(SpecFunError::GammaPole(_))));
        }
        assert_eq!(rgamma_real(-3.0), 0.0);
        assert!(log_gamma(c(-3.0, 1e-9)).is_ok());
    }

    #[test]
    fn negative_real_axis_sign() {
        // Γ(-1/2) = -2√π, Γ(-3/2) = 4√π/3
        assert!((gamma_real(-0.5).unwrap() + 2.0 * PI.sqrt()).abs() < 1e-14);
        assert!((gamma_real(-1.5).unwrap() - 4.0 * PI.sqrt() / 3.0).abs() < 1e-14);
    }

    #[test]
    fn frozen_complex_values() {
        // Reference values: mpmath.loggamma at 30 digits.
        let cases = [
            (c(0.5, 14.13), c(-21.276_413_564_407_218, 23.293_431_450_919_402)),
            (c(2.0, 50.0), c(-71.752_643_338_387_276, 147.935_680_738_735_07)),
            (c(-3.3, 0.7), c(-2.482_358_199_542_181_8, -11.009_352_077_495_584)),
            (c(8.25, 118.0), c(-147.456_680_749_340_91, 456.860_489_348_009_5)),
        ];
        for (s, expect) in cases {
            let got = log_gamma(s).unwrap();
            assert!((got - expect).norm() < 1e-12 * expect.norm().max(1.0), "{s}: {got} vs {expect}");
        }
    }

    #[test]
    fn stirling_bound_at_sigma_two_height_fifty() {
        let g = gamma(c(2.0, 50.0)).unwrap().norm();
        let env = stirling_envelope(2.0, 50.0);
        assert!((g / env - 1.0).abs() < 0.01, "{}", g / env);
    }

    #[test]
    fn reflection_and_duplication() {
        for &(re, im) in &[(0.3, 0.0), (0.25, 3.0), (-2.4, 1.5), (1.7, -8.0), (0.5, 20.0)] {
            let s = c(re, im);
            let lhs = gamma(s).unwrap() * gamma(c(1.0, 0.0) - s).unwrap() * (s * PI).sin() / PI;
            assert!((lhs - 1.0).norm() < 1e-10, "reflection at {s}: {lhs}");
            let dup_l = gamma(s).unwrap() * gamma(s + 0.5).unwrap();
            let dup_r = Complex64::new(2.0, 0.0).powc(c(1.0, 0.0) - s * 2.0)
                * PI.sqrt()
                * gamma(s * 2.0).unwrap();
            assert!(rel(dup_l, dup_r) < 1e-10, "duplication at {s}");
        }
    }

    #[test]
    fn digamma_values() {
        let euler = 0.577_215_664_901_532_9;
        assert!((digamma(1.0).unwrap() + euler).abs() < 1e-14);
        assert!((digamma(0.5).unwrap() + euler + 2.0 * 2f64.ln()).abs() < 1e-14);
        // mpmath.digamma(-1.5)
        assert!((digamma(-1.5).unwrap() - 0.703_156_640_645_243_2).abs() < 1e-13);
    }

    proptest::proptest! {
        #[test]
        fn log_gamma_recurrence(re in 0.1f64..40.0, im in -300.0f64..300.0) {
            let s = c(re, im);
            let d = log_gamma(s + 1.0).unwrap() - log_gamma(s).unwrap() - s.ln();
            // equal up to a multiple of 2πi
            let turns = d.im / (2.0 * std::f64::consts::PI);
            proptest::prop_assert!(d.re.abs() < 1e-12 * (1.0 + s.norm().ln().abs()));
            proptest::prop_assert!((turns - turns.round()).abs() < 1e-10);
        }

        #[test]
        fn log_gamma_conjugate_symmetry(re in -20.5f64..40.0, im in 0.01f64..300.0) {
            let s = c(re, im);
            let a = log_gamma(s).unwrap();
            let b = log_gamma(s.conj()).unwrap();
            proptest::prop_assert!((a.conj() - b).norm() <= 1e-12 * a.norm().max(1.0));
        }
    }
}
