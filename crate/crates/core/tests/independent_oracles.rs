//! Checks against oracles that share no code with the library paths they
//! test.

use num_complex::Complex64;
use siegel_lambert::lfunc::SkInstance;
use siegel_lambert::specfun::gamma;
use siegel_lambert::zeta::zeta;

/// `1/Γ(z) = (1/2πi) ∫_H e^t t^{-z} dt` on `t = z·w²`, `w = 1 + i e^{iψ} u`
/// with `ψ = −arg(z)/2`: a parabola around the origin through the saddle
/// point `t = z`, along which `ln t = ln z + 2 ln w` is continuous.
fn hankel_rgamma(z: Complex64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    let dir = i * Complex64::from_polar(1.0, -0.5 * z.arg());
    let h = 0.02;
    let ln_z = z.ln();
    let mut acc = Complex64::new(0.0, 0.0);
    for j in -3000..=3000 {
        let w = 1.0 + dir * (j as f64 * h);
        let ln_t = ln_z + 2.0 * w.ln();
        let t = ln_t.exp();
        acc += (t - z * ln_t).exp() * z * 2.0 * w * dir;
    }
    acc * h / (2.0 * std::f64::consts::PI * i)
}

#[test]
fn reciprocal_gamma_by_hankel_contour() {
    let z = Complex64::new(0.5, 14.13);
    // mpmath.rgamma(0.5 + 14.13j) at 30 digits
    let reference = Complex64::new(-461_279_036.692_834_71, 1_676_412_813.969_958_22);
    let hankel = hankel_rgamma(z);
    let lib = 1.0 / gamma(z).unwrap();
    assert!((hankel - reference).norm() < 1e-10 * reference.norm(), "{hankel}");
    assert!((lib - reference).norm() < 1e-12 * reference.norm(), "{lib}");
    for z in [Complex64::new(3.5, -2.0), Complex64::new(0.25, 40.0), Complex64::new(12.0, 7.0)] {
        let (h, l) = (hankel_rgamma(z), 1.0 / gamma(z).unwrap());
        assert!((h - l).norm() < 1e-10 * l.norm(), "{z}: {h} vs {l}");
    }
}

#[test]
fn model_series_matches_its_dirichlet_coefficients() {
    let n = 20_000;
    let inst = SkInstance::new(10, n, 1.0).unwrap();
    let c = inst.sk_petersson_coeffs(n).unwrap();
    for s in [Complex64::new(12.0, 0.0), Complex64::new(12.0, 5.0), Complex64::new(12.0, -21.0)] {
        let mut sum = Complex64::new(0.0, 0.0);
        for (i, cn) in c.values.iter().enumerate().rev() {
            sum += Complex64::new((i + 1) as f64, 0.0).powc(-s) * cn;
        }
        let direct = zeta(2.0 * s - 16.0).unwrap() * sum;
        let model = inst.eval_d(s).unwrap();
        assert!((model - direct).norm() < 1e-8 * model.norm(), "{s}: {model} vs {direct}");
    }
}
