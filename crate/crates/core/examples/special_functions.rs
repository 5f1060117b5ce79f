//! The special-function layer: complex log-gamma, ζ near the pole and on
//! the critical line, Whittaker W and the Meijer G^{2,0}_{1,2} it equals.

use num_complex::Complex64;
use siegel_lambert::specfun::{
    gamma, log_gamma, meijer_g_2012, whittaker_w, MeijerIndices, WhittakerParams,
};
use siegel_lambert::zeta::{hardy_z, zeta, zeta_derivative};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("Gamma(0.5 + 14.13i) = {:.10e}", gamma(Complex64::new(0.5, 14.13))?);
    println!("ln Gamma(10 + 300i) = {:.10}", log_gamma(Complex64::new(10.0, 300.0))?);

    let s = 1.0 + 1e-8;
    println!("(s-1) zeta(s) at s = 1 + 1e-8: {:.15}", (s - 1.0) * zeta(Complex64::new(s, 0.0))?.re);
    let rho = Complex64::new(0.5, 14.134_725_141_734_693);
    println!("|zeta(rho_1)| = {:.2e}, zeta'(rho_1) = {:.10}", zeta(rho)?.norm(), zeta_derivative(rho)?);
    println!("Z(20) = {:.10}", hardy_z(20.0)?);

    let k = 10;
    let idx = MeijerIndices::for_weight(k);
    let (kappa, mu) = idx.whittaker_indices();
    for z in [0.5, 4.0, 40.0] {
        let w = whittaker_w(WhittakerParams::new(kappa, mu, z)?)?;
        // G^{2,0}_{1,2}(z) = z^{(b1+b2−1)/2} e^{−z/2} W_{κ,μ}(z)
        let via_w = z.powf(0.5 * (idx.b1 + idx.b2 - 1.0)) * (-0.5 * z).exp() * w;
        println!("z = {z:<4} G = {:.12e}  via W = {:.12e}", meijer_g_2012(idx, z)?, via_w);
    }
    Ok(())
}
