//! Exact coefficient pipelines: Ramanujan's τ, the weight-18 eigenform, and
//! the model sequences c_n and a(n) of the weight-10 instance.

use siegel_lambert::lfunc::{deligne_bound_holds, delta_tau, eigenform_coefficients, SkInstance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tau = delta_tau(12);
    println!("tau(1..12) = {:?}", tau.iter().map(|t| t.to_string()).collect::<Vec<_>>());

    let f = eigenform_coefficients(18, 200)?;
    println!("weight 18: a(2) = {}, a(3) = {}", f[1], f[2]);
    println!("Deligne bound holds to n = 200: {}", deligne_bound_holds(18, &f));

    let inst = SkInstance::new(10, 64, 1.0)?;
    for n in 1..=6 {
        println!("n = {n}: c_n = {:>12}  a(n) = {:>12}", inst.c_exact()[n - 1], inst.a_exact()[n - 1]);
    }
    let c = inst.sk_petersson_coeffs(64)?;
    println!("fitted growth exponent of c_n: {:.3} (expected {})", c.fitted_slope().unwrap_or(f64::NAN), c.growth_exponent);
    Ok(())
}
