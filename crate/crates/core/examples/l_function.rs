//! L(f, s) for the weight-18 eigenform, the model Dirichlet series D(s) and
//! the functional equation of its completion.

use num_complex::Complex64;
use siegel_lambert::lfunc::{completed_lf, eval_lf, SkInstance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inst = SkInstance::new(10, 256, 1.0)?;
    let f = &inst.f;
    println!("weight {} root number {}", f.weight, f.sign);
    for s in [Complex64::new(10.0, 0.0), Complex64::new(9.0, 0.0), Complex64::new(9.0, 14.0)] {
        println!("L(f, {s}) = {:.12}", eval_lf(f, s)?);
    }
    let s = Complex64::new(8.5, 5.0);
    println!("Lambda(f, s) = {:.6e}, eps*Lambda(f, 18-s) = {:.6e}", completed_lf(f, s)?, completed_lf(f, 18.0 - s)? * f.sign as f64);

    println!("Res D at s = k: {:.12}", inst.residue());
    println!("<F1, F2> = {:.6e}", inst.petersson_scalar);
    let points = [Complex64::new(9.5, 3.0), Complex64::new(7.5, 12.0), Complex64::new(8.0, 25.0)];
    for chk in inst.functional_equation_check(&points)? {
        println!("D*(s) vs D*(2k-2-s) at {}: rel err {:.1e}", chk.s, chk.rel_err);
    }
    Ok(())
}
