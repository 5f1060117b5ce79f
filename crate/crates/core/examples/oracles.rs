//! Every internal cross-check at α = 1: contour quadratures against series,
//! closed-form Meijer G against its line integral, the residue theorem, the
//! pole of D and its functional equation.

use siegel_lambert::identity::{oracle_suite, TransformPair};
use siegel_lambert::lfunc::SkInstance;
use siegel_lambert::sum::PrecisionMode;
use siegel_lambert::zeta::{bracket_zeros, find_zeros, DEFAULT_A0};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inst = SkInstance::new(10, 4096, 1.0)?;
    let zeros = find_zeros(100)?;
    let brackets = bracket_zeros(&zeros, DEFAULT_A0);
    let checks = oracle_suite(&inst, TransformPair::new(1.0)?, &zeros, &brackets, PrecisionMode::Standard)?;
    for c in &checks {
        println!("{:<34} rel err {:.2e} (tol {:.0e}) {}", c.name, c.rel_err, c.tol, if c.pass { "ok" } else { "FAILED" });
    }
    println!("{}/{} passed", checks.iter().filter(|c| c.pass).count(), checks.len());
    Ok(())
}
