//! The constant term c₀(y) of y¹²|Δ(x+iy)|² for decreasing y.

use siegel_lambert::identity::{zagier_c0_auto, zagier_c0_naive};
use siegel_lambert::sum::PrecisionMode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for y in [2.0, 0.5, 0.1, 0.05, 0.02, 0.01] {
        let v = zagier_c0_auto(y, PrecisionMode::Extended)?;
        let naive = zagier_c0_naive(y, v.n_terms);
        println!("y = {y:<5} c0 = {:.15e}  N = {:<6} naive rel diff {:.1e}", v.value, v.n_terms, (v.value - naive).abs() / v.value);
    }
    Ok(())
}
