//! Both sides of the zero expansion of the Lambert series at α = 1 (and at
//! α = 0.8 with the swapped pair), with 50 zeros.

use siegel_lambert::identity::{verify_main_identity, TransformPair};
use siegel_lambert::lfunc::SkInstance;
use siegel_lambert::sum::PrecisionMode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inst = SkInstance::new(10, 4096, 1.0)?;
    for alpha in [1.0, 0.8, 1.25] {
        let pair = TransformPair::new(alpha)?;
        let r = verify_main_identity(&inst, pair, 50, None, PrecisionMode::Standard)?;
        println!("alpha = {alpha} (beta = {:.4})", pair.beta);
        println!("  lhs      {:+.15e}", r.lhs);
        println!("  V_k      {:+.15e}", r.v_k);
        println!("  R_k      {:+.15e}", r.r_k);
        println!("  zeros    {:+.15e}  ({} brackets)", r.zero_sum(), r.zero_sum_partials.len());
        println!("  residual {:+.3e}  (N = {})", r.residual, r.truncations.n_terms);
    }
    Ok(())
}
