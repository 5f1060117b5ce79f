//! The Hardy–Littlewood Möbius identity: Möbius sums on one side, bracketed
//! zero sums on the other.

use siegel_lambert::identity::{hl_identity, TransformPair};
use siegel_lambert::sum::PrecisionMode;
use siegel_lambert::zeta::{bracket_zeros, find_zeros, DEFAULT_A0};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let zeros = find_zeros(60)?;
    let brackets = bracket_zeros(&zeros, DEFAULT_A0);
    for alpha in [1.0, 1.5, 2.0] {
        let r = hl_identity(TransformPair::new(alpha)?, &zeros, &brackets, 1_000_000, PrecisionMode::Standard)?;
        println!("alpha = {alpha}: lhs {:+.6e}  rhs {:+.6e}  diff {:+.2e}  (Mobius tail <= {:.1e})", r.lhs, r.rhs, r.lhs - r.rhs, r.lhs_tail);
        let shown: Vec<String> = r.rhs_partials.iter().step_by(15).map(|p| format!("{:+.4e}", p.cum)).collect();
        println!("  partials every 15 brackets: {}", shown.join(" "));
    }
    Ok(())
}
