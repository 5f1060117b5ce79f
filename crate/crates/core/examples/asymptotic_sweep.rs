//! α^k times the Lambert series as α → 0, against its limit 90⟨F₁,F₂⟩/π².

use siegel_lambert::identity::{asymptotic_sweep, asymptotic_target};
use siegel_lambert::lfunc::SkInstance;
use siegel_lambert::sum::PrecisionMode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inst = SkInstance::new(10, 4096, 1.0)?;
    let target = asymptotic_target(&inst);
    println!("limit: {target:.12e}");
    for p in asymptotic_sweep(&inst, &[0.3, 0.1, 0.03, 0.01], PrecisionMode::Standard)? {
        let dev = p.scaled_lhs / target - 1.0;
        println!("alpha = {:<5} scaled lhs = {:.12e}  rel dev {dev:+.3e}  (N = {})", p.alpha, p.scaled_lhs, p.n_terms);
    }
    Ok(())
}
