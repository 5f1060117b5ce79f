//! Locate the first zeros of ζ on the critical line, check each sign-change
//! certificate and compare the census below T = 100 with N(T).

use siegel_lambert::zeta::{bracket_zeros, find_zeros, riemann_von_mangoldt, zero_count, DEFAULT_A0};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let zeros = find_zeros(30)?;
    for z in zeros.iter().take(10) {
        println!("#{:<3} gamma = {:.10}  certified: {}", z.index, z.gamma, z.certificate_holds()?);
    }
    let below = zeros.iter().filter(|z| z.gamma < 100.0).count();
    println!("zeros found below 100: {below}; N(100) = {}", zero_count(100.0)?);
    println!("smooth count at 100: {:.3}", riemann_von_mangoldt(100.0));

    let brackets = bracket_zeros(&zeros, DEFAULT_A0);
    println!("{} zeros fall into {} brackets", zeros.len(), brackets.len());
    Ok(())
}
