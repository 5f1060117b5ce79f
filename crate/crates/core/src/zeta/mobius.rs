//! Möbius function tables.

use rayon::prelude::*;

use crate::series::CoefficientSeries;

/// Above this size the block-parallel sieve is used.
const PARALLEL_THRESHOLD: usize = 1 << 20;
const BLOCK: usize = 1 << 16;

/// `μ(0..=n)` by the linear sieve; index 0 holds 0.
fn linear(n: usize) -> Vec<i8> {
    let mut mu = vec![0i8; n + 1];
    if n == 0 {
        return mu;
    }
    mu[1] = 1;
    let mut composite = vec![false; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let m = i * p;
            if m > n {
                break;
            }
            composite[m] = true;
            if i % p == 0 {
                mu[m] = 0;
                break;
            }
            mu[m] = -mu[i];
        }
    }
    mu
}

fn primes_up_to(n: usize) -> Vec<usize> {
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i);
            let mut m = i * i;
            while m <= n {
                sieve[m] = false;
                m += i;
            }
        }
    }
    out
}

/// Segmented sieve: every block `[lo, hi)` is handled independently using
/// the primes up to √n, so blocks run in parallel.
fn segmented(n: usize) -> Vec<i8> {
    let root = (n as f64).sqrt() as usize + 1;
    let primes = primes_up_to(root);
    let blocks: Vec<Vec<i8>> = (0..=n / BLOCK)
        .into_par_iter()
        .map(|b| {
            let lo = b * BLOCK;
            let hi = (lo + BLOCK).min(n + 1);
            let mut mu = vec![1i8; hi - lo];
            let mut rest: Vec<usize> = (lo..hi).collect();
            for &p in &primes {
                let sq = p * p;
                let mut m = lo.div_ceil(p) * p;
                while m < hi {
                    if m % sq == 0 {
                        mu[m - lo] = 0;
                    } else {
                        mu[m - lo] = -mu[m - lo];
                    }
                    rest[m - lo] /= p;
                    m += p;
                }
            }
            for i in lo..hi {
                if rest[i - lo] > 1 && mu[i - lo] != 0 {
                    mu[i - lo] = -mu[i - lo];
                }
            }
            mu
        })
        .collect();
    let mut mu: Vec<i8> = blocks.concat();
    mu[0] = 0;
    mu
}

/// `μ(0..=n)` as small integers; index 0 holds 0.
pub fn mobius_values(n: usize) -> Vec<i8> {
    if n >= PARALLEL_THRESHOLD {
        segmented(n)
    } else {
        linear(n)
    }
}

/// `μ(1..=n)` as a coefficient series (growth exponent 0).
pub fn mobius_sieve(n: usize) -> CoefficientSeries {
    let mu = mobius_values(n.max(1));
    CoefficientSeries::new(mu[1..=n].iter().map(|&m| m as f64).collect(), 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(n: usize) -> i8 {
        let mut m = n;
        let mut k = 0;
        let mut p = 2;
        while p * p <= m {
            if m % p == 0 {
                m /= p;
                if m % p == 0 {
                    return 0;
                }
                k += 1;
            }
            p += 1;
        }
        if m > 1 {
            k += 1;
        }
        if k % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn definition_values() {
        let mu = mobius_values(100);
        assert_eq!((mu[1], mu[4], mu[6], mu[30]), (1, 0, 1, -1));
        for n in 1..=100 {
            assert_eq!(mu[n], brute(n), "n={n}");
        }
        assert_eq!(mu[1..].iter().map(|&m| m as i32).sum::<i32>(), 1);
    }

    #[test]
    fn dirichlet_inverse_identity() {
        let n = 2000;
        let mu = mobius_values(n);
        for m in 1..=n {
            let s: i32 = (1..=m).filter(|d| m % d == 0).map(|d| mu[d] as i32).sum();
            assert_eq!(s, i32::from(m == 1), "m={m}");
        }
    }

    #[test]
    fn segmented_matches_linear() {
        let n = 300_000;
        assert_eq!(segmented(n), linear(n));
    }

    #[test]
    fn series_form() {
        let s = mobius_sieve(10);
        assert_eq!(s.values, vec![1.0, -1.0, -1.0, 0.0, -1.0, 1.0, -1.0, 0.0, 0.0, 1.0]);
    }
}
