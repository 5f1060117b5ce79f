//! Exact Dirichlet-series arithmetic on finite prefixes (position 0 holds
//! the coefficient of 1^{-s}).

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::zeta::mobius_values;

const BLOCK: usize = 1024;

/// Dirichlet convolution `(a * b)(n) = Σ_{de=n} a(d) b(e)` for n ≤ len,
/// where `len = min(a.len(), b.len())`. Blocks of n run in parallel.
pub fn dirichlet_convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    let blocks: Vec<Vec<BigInt>> = (0..n.div_ceil(BLOCK))
        .into_par_iter()
        .map(|blk| {
            let lo = blk * BLOCK + 1;
            let hi = ((blk + 1) * BLOCK).min(n);
            let mut out = vec![BigInt::zero(); hi + 1 - lo];
            for d in 1..=hi {
                if a[d - 1].is_zero() {
                    continue;
                }
                let mut m = lo.div_ceil(d) * d;
                while m <= hi {
                    let e = m / d;
                    if !b[e - 1].is_zero() {
                        out[m - lo] += &a[d - 1] * &b[e - 1];
                    }
                    m += d;
                }
            }
            out
        })
        .collect();
    blocks.concat()
}

/// Coefficients of `ζ(s − shift)`: `n^{shift}`.
pub fn power_series(shift: u32, n: usize) -> Vec<BigInt> {
    (1..=n).map(|m| BigInt::from(m).pow(shift)).collect()
}

/// Coefficients of `ζ(2s − p)`: `d^p` at `n = d²`, zero elsewhere.
pub fn square_power_series(p: u32, n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    let mut d = 1usize;
    while d * d <= n {
        out[d * d - 1] = BigInt::from(d).pow(p);
        d += 1;
    }
    out
}

/// Coefficients of `1/ζ(2s − p)`: `μ(d) d^p` at `n = d²`.
pub fn square_mobius_series(p: u32, n: usize) -> Vec<BigInt> {
    let root = (n as f64).sqrt() as usize + 1;
    let mu = mobius_values(root);
    let mut out = vec![BigInt::zero(); n];
    let mut d = 1usize;
    while d * d <= n {
        out[d * d - 1] = BigInt::from(mu[d]) * BigInt::from(d).pow(p);
        d += 1;
    }
    out
}

/// Naive `O(n²)` divisor-sum convolution, kept as a test oracle.
pub fn dirichlet_convolve_naive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    (1..=n)
        .map(|m| {
            let mut acc = BigInt::zero();
            for d in 1..=m {
                if m % d == 0 {
                    acc += &a[d - 1] * &b[m / d - 1];
                }
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convolution_matches_naive() {
        let n = 2500;
        let a: Vec<BigInt> = (1..=n).map(|i| BigInt::from((i * 7919 % 101) as i64 - 50)).collect();
        let b: Vec<BigInt> = (1..=n).map(|i| BigInt::from((i * 104_729 % 37) as i64 - 18)).collect();
        assert_eq!(dirichlet_convolve(&a, &b), dirichlet_convolve_naive(&a, &b));
    }

    #[test]
    fn zeta_squared_over_zeta_double_is_two_to_omega() {
        // ζ(s)²/ζ(2s) has coefficients 2^{ω(n)}
        let n = 100;
        let one = power_series(0, n);
        let z2 = dirichlet_convolve(&one, &one);
        let c = dirichlet_convolve(&z2, &square_mobius_series(0, n));
        assert_eq!(c[0], BigInt::from(1));
        assert_eq!(c[5], BigInt::from(4)); // n = 6
        assert_eq!(c[3], BigInt::from(2)); // n = 4
        assert_eq!(c[29], BigInt::from(8)); // n = 30
    }

    #[test]
    fn square_series_are_inverse() {
        let n = 500;
        let p = dirichlet_convolve(&square_power_series(7, n), &square_mobius_series(7, n));
        assert_eq!(p[0], BigInt::from(1));
        assert!(p[1..].iter().all(|v| v.is_zero()));
    }

    proptest::proptest! {
        #[test]
        fn convolution_is_commutative_and_matches_naive(
            a in proptest::collection::vec(-1000i64..1000, 1..120),
            b in proptest::collection::vec(-1000i64..1000, 1..120),
        ) {
            let a: Vec<BigInt> = a.into_iter().map(BigInt::from).collect();
            let b: Vec<BigInt> = b.into_iter().map(BigInt::from).collect();
            let ab = dirichlet_convolve(&a, &b);
            proptest::prop_assert_eq!(&ab, &dirichlet_convolve(&b, &a));
            proptest::prop_assert_eq!(ab, dirichlet_convolve_naive(&a, &b));
        }

        #[test]
        fn square_series_inverse_for_any_power(p in 0u32..20, n in 1usize..400) {
            let prod = dirichlet_convolve(&square_power_series(p, n), &square_mobius_series(p, n));
            for (i, v) in prod.iter().enumerate() {
                proptest::prop_assert_eq!(v, &BigInt::from((i == 0) as i32));
            }
        }
    }
}
