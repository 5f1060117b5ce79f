//! Exact q-expansion coefficients: Ramanujan's τ and the normalized Hecke
//! eigenforms `E_{w−12}·Δ` spanning the one-dimensional spaces S_18, S_22
//! and S_26.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::LfuncError;

/// `τ(1..=n)`; position 0 holds τ(1).
///
/// `q∏(1−q^m)^{24}` is expanded as the 24th power of Euler's pentagonal
/// series `P = Σ_m (−1)^m q^{m(3m−1)/2}` with the power recurrence
/// `g_n = (1/n) Σ_{j≥1} (25j − n) p_j g_{n−j}` (exact division), so only the
/// O(√n) nonzero `p_j` are visited for each n.
pub fn delta_tau(n: usize) -> Vec<BigInt> {
    if n == 0 {
        return Vec::new();
    }
    // Nonzero pentagonal coefficients below n.
    let mut pent: Vec<(usize, i64)> = Vec::new();
    for m in 1i64.. {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let a = (m * (3 * m - 1) / 2) as usize;
        let b = (m * (3 * m + 1) / 2) as usize;
        if a >= n {
            break;
        }
        pent.push((a, sign));
        if b < n {
            pent.push((b, sign));
        }
    }
    pent.sort_unstable();
    let r = 24i64;
    let mut g: Vec<BigInt> = Vec::with_capacity(n);
    g.push(BigInt::one());
    for m in 1..n {
        let mut acc = BigInt::zero();
        for &(j, p) in &pent {
            if j > m {
                break;
            }
            let factor = ((r + 1) * j as i64 - m as i64) * p;
            acc += &g[m - j] * factor;
        }
        g.push(acc / m as i64);
    }
    g
}

/// `σ_e(1..=n)` exactly; position 0 holds σ_e(1).
pub fn divisor_power_sums(e: u32, n: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); n];
    for d in 1..=n {
        let p = BigInt::from(d).pow(e);
        for m in (d..=n).step_by(d) {
            s[m - 1] += &p;
        }
    }
    s
}

/// Weight `w ∈ {18, 22, 26}`: the Eisenstein factor `E_{w−12} = 1 + c Σ σ_{w−13}(n) qⁿ`.
fn eisenstein_factor(weight: u32) -> Result<(i64, u32), LfuncError> {
    match weight {
        18 => Ok((-504, 5)),
        22 => Ok((-264, 9)),
        26 => Ok((-24, 13)),
        _ => Err(LfuncError::UnsupportedWeight(weight)),
    }
}

/// Smallest-prime-factor table on `0..=n`.
fn smallest_prime_factor(n: usize) -> Vec<usize> {
    let mut spf = vec![0usize; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut m = i;
            while m <= n {
                if spf[m] == 0 {
                    spf[m] = i;
                }
                m += i;
            }
        }
    }
    spf
}

/// Eigenvalues `a(1..=n)` of the normalized weight-`w` eigenform.
///
/// `a(p)` at primes comes from the product `E_{w−12}·Δ` (one convolution
/// term per prime, primes processed in parallel); prime powers follow
/// `a(p^{e+1}) = a(p)a(p^e) − p^{w−1}a(p^{e−1})` and composites are
/// multiplicative.
pub fn eigenform_coefficients(weight: u32, n: usize) -> Result<Vec<BigInt>, LfuncError> {
    let (c, e) = eisenstein_factor(weight)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let tau = delta_tau(n);
    let sigma = divisor_power_sums(e, n);
    let spf = smallest_prime_factor(n);
    let primes: Vec<usize> = (2..=n).filter(|&i| spf[i] == i).collect();
    let at_primes: Vec<BigInt> = primes
        .par_iter()
        .map(|&p| {
            // coefficient of q^p in E·Δ: τ(p) + c Σ_{j=1}^{p−1} σ(j) τ(p−j)
            let mut acc = BigInt::zero();
            for j in 1..p {
                acc += &sigma[j - 1] * &tau[p - j - 1];
            }
            acc * c + &tau[p - 1]
        })
        .collect();
    let mut a = vec![BigInt::zero(); n + 1];
    a[1] = BigInt::one();
    for (&p, ap) in primes.iter().zip(at_primes) {
        a[p] = ap;
    }
    for m in 2..=n {
        let p = spf[m];
        if m == p {
            continue;
        }
        // m = p^e · r with gcd(p, r) = 1
        let mut pe = 1usize;
        let mut r = m;
        while r % p == 0 {
            r /= p;
            pe *= p;
        }
        if r > 1 {
            a[m] = &a[pe] * &a[r];
        } else {
            let chi = BigInt::from(p).pow(weight - 1);
            a[m] = &a[p] * &a[m / p] - chi * &a[m / (p * p)];
        }
    }
    a.remove(0);
    Ok(a)
}

/// The same coefficients by the full truncated product `E_{w−12}·Δ`.
/// Quadratic cost; an oracle for [`eigenform_coefficients`].
pub fn eigenform_by_product(weight: u32, n: usize) -> Result<Vec<BigInt>, LfuncError> {
    let (c, e) = eisenstein_factor(weight)?;
    let tau = delta_tau(n);
    let sigma = divisor_power_sums(e, n);
    Ok((1..=n)
        .map(|m| {
            let mut acc = tau[m - 1].clone();
            for j in 1..m {
                acc += &sigma[j - 1] * &tau[m - j - 1] * c;
            }
            acc
        })
        .collect())
}

/// True if `|a(n)| <= d(n)·n^{(w−1)/2}` for every n in the prefix.
pub fn deligne_bound_holds(weight: u32, a: &[BigInt]) -> bool {
    a.iter().enumerate().all(|(i, v)| {
        let n = (i + 1) as f64;
        let d = (1..=i + 1).filter(|k| (i + 1) % k == 0).count() as f64;
        crate::series::bigint_to_f64(&v.abs()) <= d * n.powf((weight as f64 - 1.0) / 2.0) * (1.0 + 1e-12)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn tau_prefix() {
        let t = delta_tau(12);
        assert_eq!(
            t,
            ints(&[1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944])
        );
        assert_eq!(&t[5], &(&t[1] * &t[2]));
    }

    #[test]
    fn tau_matches_direct_product() {
        let n = 200;
        let mut p = vec![BigInt::zero(); n];
        p[0] = BigInt::one();
        for m in 1..n {
            for _ in 0..24 {
                for i in (m..n).rev() {
                    let sub = p[i - m].clone();
                    p[i] -= sub;
                }
            }
        }
        assert_eq!(delta_tau(n), p);
    }

    #[test]
    fn weight_eighteen_prefix() {
        let a = eigenform_coefficients(18, 12).unwrap();
        assert_eq!(
            a,
            ints(&[
                1, -528, -4284, 147712, -1025850, 2261952, 3225992, -8785920, -110787507, 541648800,
                -753618228, -632798208
            ])
        );
        assert_eq!(&a[3], &(&a[1] * &a[1] - BigInt::from(2).pow(17)));
    }

    #[test]
    fn other_weights_prefix() {
        assert_eq!(
            eigenform_coefficients(22, 6).unwrap(),
            ints(&[1, -288, -128844, -2014208, 21640950, 37107072])
        );
        assert_eq!(
            eigenform_coefficients(26, 6).unwrap(),
            ints(&[1, -48, -195804, -33552128, -741989850, 9398592])
        );
        assert!(matches!(eigenform_coefficients(24, 5), Err(LfuncError::UnsupportedWeight(24))));
    }

    #[test]
    fn hecke_route_matches_product_and_is_multiplicative() {
        for w in [18, 22, 26] {
            let n = 300;
            let a = eigenform_coefficients(w, n).unwrap();
            assert_eq!(a, eigenform_by_product(w, n).unwrap(), "weight {w}");
            for m in 1..=40usize {
                for k in 1..=40usize {
                    if m.gcd(&k) == 1 && m * k <= n {
                        assert_eq!(a[m * k - 1], &a[m - 1] * &a[k - 1]);
                    }
                }
            }
            assert!(deligne_bound_holds(w, &a));
        }
    }
}
