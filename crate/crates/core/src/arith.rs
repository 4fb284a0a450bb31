//! Integer helpers: divisor lists for Kronecker evaluation values and
//! perfect-square tests.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Pollard-Brent rho; `n` must be composite and odd.
fn rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn prime_factors(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    let mut n = n;
    for p in [2u64, 3, 5, 7, 11, 13] {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
    }
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = rho(n);
    prime_factors(d, out);
    prime_factors(n / d, out);
}

/// Positive divisors of `n`, ascending. `n` must be nonzero and fit in 64 bits.
pub fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let m = n
        .abs()
        .to_u64()
        .filter(|&m| m != 0)
        .ok_or_else(|| Error::ValueTooLarge(n.to_string()))?;
    let mut primes = Vec::new();
    prime_factors(m, &mut primes);
    primes.sort_unstable();
    let mut divs = vec![1u64];
    let mut i = 0;
    while i < primes.len() {
        let p = primes[i];
        let mut e = 0;
        while i < primes.len() && primes[i] == p {
            e += 1;
            i += 1;
        }
        let base = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for j in 0..base {
                divs.push(divs[j] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs.into_iter().map(BigInt::from).collect())
}

/// Square root of `n` when `n` is a nonnegative perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some(BigInt::zero());
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divs(n: i64) -> Vec<i64> {
        divisors(&BigInt::from(n))
            .unwrap()
            .into_iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn divisor_lists_match_trial_division() {
        for n in 1i64..400 {
            let brute: Vec<i64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divs(n), brute, "n = {n}");
            assert_eq!(divs(-n), brute);
        }
    }

    #[test]
    fn large_semiprime() {
        // 1000003 * 999983
        let d = divs(1_000_003 * 999_983);
        assert_eq!(d, vec![1, 999_983, 1_000_003, 1_000_003 * 999_983]);
        assert!(divisors(&BigInt::zero()).is_err());
        assert!(divisors(&(BigInt::from(u64::MAX) + 1)).is_err());
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(3_215_031_751));
    }

    #[test]
    fn squares() {
        assert_eq!(exact_sqrt(&BigInt::from(36)), Some(BigInt::from(6)));
        assert_eq!(exact_sqrt(&BigInt::from(0)), Some(BigInt::from(0)));
        assert_eq!(exact_sqrt(&BigInt::from(30)), None);
        assert_eq!(exact_sqrt(&BigInt::from(-4)), None);
    }
}
