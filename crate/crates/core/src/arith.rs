//! Integer arithmetic helpers: primality, factorization, square detection.
//!
//! These are the small exact kernels the rest of the crate leans on when it
//! needs to know the multiplicative structure of an integer: extracting the
//! squarefree kernel of a twist parameter, enumerating candidate primes of
//! good reduction, or testing whether a discriminant is a perfect square.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Modular multiplication on u64 without overflow.
#[inline]
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Modular exponentiation on u64.
pub fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Modular inverse on u64 for prime modulus.
pub fn invmod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime everywhere this is used.
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64.
///
/// The base set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} decides
/// primality correctly for all inputs below 2^64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Iterator over primes in increasing order, by trial division.
pub struct Primes {
    next: u64,
}

impl Primes {
    pub fn new() -> Self {
        Primes { next: 2 }
    }

    /// Primes starting from the first prime >= `from`.
    pub fn from(from: u64) -> Self {
        Primes { next: from.max(2) }
    }
}

impl Default for Primes {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        let mut n = self.next;
        while !is_prime_u64(n) {
            n += 1;
        }
        self.next = n + 1;
        Some(n)
    }
}

/// Pollard's rho with Brent cycling; returns a nontrivial factor of odd
/// composite n.
fn pollard_rho(n: u64, seed: u64) -> u64 {
    let mut c = seed;
    loop {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut x = seed % n;
        let mut y = x;
        let mut d = 1u64;
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

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Full factorization of a u64 into (prime, exponent) pairs, ascending.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == 1 {
            break;
        }
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut stack = vec![n];
    let mut found: Vec<u64> = Vec::new();
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            found.push(m);
            continue;
        }
        let d = pollard_rho(m, 2);
        stack.push(d);
        stack.push(m / d);
    }
    found.sort_unstable();
    for p in found {
        match out.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => out.push((p, 1)),
        }
    }
    out.sort_unstable();
    out
}

/// Probabilistic Miller-Rabin for BigInt with fixed witness set; inputs that
/// fit in u64 are decided exactly.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    if let Ok(small) = u64::try_from(n) {
        return is_prime_u64(small);
    }
    let one = BigInt::one();
    let two = BigInt::from(2);
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let a = BigInt::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard rho for BigInt.
fn pollard_rho_big(n: &BigInt) -> BigInt {
    let one = BigInt::one();
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = BigInt::one();
        while d == one {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

/// Full factorization of a nonzero BigInt's absolute value.
///
/// Trial division by small primes, then recursive rho splitting. The inputs
/// this crate produces (twist parameters, discriminant supports) stay well
/// within rho's comfortable range.
pub fn factor_bigint(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(!n.is_zero(), "factor_bigint(0)");
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for p in Primes::new().take(200) {
        let pb = BigInt::from(p);
        let mut e = 0;
        while (&n % &pb).is_zero() {
            n /= &pb;
            e += 1;
        }
        if e > 0 {
            out.push((pb, e));
        }
        if n.is_one() {
            break;
        }
    }
    let mut stack = vec![n];
    let mut found: Vec<BigInt> = Vec::new();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            found.push(m);
            continue;
        }
        let d = pollard_rho_big(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    found.sort();
    for p in found {
        match out.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => out.push((p, 1)),
        }
    }
    out.sort();
    out
}

/// Exact integer square root if `n` is a perfect square.
pub fn sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// The squarefree kernel of a nonzero integer: the unique squarefree m with
/// n = m * t^2, carrying the sign of n.
pub fn squarefree_kernel(n: &BigInt) -> BigInt {
    assert!(!n.is_zero(), "squarefree_kernel(0)");
    let mut m = BigInt::one();
    for (p, e) in factor_bigint(n) {
        if e % 2 == 1 {
            m *= p;
        }
    }
    if n.is_negative() {
        -m
    } else {
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }

    #[test]
    fn primality_carmichael() {
        // Carmichael numbers fool Fermat but not Miller-Rabin.
        for n in [561u64, 1105, 1729, 2465, 2821, 6601, 8911, 10585] {
            assert!(!is_prime_u64(n), "{n}");
        }
    }

    #[test]
    fn factor_roundtrip() {
        for n in [2u64, 12, 97, 1 << 20, 600851475143, 999999999989, 10403] {
            let f = factor_u64(n);
            let prod: u64 = f.iter().map(|(p, e)| p.pow(*e)).product();
            assert_eq!(prod, n);
            for (p, _) in &f {
                assert!(is_prime_u64(*p));
            }
        }
    }

    #[test]
    fn factor_bigint_roundtrip() {
        let n = BigInt::from(2u64).pow(64) + 1; // 274177 * 67280421310721
        let f = factor_bigint(&n);
        let prod: BigInt = f.iter().map(|(p, e)| p.pow(*e)).product();
        assert_eq!(prod, n);
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn kernels() {
        assert_eq!(squarefree_kernel(&BigInt::from(-4)), BigInt::from(-1));
        assert_eq!(squarefree_kernel(&BigInt::from(12)), BigInt::from(3));
        assert_eq!(squarefree_kernel(&BigInt::from(360)), BigInt::from(10));
        assert_eq!(squarefree_kernel(&BigInt::from(-7)), BigInt::from(-7));
        assert_eq!(squarefree_kernel(&BigInt::from(1)), BigInt::from(1));
    }

    #[test]
    fn sqrt_detection() {
        assert_eq!(sqrt_exact(&BigInt::from(144)), Some(BigInt::from(12)));
        assert_eq!(sqrt_exact(&BigInt::from(145)), None);
        assert_eq!(sqrt_exact(&BigInt::from(0)), Some(BigInt::from(0)));
        assert_eq!(sqrt_exact(&BigInt::from(-4)), None);
    }
}
