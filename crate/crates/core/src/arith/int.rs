//! Small-integer number theory used throughout: primality, prime powers,
//! factorization by trial division, Möbius function, Kronecker symbols.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
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

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes `<= bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve.iter().enumerate().filter_map(|(i, &b)| b.then_some(i as u64)).collect()
}

/// Factorization by trial division, as ascending `(prime, exponent)` pairs.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, e))` when `n = p^e` with `e >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factor(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn is_prime_power(n: u64) -> bool {
    prime_power(n).is_some()
}

pub fn mobius(n: u64) -> i32 {
    let f = factor(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn is_squarefree(d: &BigInt) -> bool {
    let n = d.abs();
    if n.is_zero() {
        return false;
    }
    let Some(n) = n.to_u64() else {
        return false;
    };
    factor(n).iter().all(|&(_, e)| e == 1)
}

/// Field discriminant of `Q(sqrt d)` for squarefree `d`.
pub fn field_discriminant(d: &BigInt) -> BigInt {
    if d.mod_floor(&BigInt::from(4)) == BigInt::one() {
        d.clone()
    } else {
        d * 4
    }
}

/// Kronecker symbol `(disc | p)` for a prime `p`.
pub fn kronecker(disc: &BigInt, p: u64) -> i32 {
    if p == 2 {
        if disc.is_even() {
            return 0;
        }
        let r = disc.mod_floor(&BigInt::from(8)).to_u64().unwrap();
        return if r == 1 || r == 7 { 1 } else { -1 };
    }
    let a = disc.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// `floor(sqrt(n))` for nonnegative `n`.
pub fn isqrt(n: &BigInt) -> BigInt {
    n.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_matches_sieve() {
        let sieve = primes_up_to(5000);
        let direct: Vec<u64> = (0..=5000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, direct);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn prime_powers_and_mobius() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(1), 1);
    }

    #[test]
    fn kronecker_symbols() {
        let m20 = BigInt::from(-20);
        assert_eq!(kronecker(&m20, 2), 0);
        assert_eq!(kronecker(&m20, 3), 1);
        assert_eq!(kronecker(&m20, 5), 0);
        assert_eq!(kronecker(&m20, 7), 1);
        assert_eq!(kronecker(&m20, 11), -1);
        let m3 = BigInt::from(-3);
        assert_eq!(kronecker(&m3, 2), -1);
        assert_eq!(kronecker(&BigInt::from(-7), 2), 1);
    }

    #[test]
    fn discriminants() {
        assert_eq!(field_discriminant(&BigInt::from(-5)), BigInt::from(-20));
        assert_eq!(field_discriminant(&BigInt::from(-3)), BigInt::from(-3));
        assert_eq!(field_discriminant(&BigInt::from(-1)), BigInt::from(-4));
        assert!(is_squarefree(&BigInt::from(-29)));
        assert!(!is_squarefree(&BigInt::from(-12)));
    }
}
