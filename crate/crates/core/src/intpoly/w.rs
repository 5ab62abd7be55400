//! The exponent `w_k(n) = sum_{i >= 1} floor(n / k^i)`.

use std::fmt::Display;

use num_integer::Integer;

use crate::error::{Error, Result};

/// `w_k(n)`, computed both as the floor sum and as `(n - s)/(k - 1)` with `s`
/// the digit sum of `n` in base `k`; the two must agree.
pub fn w<T: Integer + Clone + Display>(k: &T, n: &T) -> Result<T> {
    if *k <= T::one() {
        return Err(Error::InvalidArgument(format!("w_k(n) needs k > 1, got k = {k}")));
    }
    if *n < T::zero() {
        return Err(Error::InvalidArgument(format!("w_k(n) needs n >= 0, got n = {n}")));
    }
    let mut floor_sum = T::zero();
    let mut t = n.div_floor(k);
    while !t.is_zero() {
        floor_sum = floor_sum + t.clone();
        t = t.div_floor(k);
    }
    let mut digits = T::zero();
    let mut m = n.clone();
    while !m.is_zero() {
        let (q, r) = m.div_rem(k);
        digits = digits + r;
        m = q;
    }
    let by_digits = (n.clone() - digits) / (k.clone() - T::one());
    if by_digits != floor_sum {
        return Err(Error::Internal(format!("w_{k}({n}): floor sum {floor_sum} != digit formula {by_digits}")));
    }
    Ok(floor_sum)
}

/// `w` on machine integers; panics on invalid input.
pub fn w_u64(k: u64, n: u64) -> u64 {
    w(&k, &n).expect("k > 1")
}

/// Base-`k` digits of `n`, least significant first (empty for `n = 0`).
pub fn digits(k: u64, mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % k);
        n /= k;
    }
    out
}
