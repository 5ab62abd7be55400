//! Independent reference computations used by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use intpoly::arith::fp_poly::FpPoly;
use intpoly::{Poly, QuadElem};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn primes_naive(n: u64) -> Vec<u64> {
    (2..=n).filter(|&m| (2..m).take_while(|d| d * d <= m).all(|d| m % d != 0)).collect()
}

/// `v_p(m)` by repeated division.
pub fn val(mut m: u64, p: u64) -> u64 {
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    v
}

/// `v_p(n!)` for every `n <= limit`, accumulated factor by factor.
pub fn factorial_valuations(p: u64, limit: u64) -> Vec<u64> {
    let mut out = vec![0u64; limit as usize + 1];
    for m in 1..=limit {
        out[m as usize] = out[m as usize - 1] + val(m, p);
    }
    out
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, m| acc * m)
}

/// `v_p(x)` of a nonzero big integer by literal division.
pub fn big_val(x: &BigInt, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// Legendre's sum `sum_i floor(n / k^i)`.
pub fn legendre(k: u64, n: u64) -> u64 {
    let mut s = 0;
    let mut pk = k;
    while pk <= n {
        s += n / pk;
        match pk.checked_mul(k) {
            Some(x) => pk = x,
            None => break,
        }
    }
    s
}

/// `binom(X, n)` as a product of linear factors.
pub fn binomial_poly(n: usize) -> Poly<BigRational> {
    let mut acc = Poly::one(&());
    for i in 0..n {
        let lin = Poly::new((), vec![rat(-(i as i64), (i + 1) as i64), rat(1, (i + 1) as i64)]).unwrap();
        acc = acc.checked_mul(&lin).unwrap();
    }
    acc
}

/// Horner evaluation on raw coefficients.
pub fn eval_q(coeffs: &[BigRational], x: i64) -> BigRational {
    let xr = BigRational::from_integer(x.into());
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &xr + c)
}

/// Newton coefficients `c_k = Δ^k f(0)` from the values at `0..=deg`,
/// computed on the integer polynomial `L f` and divided by `L` at the end.
pub fn newton_coefficients(coeffs: &[BigRational]) -> Vec<BigRational> {
    let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let n = coeffs.len();
    let mut vals: Vec<BigInt> = (0..n as i64)
        .map(|x| {
            let xb = BigInt::from(x);
            ints.iter().rev().fold(BigInt::zero(), |acc, c| acc * &xb + c)
        })
        .collect();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(BigRational::new(vals[0].clone(), l.clone()));
        vals = vals.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

/// Reduced forms `(a, b, c)` of discriminant `disc < 0`, counted directly.
pub fn class_number_bruteforce(disc: i64) -> usize {
    let n = -disc;
    let mut h = 0;
    let mut a = 1;
    while 3 * a * a <= n {
        for b in -a + 1..=a {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            if a.gcd(&b.abs()).gcd(&c) == 1 {
                h += 1;
            }
        }
        a += 1;
    }
    h
}

/// Whether the norm form of `O_K` represents `m`: `x^2 + delta x y + c y^2 = m`.
pub fn norm_form_represents(disc: i64, m: i64) -> bool {
    let delta = disc.rem_euclid(2);
    let c = (delta - disc) / 4;
    let bound = 2 * ((m as f64).sqrt() as i64 + 2);
    (-bound..=bound).any(|x| (-bound..=bound).any(|y| x * x + delta * x * y + c * y * y == m))
}

/// `a^e` in `F_q` represented by `(u, v)` = `u + v t` with `t^2 = s t + r`, mod `p`.
pub fn quad_field_pow(a: (u64, u64), e: u64, s: u64, r: u64, p: u64) -> (u64, u64) {
    let mul = |x: (u64, u64), y: (u64, u64)| {
        let t2 = x.1 * y.1 % p;
        ((x.0 * y.0 + t2 * r) % p, (x.0 * y.1 + x.1 * y.0 + t2 * s) % p)
    };
    let mut acc = (1, 0);
    for _ in 0..e {
        acc = mul(acc, a);
    }
    acc
}

/// Roots of `x^2 + 1` in `F_p` by enumeration.
pub fn roots_x2_plus_1(p: u64) -> Vec<u64> {
    (0..p).filter(|x| (x * x + 1) % p == 0).collect()
}

/// `(T^2 + T)^3 (T^2 + T + 1)` over `F_2`, expanded by hand-rolled multiplication.
pub fn f2_factorial_four() -> FpPoly {
    let mul = |a: &[u64], b: &[u64]| {
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % 2;
            }
        }
        out
    };
    let t2t = [0u64, 1, 1];
    let mut acc = vec![1u64];
    for _ in 0..3 {
        acc = mul(&acc, &t2t);
    }
    acc = mul(&acc, &[1, 1, 1]);
    FpPoly::new(2, acc)
}

/// Values of `f` at `0..=deg` all satisfy `ok`; over `Z` and `Z_(p)` this decides membership.
pub fn values_ok(f: &Poly<BigRational>, ok: impl Fn(&BigRational) -> bool) -> bool {
    let n = f.coeffs().len().max(1) as i64;
    (0..n).all(|x| ok(&eval_q(f.coeffs(), x)))
}

pub fn quad(u: i64, v: i64, d: &BigInt) -> QuadElem {
    QuadElem::from_basis(rat(u, 1), rat(v, 1), d)
}

pub fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("fits i64")
}
