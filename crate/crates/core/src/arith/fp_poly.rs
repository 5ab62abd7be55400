//! Dense polynomials in `T` over the prime field `F_p`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::int::pow_mod;

/// Element of `F_p[T]`; coefficients ascending in degree, no trailing zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = FpPoly { p, coeffs: coeffs.into_iter().map(|c| c % p).collect() };
        f.trim();
        f
    }

    pub fn from_i64(p: u64, coeffs: &[i64]) -> Self {
        let pi = p as i128;
        Self::new(p, coeffs.iter().map(|&c| (c as i128).rem_euclid(pi) as u64).collect())
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    /// The indeterminate `T`.
    pub fn t(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn monomial(p: u64, deg: usize) -> Self {
        let mut c = vec![0; deg + 1];
        c[deg] = 1;
        Self::new(p, c)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    pub fn inv_scalar(&self, c: u64) -> u64 {
        assert!(!c.is_multiple_of(self.p), "inverting zero in F_{}", self.p);
        pow_mod(c, self.p - 2, self.p)
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.p;
        Self::new(p, self.coeffs.iter().map(|&x| mul_mod(x, c % p, p)).collect())
    }

    /// Scales to a monic polynomial; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.inv_scalar(self.lead()))
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixing F_{} and F_{}", self.p, other.p);
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        self.check(divisor);
        let p = self.p;
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = self.inv_scalar(divisor.lead());
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Self::zero(p), self.clone());
        };
        let mut quot = vec![0u64; nd - dd + 1];
        for i in (dd..=nd).rev() {
            let c = mul_mod(rem[i], inv, p);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = (rem[idx] + p - mul_mod(c, dc, p)) % p;
            }
        }
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` the monic gcd.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = self.inv_scalar(r0.lead());
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, t: u64) -> u64 {
        let p = self.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| (mul_mod(acc, t % p, p) + c) % p)
    }

    /// Irreducibility by trial division against every monic polynomial of
    /// degree `1..=deg/2`.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        (1..=n / 2).all(|d| monic_of_degree(self.p, d).all(|g| !g.divides(self)))
    }

    /// Index of this polynomial among all polynomials of degree `< len`
    /// when read as base-`p` digits.
    pub fn to_index(&self) -> u128 {
        self.coeffs.iter().rev().fold(0u128, |acc, &c| acc * self.p as u128 + c as u128)
    }

    pub fn from_index(p: u64, mut idx: u128) -> Self {
        let mut c = Vec::new();
        while idx > 0 {
            c.push((idx % p as u128) as u64);
            idx /= p as u128;
        }
        Self::new(p, c)
    }
}

/// Iterates the monic polynomials of exact degree `deg` in index order.
pub fn monic_of_degree(p: u64, deg: usize) -> impl Iterator<Item = FpPoly> {
    let count = (p as u128).pow(deg as u32);
    (0..count).map(move |i| {
        let mut c = FpPoly::from_index(p, i).coeffs;
        c.resize(deg, 0);
        c.push(1);
        FpPoly::new(p, c)
    })
}

impl Ord for FpPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.p
            .cmp(&other.p)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &FpPoly {
    type Output = FpPoly;
    fn add(self, rhs: &FpPoly) -> FpPoly {
        self.check(rhs);
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % p
            })
            .collect();
        FpPoly::new(p, c)
    }
}

impl Neg for &FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        let p = self.p;
        FpPoly::new(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }
}

impl Sub for &FpPoly {
    type Output = FpPoly;
    fn sub(self, rhs: &FpPoly) -> FpPoly {
        self + &(-rhs)
    }
}

impl Mul for &FpPoly {
    type Output = FpPoly;
    fn mul(self, rhs: &FpPoly) -> FpPoly {
        self.check(rhs);
        let p = self.p;
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(p);
        }
        let mut out = vec![0u128; self.coeffs.len() + rhs.coeffs.len() - 1];
        let pp = p as u128;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % pp;
            }
        }
        FpPoly::new(p, out.into_iter().map(|c| c as u64).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FpPoly {
            type Output = FpPoly;
            fn $m(self, rhs: FpPoly) -> FpPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        -&self
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "T")?,
                (1, c) => write!(f, "{c}T")?,
                (i, 1) => write!(f, "T^{i}")?,
                (i, c) => write!(f, "{c}T^{i}")?,
            }
        }
        Ok(())
    }
}
