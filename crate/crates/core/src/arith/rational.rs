//! `Q` as a [`Field`], plus fast integer-polynomial multiplication by
//! Kronecker substitution (packing a coefficient vector into one big integer).

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Field;
use crate::error::{Error, Result};

pub type Rational = BigRational;

impl Field for BigRational {
    type Ctx = ();

    fn zero_in(_: &()) -> Self {
        BigRational::zero()
    }
    fn one_in(_: &()) -> Self {
        BigRational::one()
    }
    fn from_int(_: &(), n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn context(&self) {}
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn is_one_elem(&self) -> bool {
        One::is_one(self)
    }

    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        if a.len().min(b.len()) <= 8 {
            return super::schoolbook_mul(a, b);
        }
        let (na, da) = clear_denominators(a);
        let (nb, db) = clear_denominators(b);
        let den = da * db;
        int_poly_mul(&na, &nb).into_iter().map(|c| BigRational::new(c, den.clone())).collect()
    }

    // One reduction at the end instead of a gcd per addition.
    fn sum_of_products(_: &(), terms: &[(&Self, &Self)]) -> Self {
        let dens: Vec<BigInt> = terms.iter().map(|(x, y)| x.denom() * y.denom()).collect();
        let l = dens.iter().fold(BigInt::one(), |acc, d| if d.is_one() { acc } else { acc.lcm(d) });
        let mut num = BigInt::zero();
        for ((x, y), d) in terms.iter().zip(&dens) {
            if !x.is_zero() && !y.is_zero() {
                num += x.numer() * y.numer() * (&l / d);
            }
        }
        BigRational::new(num, l)
    }

    fn field_name(_: &()) -> String {
        "Q".to_string()
    }
}

/// Splits `coeffs` as `(numerators, L)` with `coeffs[i] = numerators[i] / L`
/// and `L` the least common denominator.
pub fn clear_denominators(coeffs: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let mut l = BigInt::one();
    for c in coeffs {
        if !c.denom().is_one() {
            l = l.lcm(c.denom());
        }
    }
    let nums = coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    (nums, l)
}

fn bit_len(n: &BigInt) -> u64 {
    n.bits()
}

/// Product of integer polynomials (ascending coefficients, both nonempty).
pub fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len() + b.len() - 1;
    let ba = a.iter().map(bit_len).max().unwrap_or(0);
    let bb = b.iter().map(bit_len).max().unwrap_or(0);
    if ba == 0 || bb == 0 {
        return vec![BigInt::zero(); n];
    }
    if a.len().min(b.len()) <= 8 {
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        return out;
    }
    let guard = 64 - (a.len().min(b.len()) as u64).leading_zeros() as u64;
    let bits = ba + bb + guard + 2;
    let slot = bits.div_ceil(32) as usize;
    let product = pack(a, slot) * pack(b, slot);
    unpack(&product, slot, n)
}

fn pack(coeffs: &[BigInt], slot: usize) -> BigInt {
    let mut pos = vec![0u32; coeffs.len() * slot];
    let mut neg = vec![0u32; coeffs.len() * slot];
    for (i, c) in coeffs.iter().enumerate() {
        let target = if c.is_negative() { &mut neg } else { &mut pos };
        for (k, d) in c.magnitude().to_u32_digits().into_iter().enumerate() {
            target[i * slot + k] = d;
        }
    }
    BigInt::from_biguint(Sign::Plus, BigUint::new(pos)) - BigInt::from_biguint(Sign::Plus, BigUint::new(neg))
}

fn unpack(packed: &BigInt, slot: usize, n: usize) -> Vec<BigInt> {
    // Shift every slot by 2^(32*slot - 1) so all digits become nonnegative.
    let mut offset = vec![0u32; n * slot];
    for i in 0..n {
        offset[i * slot + slot - 1] = 1 << 31;
    }
    let shifted = packed + BigInt::from_biguint(Sign::Plus, BigUint::new(offset));
    debug_assert!(!shifted.is_negative());
    let mut digits = shifted.magnitude().to_u32_digits();
    digits.resize(n * slot, 0);
    let half = BigInt::one() << (32 * slot - 1);
    digits.chunks(slot).map(|chunk| BigInt::from_biguint(Sign::Plus, BigUint::from_slice(chunk)) - &half).collect()
}

/// Parses `"n"` or `"n/d"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
