//! Elements `x + y*sqrt(d)` of an imaginary quadratic field `Q(sqrt d)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::int::{field_discriminant, is_squarefree};
use super::rational::parse_rational;
use super::Field;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadElem {
    pub x: BigRational,
    pub y: BigRational,
    d: BigInt,
}

pub fn check_radicand(d: &BigInt) -> Result<()> {
    if !d.is_negative() || !is_squarefree(d) {
        return Err(Error::InvalidDomain(format!("radicand {d} must be negative and squarefree")));
    }
    Ok(())
}

impl QuadElem {
    pub fn new(x: BigRational, y: BigRational, d: BigInt) -> Self {
        QuadElem { x, y, d }
    }

    pub fn from_ints(x: i64, y: i64, d: &BigInt) -> Self {
        QuadElem::new(BigRational::from_integer(x.into()), BigRational::from_integer(y.into()), d.clone())
    }

    pub fn rational(x: BigRational, d: &BigInt) -> Self {
        QuadElem::new(x, BigRational::zero(), d.clone())
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn conj(&self) -> Self {
        QuadElem::new(self.x.clone(), -self.y.clone(), self.d.clone())
    }

    pub fn norm(&self) -> BigRational {
        &self.x * &self.x - &self.y * &self.y * BigRational::from_integer(self.d.clone())
    }

    pub fn trace(&self) -> BigRational {
        &self.x * BigRational::from_integer(2.into())
    }

    /// Coordinates `(u, v)` in the integral basis `{1, w}` of the maximal order,
    /// where `w = (delta + sqrt(disc))/2` and `delta = disc mod 2`.
    pub fn to_basis(&self) -> (BigRational, BigRational) {
        if self.d.mod_floor(&BigInt::from(4)) == BigInt::one() {
            // sqrt d = 2w - 1
            (&self.x - &self.y, &self.y * BigRational::from_integer(2.into()))
        } else {
            (self.x.clone(), self.y.clone())
        }
    }

    pub fn from_basis(u: BigRational, v: BigRational, d: &BigInt) -> Self {
        if d.mod_floor(&BigInt::from(4)) == BigInt::one() {
            let half = BigRational::new(1.into(), 2.into());
            let y = &v * &half;
            QuadElem::new(u + &y, y, d.clone())
        } else {
            QuadElem::new(u, v, d.clone())
        }
    }

    /// Membership in the maximal order `O_K`.
    pub fn is_integral(&self) -> bool {
        let (u, v) = self.to_basis();
        u.is_integer() && v.is_integer()
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.clone() * other.clone())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.clone() + other.clone())
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::FieldMismatch(format!("Q(sqrt {}) vs Q(sqrt {})", self.d, other.d)));
        }
        Ok(())
    }

    /// Parses `"x"` or `"x:y"` (meaning `x + y*sqrt(d)`) with exact rationals.
    pub fn parse(d: &BigInt, s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((x, y)) => Ok(QuadElem::new(parse_rational(x)?, parse_rational(y)?, d.clone())),
            None => Ok(QuadElem::rational(parse_rational(s)?, d)),
        }
    }

    pub fn discriminant(&self) -> BigInt {
        field_discriminant(&self.d)
    }
}

fn assert_same(a: &BigInt, b: &BigInt) {
    assert_eq!(a, b, "mixing Q(sqrt {a}) and Q(sqrt {b})");
}

impl Add for QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: QuadElem) -> QuadElem {
        assert_same(&self.d, &rhs.d);
        QuadElem::new(self.x + rhs.x, self.y + rhs.y, self.d)
    }
}

impl Sub for QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: QuadElem) -> QuadElem {
        assert_same(&self.d, &rhs.d);
        QuadElem::new(self.x - rhs.x, self.y - rhs.y, self.d)
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-self.x, -self.y, self.d)
    }
}

impl Mul for QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: QuadElem) -> QuadElem {
        assert_same(&self.d, &rhs.d);
        let d = BigRational::from_integer(self.d.clone());
        let x = &self.x * &rhs.x + &self.y * &rhs.y * d;
        let y = &self.x * &rhs.y + &self.y * &rhs.x;
        QuadElem::new(x, y, self.d)
    }
}

impl Field for QuadElem {
    type Ctx = BigInt;

    fn zero_in(d: &BigInt) -> Self {
        QuadElem::from_ints(0, 0, d)
    }
    fn one_in(d: &BigInt) -> Self {
        QuadElem::from_ints(1, 0, d)
    }
    fn from_int(d: &BigInt, n: &BigInt) -> Self {
        QuadElem::rational(BigRational::from_integer(n.clone()), d)
    }
    fn context(&self) -> BigInt {
        self.d.clone()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(&self.x) && Zero::is_zero(&self.y)
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        Some(QuadElem::new(&self.x / &n, -(&self.y / &n), self.d.clone()))
    }
    fn field_name(d: &BigInt) -> String {
        format!("Q(sqrt({d}))")
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.y) {
            return write!(f, "{}", self.x);
        }
        let root = format!("sqrt({})", self.d);
        let ystr = if One::is_one(&self.y) {
            root
        } else if One::is_one(&-self.y.clone()) {
            format!("-{root}")
        } else {
            format!("{}*{root}", self.y)
        };
        if Zero::is_zero(&self.x) {
            write!(f, "{ystr}")
        } else if ystr.starts_with('-') {
            write!(f, "{}{ystr}", self.x)
        } else {
            write!(f, "{}+{ystr}", self.x)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_in_q_sqrt_minus_5() {
        let d = BigInt::from(-5);
        let a = QuadElem::from_ints(1, 1, &d);
        let cube = a.pow(3);
        // (1 + s)^3 = 1 + 3s + 3s^2 + s^3 = 1 - 15 + (3 - 5)s
        assert_eq!(cube, QuadElem::from_ints(-14, -2, &d));
        assert!((a.clone() * a.inv().unwrap()).is_one_elem());
        assert_eq!(a.norm(), BigRational::from_integer(6.into()));
    }

    #[test]
    fn integral_basis() {
        let d = BigInt::from(-3);
        let w = QuadElem::new(BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 2.into()), d.clone());
        assert!(w.is_integral());
        assert!(!QuadElem::new(BigRational::new(1.into(), 2.into()), BigRational::zero(), d.clone()).is_integral());
        let (u, v) = w.to_basis();
        assert_eq!(QuadElem::from_basis(u, v, &d), w);
        let i = QuadElem::from_ints(0, 1, &BigInt::from(-1));
        assert!(i.is_integral());
    }

    #[test]
    fn mixed_fields_are_errors() {
        let a = QuadElem::from_ints(1, 1, &BigInt::from(-5));
        let b = QuadElem::from_ints(1, 1, &BigInt::from(-1));
        assert!(matches!(a.checked_mul(&b), Err(Error::FieldMismatch(_))));
        assert!(check_radicand(&BigInt::from(-4)).is_err());
        assert!(check_radicand(&BigInt::from(3)).is_err());
    }
}
