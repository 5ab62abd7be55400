//! The rational function field `F_p(T)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::fp_poly::FpPoly;
use super::Field;
use crate::error::{Error, Result};

/// `num / den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: FpPoly,
    den: FpPoly,
}

impl RatFunc {
    /// Panics if `den` is zero.
    pub fn new(num: FpPoly, den: FpPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in F_p(T)");
        assert_eq!(num.modulus(), den.modulus());
        let g = num.gcd(&den);
        let (mut num, mut den) =
            if g.is_zero() || g.is_one() { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        if !den.is_monic() {
            let inv = den.inv_scalar(den.lead());
            num = num.scale(inv);
            den = den.scale(inv);
        }
        if num.is_zero() {
            den = FpPoly::one(num.modulus());
        }
        RatFunc { num, den }
    }

    pub fn from_poly(num: FpPoly) -> Self {
        let p = num.modulus();
        RatFunc { num, den: FpPoly::one(p) }
    }

    pub fn numer(&self) -> &FpPoly {
        &self.num
    }

    pub fn denom(&self) -> &FpPoly {
        &self.den
    }

    pub fn modulus(&self) -> u64 {
        self.num.modulus()
    }

    /// True when the element lies in `F_p[T]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Parses `"poly"` or `"poly/poly"` where `poly` is written in `T`,
    /// e.g. `"T^2+T+1"` or `"(T+1)/(T^2+T)"`.
    pub fn parse(p: u64, s: &str) -> Result<Self> {
        let s = s.trim();
        match split_top_level_slash(s) {
            Some((n, d)) => {
                let den = parse_fp_poly(p, d)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(RatFunc::new(parse_fp_poly(p, n)?, den))
            }
            None => Ok(RatFunc::from_poly(parse_fp_poly(p, s)?)),
        }
    }
}

fn split_top_level_slash(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

/// Parses a polynomial in `T` with integer coefficients reduced mod `p`.
pub fn parse_fp_poly(p: u64, s: &str) -> Result<FpPoly> {
    let bad = || Error::Parse(format!("not a polynomial in T: {s:?}"));
    let mut body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if body.starts_with('(') && body.ends_with(')') {
        body = body[1..body.len() - 1].to_string();
    }
    if body.is_empty() {
        return Err(bad());
    }
    let pb = BigInt::from(p);
    let mut acc = FpPoly::zero(p);
    let mut rest = body.as_str();
    while !rest.is_empty() {
        let (sign, after) = match rest.as_bytes()[0] {
            b'+' => (1i64, &rest[1..]),
            b'-' => (-1i64, &rest[1..]),
            _ => (1i64, rest),
        };
        let end = after[1.min(after.len())..].find(['+', '-']).map(|i| i + 1).unwrap_or(after.len());
        let term = &after[..end];
        rest = &after[end..];
        if term.is_empty() {
            return Err(bad());
        }
        let (coef, power) = match term.find('T') {
            None => (term, None),
            Some(i) => {
                let c = term[..i].trim_end_matches('*');
                let e = &term[i + 1..];
                let e = if e.is_empty() {
                    1
                } else {
                    e.strip_prefix('^').and_then(|e| e.parse::<usize>().ok()).ok_or_else(bad)?
                };
                (c, Some(e))
            }
        };
        let c: BigInt = if coef.is_empty() { 1.into() } else { coef.parse().map_err(|_| bad())? };
        let c = (c * sign).mod_floor(&pb).to_u64().ok_or_else(bad)?;
        let term = FpPoly::monomial(p, power.unwrap_or(0)).scale(c);
        acc = &acc + &term;
    }
    Ok(acc)
}

impl Field for RatFunc {
    type Ctx = u64;

    fn zero_in(p: &u64) -> Self {
        RatFunc::from_poly(FpPoly::zero(*p))
    }
    fn one_in(p: &u64) -> Self {
        RatFunc::from_poly(FpPoly::one(*p))
    }
    fn from_int(p: &u64, n: &BigInt) -> Self {
        let c = n.mod_floor(&BigInt::from(*p)).to_u64().unwrap();
        RatFunc::from_poly(FpPoly::constant(*p, c))
    }
    fn context(&self) -> u64 {
        self.modulus()
    }
    fn is_zero_elem(&self) -> bool {
        self.num.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| RatFunc::new(self.den.clone(), self.num.clone()))
    }

    /// Multiplies over a common denominator so that each output coefficient
    /// is normalized once.
    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        if a.len().min(b.len()) <= 2 {
            return super::schoolbook_mul(a, b);
        }
        let (na, da) = common_denominator(a);
        let (nb, db) = common_denominator(b);
        let p = da.modulus();
        let mut out = vec![FpPoly::zero(p); a.len() + b.len() - 1];
        for (i, x) in na.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in nb.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = &out[i + j] + &(x * y);
                }
            }
        }
        let den = &da * &db;
        out.into_iter().map(|n| RatFunc::new(n, den.clone())).collect()
    }

    fn field_name(p: &u64) -> String {
        format!("F_{p}(T)")
    }
}

fn common_denominator(coeffs: &[RatFunc]) -> (Vec<FpPoly>, FpPoly) {
    let p = coeffs[0].modulus();
    let mut l = FpPoly::one(p);
    for c in coeffs {
        if !c.den.is_one() {
            let g = l.gcd(&c.den);
            l = &l * &c.den.div_rem(&g).0;
        }
    }
    let nums = coeffs.iter().map(|c| &c.num * &l.div_rem(&c.den).0).collect();
    (nums, l)
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den);
        }
        RatFunc::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes() {
        let p = 2;
        let t = FpPoly::t(p);
        let tt1 = &(&t * &t) + &t; // T^2 + T
        let r = RatFunc::new(t.clone(), tt1.clone());
        assert_eq!(r.denom(), &FpPoly::from_i64(p, &[1, 1]));
        assert_eq!(r.numer(), &FpPoly::one(p));
        let inv = r.inv().unwrap();
        assert!(inv.is_polynomial());
        assert!((r * inv).is_one_elem());
    }

    #[test]
    fn parses() {
        let r = RatFunc::parse(2, "(T+1)/(T^2+T)").unwrap();
        assert_eq!(r.to_string(), "(1)/(T)");
        let q = RatFunc::parse(3, "2T^2-T+4").unwrap();
        assert_eq!(q.to_string(), "2T^2+2T+1");
        assert!(RatFunc::parse(3, "1/0").is_err());
        assert!(RatFunc::parse(3, "T^x").is_err());
    }
}
