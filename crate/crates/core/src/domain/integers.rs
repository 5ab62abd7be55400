use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Domain, DomainSpec, FactoredIdeal, Membership, PrimeData, PrimeDesc};
use crate::arith::poly::Poly;
use crate::error::Result;

#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

#[derive(Clone, Copy, Debug)]
pub struct LocalizedIntegers {
    pub p: u64,
}

impl LocalizedIntegers {
    pub fn new(p: u64) -> Self {
        LocalizedIntegers { p }
    }
}

pub(crate) fn int_valuation(n: &BigInt, p: u64) -> i64 {
    assert!(!n.is_zero(), "valuation of zero");
    let pb = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

fn rat_valuation(x: &BigRational, p: u64) -> i64 {
    int_valuation(x.numer(), p) - int_valuation(x.denom(), p)
}

/// Left fold of extended gcds: `(g, c)` with `sum c_i n_i = g = gcd(n) >= 0`.
pub(crate) fn int_bezout(nums: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(nums.len());
    for n in nums {
        let e = g.extended_gcd(n);
        for c in coeffs.iter_mut() {
            *c *= &e.x;
        }
        coeffs.push(e.y);
        g = e.gcd;
    }
    if g.is_negative() {
        g = -g;
        for c in coeffs.iter_mut() {
            *c = -&*c;
        }
    }
    (g, coeffs)
}

fn rational_prime(p: &PrimeDesc) -> u64 {
    match p.data {
        PrimeData::Rational(p) => p,
        _ => panic!("expected a rational prime, got {p}"),
    }
}

/// First index whose binomial-basis coefficient fails `ok`, with the value
/// of `f` there. Earlier coefficients pass, so `f(k)` fails as well.
fn binomial_witness(f: &Poly<BigRational>, ok: impl Fn(&BigRational) -> bool) -> Option<(BigInt, BigRational)> {
    let coeffs = f.binomial_basis();
    let k = coeffs.iter().position(|c| !ok(c))?;
    let a = BigRational::from_integer(BigInt::from(k));
    let value = f.eval(&a).unwrap();
    debug_assert!(!ok(&value));
    Some((BigInt::from(k), value))
}

impl Domain for Integers {
    type Elem = BigRational;

    fn spec(&self) -> DomainSpec {
        DomainSpec::Integers
    }

    fn ctx(&self) {}

    fn contains(&self, x: &BigRational) -> bool {
        x.is_integer()
    }

    fn valuation(&self, p: &PrimeDesc, x: &BigRational) -> i64 {
        rat_valuation(x, rational_prime(p))
    }

    fn ideal_generator(&self, ideal: &FactoredIdeal) -> Option<BigRational> {
        let mut acc = BigRational::one();
        for (p, e) in ideal.factors() {
            let base = BigRational::from_integer(BigInt::from(rational_prime(p)));
            let k = e.abs().to_u32().expect("exponent fits u32");
            let t = num_traits::pow::Pow::pow(&base, k);
            acc = if e.is_negative() { acc / t } else { acc * t };
        }
        Some(acc)
    }

    fn bezout(&self, elems: &[BigRational]) -> Option<Vec<BigRational>> {
        assert!(elems.iter().all(BigRational::is_integer), "bezout inputs must lie in Z");
        let nums: Vec<BigInt> = elems.iter().map(|e| e.to_integer()).collect();
        let (g, c) = int_bezout(&nums);
        g.is_one().then(|| c.into_iter().map(BigRational::from_integer).collect())
    }

    fn is_member(&self, f: &Poly<BigRational>) -> Result<Membership<BigRational>> {
        Ok(match binomial_witness(f, BigRational::is_integer) {
            None => Membership::yes("binomial-basis"),
            Some((a, v)) => Membership::no(BigRational::from_integer(a), v, "binomial-basis"),
        })
    }
}

impl LocalizedIntegers {
    fn p_integral(&self, x: &BigRational) -> bool {
        !x.denom().is_multiple_of(&BigInt::from(self.p))
    }
}

impl Domain for LocalizedIntegers {
    type Elem = BigRational;

    fn spec(&self) -> DomainSpec {
        DomainSpec::LocalizedIntegers(self.p)
    }

    fn ctx(&self) {}

    fn contains(&self, x: &BigRational) -> bool {
        self.p_integral(x)
    }

    fn valuation(&self, p: &PrimeDesc, x: &BigRational) -> i64 {
        rat_valuation(x, rational_prime(p))
    }

    fn ideal_generator(&self, ideal: &FactoredIdeal) -> Option<BigRational> {
        Integers.ideal_generator(ideal)
    }

    fn bezout(&self, elems: &[BigRational]) -> Option<Vec<BigRational>> {
        assert!(elems.iter().all(|e| self.p_integral(e)), "bezout inputs must lie in Z_(p)");
        let (nums, l) = crate::arith::rational::clear_denominators(elems);
        let (g, c) = int_bezout(&nums);
        if g.is_zero() || g.is_multiple_of(&BigInt::from(self.p)) {
            return None;
        }
        let scale = BigRational::new(l, g);
        Some(c.into_iter().map(|x| BigRational::from_integer(x) * &scale).collect())
    }

    fn is_member(&self, f: &Poly<BigRational>) -> Result<Membership<BigRational>> {
        Ok(match binomial_witness(f, |c| self.p_integral(c)) {
            None => Membership::yes("binomial-basis"),
            Some((a, v)) => Membership::no(BigRational::from_integer(a), v, "binomial-basis"),
        })
    }
}
