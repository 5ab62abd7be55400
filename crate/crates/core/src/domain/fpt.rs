use num_traits::{Signed, ToPrimitive};

use super::{well_distributed, Domain, DomainSpec, FactoredIdeal, Membership, PrimeData, PrimeDesc, EXHAUSTIVE_BUDGET};
use crate::arith::fp_poly::{monic_of_degree, FpPoly};
use crate::arith::int::{divisors, factor, mobius, prime_power};
use crate::arith::poly::Poly;
use crate::arith::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct FpPolyRing {
    pub p: u64,
}

impl FpPolyRing {
    pub fn new(p: u64) -> Self {
        FpPolyRing { p }
    }
}

fn pow_mod(base: &FpPoly, mut e: u128, m: &FpPoly) -> FpPoly {
    let mut acc = FpPoly::one(m.modulus()).rem(m);
    let mut b = base.rem(m);
    while e > 0 {
        if e & 1 == 1 {
            acc = (&acc * &b).rem(m);
        }
        e >>= 1;
        if e > 0 {
            b = (&b * &b).rem(m);
        }
    }
    acc
}

/// Rabin's test: `g | T^(p^n) - T` and `gcd(g, T^(p^(n/r)) - T) = 1` for primes `r | n`.
fn is_irreducible_rabin(g: &FpPoly) -> bool {
    let Some(n) = g.degree() else { return false };
    if n == 0 {
        return false;
    }
    let p = g.modulus();
    let t = FpPoly::t(p);
    // frob[k] = T^(p^k) mod g
    let mut frob = vec![t.rem(g)];
    for k in 0..n {
        let next = pow_mod(&frob[k], p as u128, g);
        frob.push(next);
    }
    if !(&frob[n] - &t).rem(g).is_zero() {
        return false;
    }
    factor(n as u64).into_iter().all(|(r, _)| (&frob[n / r as usize] - &t).gcd(g).is_one())
}

/// All monic irreducibles `g` with `p^deg(g) <= bound`, by degree then index.
pub(crate) fn irreducibles_of_norm_at_most(p: u64, bound: u64) -> Vec<FpPoly> {
    let mut out = Vec::new();
    let mut norm = p as u128;
    let mut deg = 1;
    while norm <= bound as u128 {
        out.extend(monic_of_degree(p, deg).filter(is_irreducible_rabin));
        deg += 1;
        norm *= p as u128;
    }
    out
}

/// `prod_{e' | e} (T^(p^e') - T)^mu(e/e')`, the product of all monic
/// irreducibles of degree `e`.
pub fn mobius_pi(p: u64, e: u32) -> FpPoly {
    let t = FpPoly::t(p);
    let mut num = FpPoly::one(p);
    let mut den = FpPoly::one(p);
    for d in divisors(e as u64) {
        let f = &FpPoly::monomial(p, (p as usize).pow(d as u32)) - &t;
        match mobius(e as u64 / d) {
            1 => num = &num * &f,
            -1 => den = &den * &f,
            _ => {}
        }
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Möbius product is not a polynomial");
    q
}

fn irreducible(p: &PrimeDesc) -> &FpPoly {
    match &p.data {
        PrimeData::Irreducible(g) => g,
        _ => panic!("expected an irreducible polynomial, got {p}"),
    }
}

fn poly_valuation(x: &FpPoly, g: &FpPoly) -> i64 {
    assert!(!x.is_zero(), "valuation of zero");
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(g);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// Factorization into monic irreducibles by trial division, degree by degree.
pub(crate) fn factor_poly(c: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = c.modulus();
    let mut rest = c.monic();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        for g in monic_of_degree(p, d) {
            let mut e = 0;
            loop {
                let (q, r) = rest.div_rem(&g);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            if e > 0 {
                out.push((g, e));
            }
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push((rest, 1));
    }
    out.sort();
    out
}

/// `g(a) mod m` for `g` with polynomial coefficients.
fn eval_mod(g: &[FpPoly], a: &FpPoly, m: &FpPoly) -> FpPoly {
    g.iter().rev().fold(FpPoly::zero(m.modulus()), |acc, c| (&(&acc * a) + c).rem(m))
}

impl Domain for FpPolyRing {
    type Elem = RatFunc;

    fn spec(&self) -> DomainSpec {
        DomainSpec::FiniteFieldPolyRing(self.p)
    }

    fn ctx(&self) -> u64 {
        self.p
    }

    fn contains(&self, x: &RatFunc) -> bool {
        x.is_polynomial()
    }

    fn valuation(&self, p: &PrimeDesc, x: &RatFunc) -> i64 {
        let g = irreducible(p);
        poly_valuation(x.numer(), g) - poly_valuation(x.denom(), g)
    }

    fn ideal_generator(&self, ideal: &FactoredIdeal) -> Option<RatFunc> {
        let mut num = FpPoly::one(self.p);
        let mut den = FpPoly::one(self.p);
        for (prime, e) in ideal.factors() {
            let g = irreducible(prime).pow(e.abs().to_u64().expect("exponent fits u64"));
            if e.is_negative() {
                den = &den * &g;
            } else {
                num = &num * &g;
            }
        }
        Some(RatFunc::new(num, den))
    }

    fn pi_generator(&self, q: u64) -> Result<RatFunc> {
        let direct = self.ideal_generator(&self.spec().pi_ideal(q)).unwrap();
        match prime_power(q) {
            Some((r, e)) if r == self.p => {
                let m = RatFunc::from_poly(mobius_pi(self.p, e));
                if m != direct {
                    return Err(Error::Internal(format!(
                        "Möbius product {m} differs from the product of degree-{e} irreducibles {direct}"
                    )));
                }
                Ok(m)
            }
            _ => Ok(direct),
        }
    }

    fn bezout(&self, elems: &[RatFunc]) -> Option<Vec<RatFunc>> {
        assert!(elems.iter().all(RatFunc::is_polynomial), "bezout inputs must lie in F_p[T]");
        let p = self.p;
        let mut g = FpPoly::zero(p);
        let mut coeffs: Vec<FpPoly> = Vec::with_capacity(elems.len());
        for e in elems {
            let (ng, s, t) = g.xgcd(e.numer());
            for c in coeffs.iter_mut() {
                *c = &*c * &s;
            }
            coeffs.push(t);
            g = ng;
        }
        g.is_one().then(|| coeffs.into_iter().map(RatFunc::from_poly).collect())
    }

    fn is_member(&self, f: &Poly<RatFunc>) -> Result<Membership<RatFunc>> {
        self.check_field(f)?;
        let p = self.p;
        let c = common_denominator(f);
        if c.is_one() {
            return Ok(Membership::yes("polynomial-coefficients"));
        }
        let g: Vec<FpPoly> =
            f.coeffs().iter().map(|x| (RatFunc::from_poly(c.clone()) * x.clone()).numer().clone()).collect();
        let deg = f.degree().unwrap_or(0);
        let mut method = "exhaustive-residues";
        for (h, e) in factor_poly(&c) {
            let m = h.pow(e as u64);
            let mdeg = m.degree().unwrap();
            let count = (p as u128).checked_pow(mdeg as u32);
            let witness = if count.is_some_and(|n| n <= EXHAUSTIVE_BUDGET as u128) {
                (0..count.unwrap()).map(|i| FpPoly::from_index(p, i)).find(|a| !eval_mod(&g, a, &m).is_zero())
            } else {
                method = "well-distributed-sequence";
                let hdeg = h.degree().unwrap();
                let reps: Vec<RatFunc> =
                    (0..(p as u128).pow(hdeg as u32)).map(|i| RatFunc::from_poly(FpPoly::from_index(p, i))).collect();
                let pi = RatFunc::from_poly(h.clone());
                (0..=deg)
                    .map(|k| well_distributed(&reps, &pi, k).numer().clone())
                    .find(|a| !eval_mod(&g, a, &m).is_zero())
            };
            if let Some(a) = witness {
                let a = RatFunc::from_poly(a);
                let v = f.eval(&a)?;
                return Ok(Membership::no(a, v, method));
            }
        }
        Ok(Membership::yes(method))
    }
}

impl FpPolyRing {
    /// Membership by exhaustive enumeration of every residue modulo the
    /// whole cleared denominator; only for small instances.
    pub fn is_member_exhaustive(&self, f: &Poly<RatFunc>) -> Option<bool> {
        let p = self.p;
        let c = common_denominator(f);
        let count = (p as u128).checked_pow(c.degree()? as u32)?;
        if count > EXHAUSTIVE_BUDGET as u128 {
            return None;
        }
        let g: Vec<FpPoly> =
            f.coeffs().iter().map(|x| (RatFunc::from_poly(c.clone()) * x.clone()).numer().clone()).collect();
        Some((0..count).all(|i| eval_mod(&g, &FpPoly::from_index(p, i), &c).is_zero()))
    }
}

fn common_denominator(f: &Poly<RatFunc>) -> FpPoly {
    let mut c = FpPoly::one(*f.ctx());
    for x in f.coeffs() {
        c = &c * &x.denom().div_rem(&c.gcd(x.denom())).0;
    }
    c
}
