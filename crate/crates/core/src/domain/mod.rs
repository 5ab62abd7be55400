//! The ground domains `D`: `Z`, `Z_(p)`, `F_p[T]` and the maximal order of an
//! imaginary quadratic field. Each knows its primes of bounded norm, the
//! ideals `Pi_q`, their generators, and how to solve Bézout identities.

mod fpt;
mod integers;
mod quadratic;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::fp_poly::FpPoly;
use crate::arith::int::{is_prime, primes_up_to};
use crate::arith::poly::{ParseCoeff, Poly};
use crate::arith::quad::check_radicand;
use crate::arith::Field;
use crate::error::{Error, Result};
use crate::quad_ideal::QuadIdeal;

pub use fpt::{mobius_pi, FpPolyRing};
pub use integers::{Integers, LocalizedIntegers};
pub use quadratic::QuadOrder;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum DomainSpec {
    Integers,
    LocalizedIntegers(u64),
    FiniteFieldPolyRing(u64),
    ImagQuadraticOrder(BigInt),
}

/// Largest prime accepted for `Z_(p)` and `F_p[T]`.
pub const MAX_PRIME: u64 = 1 << 31;

impl DomainSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            DomainSpec::Integers => Ok(()),
            DomainSpec::LocalizedIntegers(p) | DomainSpec::FiniteFieldPolyRing(p) => {
                if !is_prime(*p) || *p >= MAX_PRIME {
                    Err(Error::InvalidDomain(format!("{p} is not a prime below 2^31")))
                } else {
                    Ok(())
                }
            }
            DomainSpec::ImagQuadraticOrder(d) => check_radicand(d),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            DomainSpec::Integers => "Integers",
            DomainSpec::LocalizedIntegers(_) => "LocalizedIntegers",
            DomainSpec::FiniteFieldPolyRing(_) => "FiniteFieldPolyRing",
            DomainSpec::ImagQuadraticOrder(_) => "ImagQuadraticOrder",
        }
    }

    /// Every prime of norm at most `bound`, ordered by norm.
    pub fn primes_of_norm_at_most(&self, bound: u64) -> Vec<PrimeDesc> {
        let mut out = match self {
            DomainSpec::Integers => primes_up_to(bound).into_iter().map(|p| PrimeDesc::rational(self, p)).collect(),
            DomainSpec::LocalizedIntegers(p) => {
                if *p <= bound {
                    vec![PrimeDesc::rational(self, *p)]
                } else {
                    Vec::new()
                }
            }
            DomainSpec::FiniteFieldPolyRing(p) => fpt::irreducibles_of_norm_at_most(*p, bound)
                .into_iter()
                .map(|g| PrimeDesc::irreducible(self, g))
                .collect(),
            DomainSpec::ImagQuadraticOrder(d) => quadratic::primes_of_norm_at_most(d, bound)
                .into_iter()
                .map(|(i, n)| PrimeDesc::quad(self, i, n))
                .collect(),
        };
        out.sort();
        out
    }

    /// `Pi_q`: the product of all primes of norm exactly `q`.
    pub fn pi_ideal(&self, q: u64) -> FactoredIdeal {
        let mut out = FactoredIdeal::unit(self);
        if q < 2 || crate::arith::int::prime_power(q).is_none() {
            return out;
        }
        let qb = BigInt::from(q);
        for p in self.primes_of_norm_at_most(q) {
            if p.norm == qb {
                out = out.mul(&FactoredIdeal::prime(p));
            }
        }
        out
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainSpec::Integers => write!(f, "Z"),
            DomainSpec::LocalizedIntegers(p) => write!(f, "Zloc:{p}"),
            DomainSpec::FiniteFieldPolyRing(p) => write!(f, "FpT:{p}"),
            DomainSpec::ImagQuadraticOrder(d) => write!(f, "Quad:{d}"),
        }
    }
}

impl FromStr for DomainSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDomain(format!("unrecognized domain {s:?}; expected Z, Zloc:p, FpT:p or Quad:d"));
        let spec = match s.trim().split_once(':') {
            None if s.trim() == "Z" => DomainSpec::Integers,
            Some(("Zloc", p)) => DomainSpec::LocalizedIntegers(p.trim().parse().map_err(|_| bad())?),
            Some(("FpT", p)) => DomainSpec::FiniteFieldPolyRing(p.trim().parse().map_err(|_| bad())?),
            Some(("Quad", d)) => DomainSpec::ImagQuadraticOrder(d.trim().parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum PrimeData {
    Rational(u64),
    Irreducible(FpPoly),
    Quad(QuadIdeal),
}

/// A nonzero prime of `D` with its (finite) norm `|D/p|`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PrimeDesc {
    pub domain: DomainSpec,
    pub data: PrimeData,
    pub norm: BigInt,
}

impl PrimeDesc {
    fn rational(domain: &DomainSpec, p: u64) -> Self {
        PrimeDesc { domain: domain.clone(), data: PrimeData::Rational(p), norm: BigInt::from(p) }
    }

    fn irreducible(domain: &DomainSpec, g: FpPoly) -> Self {
        let norm = BigInt::from(g.modulus()).pow(g.degree().unwrap() as u32);
        PrimeDesc { domain: domain.clone(), data: PrimeData::Irreducible(g), norm }
    }

    fn quad(domain: &DomainSpec, i: QuadIdeal, norm: BigInt) -> Self {
        PrimeDesc { domain: domain.clone(), data: PrimeData::Quad(i), norm }
    }

    pub fn norm_u64(&self) -> u64 {
        self.norm.to_u64().expect("norms fit in u64")
    }

    /// The rational prime below.
    pub fn characteristic(&self) -> u64 {
        match &self.data {
            PrimeData::Rational(p) => *p,
            PrimeData::Irreducible(g) => g.modulus(),
            PrimeData::Quad(i) => crate::arith::int::factor(i.norm().to_u64().unwrap())[0].0,
        }
    }
}

impl Ord for PrimeDesc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm.cmp(&other.norm).then_with(|| self.data.cmp(&other.data))
    }
}

impl PartialOrd for PrimeDesc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimeDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.data {
            PrimeData::Rational(p) => write!(f, "({p})"),
            PrimeData::Irreducible(g) => write!(f, "({g})"),
            PrimeData::Quad(i) => write!(f, "{i}"),
        }
    }
}

/// A fractional ideal as a finite product of primes with nonzero exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredIdeal {
    pub domain: DomainSpec,
    factors: BTreeMap<PrimeDesc, BigInt>,
}

impl FactoredIdeal {
    pub fn unit(domain: &DomainSpec) -> Self {
        FactoredIdeal { domain: domain.clone(), factors: BTreeMap::new() }
    }

    pub fn prime(p: PrimeDesc) -> Self {
        Self::prime_pow(p, BigInt::one())
    }

    pub fn prime_pow(p: PrimeDesc, e: BigInt) -> Self {
        let mut out = Self::unit(&p.domain);
        if !e.is_zero() {
            out.factors.insert(p, e);
        }
        out
    }

    pub fn factors(&self) -> impl Iterator<Item = (&PrimeDesc, &BigInt)> {
        self.factors.iter()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.factors.values().all(|e| e.is_positive())
    }

    pub fn exponent_of(&self, p: &PrimeDesc) -> BigInt {
        self.factors.get(p).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.domain, other.domain, "ideals of different domains");
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            let entry = factors.entry(p.clone()).or_default();
            *entry += e;
            if entry.is_zero() {
                factors.remove(p);
            }
        }
        FactoredIdeal { domain: self.domain.clone(), factors }
    }

    pub fn pow(&self, e: &BigInt) -> Self {
        if e.is_zero() {
            return Self::unit(&self.domain);
        }
        FactoredIdeal {
            domain: self.domain.clone(),
            factors: self.factors.iter().map(|(p, x)| (p.clone(), x * e)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        self.pow(&-BigInt::one())
    }

    /// Norm as an exact rational `num/den`.
    pub fn norm(&self) -> num_rational::BigRational {
        let mut acc = num_rational::BigRational::one();
        for (p, e) in &self.factors {
            let base = num_rational::BigRational::from_integer(p.norm.clone());
            let k = e.abs().to_i32().expect("exponent fits i32");
            let t = num_traits::pow::Pow::pow(&base, k as u32);
            acc = if e.is_negative() { acc / t } else { acc * t };
        }
        acc
    }
}

impl fmt::Display for FactoredIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "(1)");
        }
        let parts: Vec<String> =
            self.factors.iter().map(|(p, e)| if e.is_one() { p.to_string() } else { format!("{p}^{e}") }).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Result of an `Int(D)` membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership<E> {
    pub member: bool,
    /// A point `a` of `D` with `f(a)` outside `D`, when not a member.
    pub witness: Option<E>,
    pub value: Option<E>,
    /// How the verdict was reached.
    pub method: &'static str,
}

impl<E> Membership<E> {
    pub fn yes(method: &'static str) -> Self {
        Membership { member: true, witness: None, value: None, method }
    }
    pub fn no(witness: E, value: E, method: &'static str) -> Self {
        Membership { member: false, witness: Some(witness), value: Some(value), method }
    }
}

/// Operations every supported ground domain provides.
pub trait Domain: Send + Sync {
    type Elem: Field + ParseCoeff;

    fn spec(&self) -> DomainSpec;

    /// Context of the fraction field.
    fn ctx(&self) -> <Self::Elem as Field>::Ctx;

    /// Membership of a fraction-field element in `D`.
    fn contains(&self, x: &Self::Elem) -> bool;

    /// `v_p(x)` for nonzero `x`.
    fn valuation(&self, p: &PrimeDesc, x: &Self::Elem) -> i64;

    /// A generator of the fractional ideal, if principal.
    fn ideal_generator(&self, ideal: &FactoredIdeal) -> Option<Self::Elem>;

    /// A generator `pi_q` of `Pi_q`; `NotPrincipal` when none exists.
    fn pi_generator(&self, q: u64) -> Result<Self::Elem> {
        let ideal = self.spec().pi_ideal(q);
        self.ideal_generator(&ideal).ok_or_else(|| Error::NotPrincipal { q, class: self.class_label(&ideal) })
    }

    /// Description of the ideal class, for diagnostics.
    fn class_label(&self, ideal: &FactoredIdeal) -> String {
        ideal.to_string()
    }

    /// `a_i` in `D` with `sum a_i e_i = 1`, for `e_i` in `D`; `None` when the
    /// `e_i` generate a proper ideal.
    fn bezout(&self, elems: &[Self::Elem]) -> Option<Vec<Self::Elem>>;

    /// Whether `f(D)` lies in `D`.
    fn is_member(&self, f: &Poly<Self::Elem>) -> Result<Membership<Self::Elem>>;

    fn zero(&self) -> Self::Elem {
        Self::Elem::zero_in(&self.ctx())
    }

    fn one(&self) -> Self::Elem {
        Self::Elem::one_in(&self.ctx())
    }

    /// The factored principal ideal `(x)`, restricted to primes of norm at most `bound`.
    fn principal_ideal(&self, x: &Self::Elem, bound: u64) -> FactoredIdeal {
        let spec = self.spec();
        let mut out = FactoredIdeal::unit(&spec);
        for p in spec.primes_of_norm_at_most(bound) {
            let v = self.valuation(&p, x);
            out = out.mul(&FactoredIdeal::prime_pow(p, BigInt::from(v)));
        }
        out
    }

    fn check_field(&self, f: &Poly<Self::Elem>) -> Result<()> {
        if f.ctx() != &self.ctx() {
            return Err(Error::FieldMismatch(format!(
                "{} is not the fraction field of {}",
                f.field_name(),
                self.spec()
            )));
        }
        Ok(())
    }
}

/// Runs `$body` with `$d` bound to the concrete domain for `$spec`.
#[macro_export]
macro_rules! with_domain {
    ($spec:expr, $d:ident => $body:expr) => {
        match $spec {
            $crate::domain::DomainSpec::Integers => {
                let $d = $crate::domain::Integers;
                $body
            }
            $crate::domain::DomainSpec::LocalizedIntegers(p) => {
                let $d = $crate::domain::LocalizedIntegers::new(*p);
                $body
            }
            $crate::domain::DomainSpec::FiniteFieldPolyRing(p) => {
                let $d = $crate::domain::FpPolyRing::new(*p);
                $body
            }
            $crate::domain::DomainSpec::ImagQuadraticOrder(d) => {
                let $d = $crate::domain::QuadOrder::new(d.clone());
                $body
            }
        }
    };
}

/// Residue budget per prime-power component for exhaustive membership checks.
pub const EXHAUSTIVE_BUDGET: u64 = 1 << 16;

/// `u_m = sum_i r[m_i] pi^i` where `m_i` are the base-`|r|` digits of `m`: a
/// well-distributed sequence for the prime `(pi)` when `r` is a residue system.
pub(crate) fn well_distributed<E: Field>(reps: &[E], pi: &E, m: usize) -> E {
    let q = reps.len();
    let mut acc = E::zero_in(&pi.context());
    let mut power = E::one_in(&pi.context());
    let mut m = m;
    while m > 0 {
        acc = acc + reps[m % q].clone() * power.clone();
        power = power * pi.clone();
        m /= q;
    }
    acc
}
