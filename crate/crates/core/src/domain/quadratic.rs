use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{well_distributed, Domain, DomainSpec, FactoredIdeal, Membership, PrimeData, PrimeDesc, EXHAUSTIVE_BUDGET};
use crate::arith::int::{field_discriminant, is_prime, primes_up_to};
use crate::arith::poly::Poly;
use crate::arith::quad::QuadElem;
use crate::error::{Error, Result};
use crate::hnf::hnf;
use crate::quad_ideal::{coord_mul, ideal_mul, ideal_pow, primes_above, reduce, to_coords, QuadIdeal, Splitting};

/// The maximal order of `Q(sqrt d)`, `d < 0` squarefree.
#[derive(Clone, Debug)]
pub struct QuadOrder {
    pub d: BigInt,
    pub disc: BigInt,
}

impl QuadOrder {
    pub fn new(d: BigInt) -> Self {
        let disc = field_discriminant(&d);
        QuadOrder { d, disc }
    }

    fn coords(&self, x: &QuadElem) -> (BigInt, BigInt) {
        to_coords(x, &self.disc).expect("element of O_K")
    }

    fn elem(&self, c: &(BigInt, BigInt)) -> QuadElem {
        QuadElem::from_basis(BigRational::from_integer(c.0.clone()), BigRational::from_integer(c.1.clone()), &self.d)
    }

    /// `x = alpha / m` with `alpha` integral and `m` a positive integer.
    fn split_denominator(&self, x: &QuadElem) -> ((BigInt, BigInt), BigInt) {
        let (u, v) = x.to_basis();
        let m = u.denom().lcm(v.denom());
        let a = (u * BigRational::from_integer(m.clone())).to_integer();
        let b = (v * BigRational::from_integer(m.clone())).to_integer();
        ((a, b), m)
    }

    fn integral_valuation(&self, p: &QuadIdeal, alpha: &(BigInt, BigInt)) -> i64 {
        assert!(!(alpha.0.is_zero() && alpha.1.is_zero()), "valuation of zero");
        let mut power = p.clone();
        let mut v = 0;
        while power.contains(&alpha.0, &alpha.1) {
            v += 1;
            power = ideal_mul(&power, p).unwrap();
        }
        v
    }

    /// `J * conj(K)` and `N(K)` where the ideal is `J / K` with `J`, `K` integral.
    fn integral_parts(&self, ideal: &FactoredIdeal) -> (QuadIdeal, BigInt) {
        let mut num = QuadIdeal::unit(&self.disc);
        let mut den_norm = BigInt::one();
        for (p, e) in ideal.factors() {
            let q = quad_prime(p);
            let k = e.abs().to_u64().expect("exponent fits u64");
            if e.is_negative() {
                num = ideal_mul(&num, &ideal_pow(&q.conj(), k)).unwrap();
                den_norm *= q.norm().pow(k as u32);
            } else {
                num = ideal_mul(&num, &ideal_pow(q, k)).unwrap();
            }
        }
        (num, den_norm)
    }

    /// An element of `p` not in `p^2`.
    fn uniformizer(&self, p: &QuadIdeal) -> (BigInt, BigInt) {
        let sq = ideal_mul(p, p).unwrap();
        let [(a, ay), (b, by)] = p.basis();
        let sum = (&a + &b, &ay + &by);
        [(a, ay), (b, by), sum]
            .into_iter()
            .find(|(x, y)| !sq.contains(x, y))
            .expect("a uniformizer among the basis elements")
    }

    fn eval_coords(&self, g: &[(BigInt, BigInt)], a: &(BigInt, BigInt), m: &QuadIdeal) -> (BigInt, BigInt) {
        let mut acc = (BigInt::zero(), BigInt::zero());
        for c in g.iter().rev() {
            let t = coord_mul(&acc, a, &self.disc);
            acc = m.reduce_coords(&(t.0 + &c.0), &(t.1 + &c.1));
        }
        acc
    }
}

fn quad_prime(p: &PrimeDesc) -> &QuadIdeal {
    match &p.data {
        PrimeData::Quad(i) => i,
        _ => panic!("expected a prime ideal, got {p}"),
    }
}

pub(crate) fn primes_of_norm_at_most(d: &BigInt, bound: u64) -> Vec<(QuadIdeal, BigInt)> {
    let disc = field_discriminant(d);
    let b = BigInt::from(bound);
    primes_up_to(bound).into_iter().flat_map(|p| primes_above(p, &disc)).filter(|(_, n)| n <= &b).collect()
}

/// Rational prime factorization of a positive integer by trial division;
/// a cofactor left after `2^20` must itself be a prime below `2^40`.
fn factor_big(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    let mut n = n.clone();
    let mut out = Vec::new();
    for p in primes_up_to(1 << 20) {
        let pb = BigInt::from(p);
        if &pb * &pb > n {
            break;
        }
        let mut e = 0;
        while n.is_multiple_of(&pb) {
            n /= &pb;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    if n > BigInt::one() {
        match n.to_u64() {
            Some(r) if r < 1 << 40 && is_prime(r) => out.push((r, 1)),
            _ => {
                return Err(Error::BudgetExceeded {
                    needed: format!("factorization of denominator {n}"),
                    budget: 1 << 20,
                })
            }
        }
    }
    out.sort();
    Ok(out)
}

impl Domain for QuadOrder {
    type Elem = QuadElem;

    fn spec(&self) -> DomainSpec {
        DomainSpec::ImagQuadraticOrder(self.d.clone())
    }

    fn ctx(&self) -> BigInt {
        self.d.clone()
    }

    fn contains(&self, x: &QuadElem) -> bool {
        x.is_integral()
    }

    fn valuation(&self, p: &PrimeDesc, x: &QuadElem) -> i64 {
        let q = quad_prime(p);
        let (alpha, m) = self.split_denominator(x);
        self.integral_valuation(q, &alpha) - self.integral_valuation(q, &(m, BigInt::zero()))
    }

    fn ideal_generator(&self, ideal: &FactoredIdeal) -> Option<QuadElem> {
        let (num, den_norm) = self.integral_parts(ideal);
        let g = num.generator()?;
        let inv = QuadElem::rational(BigRational::new(BigInt::one(), den_norm), &self.d);
        Some(g * inv)
    }

    fn class_label(&self, ideal: &FactoredIdeal) -> String {
        let (num, _) = self.integral_parts(ideal);
        format!("class of {}", reduce(&num))
    }

    /// Solves `sum a_i e_i = 1` as an integer system in the basis `{1, w}`:
    /// rows are the coordinates of `e_i` and `w e_i`.
    fn bezout(&self, elems: &[QuadElem]) -> Option<Vec<QuadElem>> {
        let w = (BigInt::zero(), BigInt::one());
        let mut rows = Vec::with_capacity(2 * elems.len());
        for e in elems {
            let c = self.coords(e);
            let wc = coord_mul(&w, &c, &self.disc);
            rows.push(vec![c.0, c.1]);
            rows.push(vec![wc.0, wc.1]);
        }
        let h = hnf(&rows);
        let x = h.solve(&[BigInt::one(), BigInt::zero()])?;
        Some(x.chunks(2).map(|c| self.elem(&(c[0].clone(), c[1].clone()))).collect())
    }

    fn is_member(&self, f: &Poly<QuadElem>) -> Result<Membership<QuadElem>> {
        self.check_field(f)?;
        let mut c = BigInt::one();
        for x in f.coeffs() {
            let (u, v) = x.to_basis();
            c = c.lcm(u.denom()).lcm(v.denom());
        }
        if c.is_one() {
            return Ok(Membership::yes("integral-coefficients"));
        }
        let cq = QuadElem::rational(BigRational::from_integer(c.clone()), &self.d);
        let g: Vec<(BigInt, BigInt)> = f.coeffs().iter().map(|x| self.coords(&(x.clone() * cq.clone()))).collect();
        let deg = f.degree().unwrap_or(0);
        let mut method = "exhaustive-residues";
        for (p, vp) in factor_big(&c)? {
            for (prime, norm) in primes_above(p, &self.disc) {
                let ram = if Splitting::of(&self.disc, p) == Splitting::Ramified { 2 } else { 1 };
                let e = vp as u64 * ram;
                let m = ideal_pow(&prime, e);
                let count = m.norm();
                let witness = if count <= BigInt::from(EXHAUSTIVE_BUDGET) {
                    m.residues().find(|a| {
                        let r = self.eval_coords(&g, a, &m);
                        !(r.0.is_zero() && r.1.is_zero())
                    })
                } else {
                    method = "well-distributed-sequence";
                    let reps: Vec<QuadElem> = if norm == BigInt::from(p) {
                        (0..p).map(|x| self.elem(&(x.into(), BigInt::zero()))).collect()
                    } else {
                        (0..p)
                            .flat_map(|y| (0..p).map(move |x| (x, y)))
                            .map(|(x, y)| self.elem(&(x.into(), y.into())))
                            .collect()
                    };
                    let pi = self.elem(&self.uniformizer(&prime));
                    (0..=deg).map(|k| self.coords(&well_distributed(&reps, &pi, k))).find(|a| {
                        let r = self.eval_coords(&g, a, &m);
                        !(r.0.is_zero() && r.1.is_zero())
                    })
                };
                if let Some(a) = witness {
                    let a = self.elem(&a);
                    let v = f.eval(&a)?;
                    return Ok(Membership::no(a, v, method));
                }
            }
        }
        Ok(Membership::yes(method))
    }
}

impl QuadOrder {
    /// Membership by enumerating every residue modulo `c O_K` for the whole
    /// cleared denominator `c`; only for small instances.
    pub fn is_member_exhaustive(&self, f: &Poly<QuadElem>) -> Option<bool> {
        let mut c = BigInt::one();
        for x in f.coeffs() {
            let (u, v) = x.to_basis();
            c = c.lcm(u.denom()).lcm(v.denom());
        }
        let m = QuadIdeal::rational(&c, &self.disc);
        if m.norm() > BigInt::from(EXHAUSTIVE_BUDGET) {
            return None;
        }
        let cq = QuadElem::rational(BigRational::from_integer(c), &self.d);
        let g: Vec<(BigInt, BigInt)> = f.coeffs().iter().map(|x| self.coords(&(x.clone() * cq.clone()))).collect();
        Some(m.residues().all(|a| {
            let r = self.eval_coords(&g, &a, &m);
            r.0.is_zero() && r.1.is_zero()
        }))
    }
}
