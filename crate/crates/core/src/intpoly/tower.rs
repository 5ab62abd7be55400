//! Iterated Fermat polynomials `F_q^{∘k}` with `F_q = (X^q - X)/pi_q`.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::w::{digits, w_u64};
use crate::arith::poly::Poly;
use crate::arith::Field;
use crate::domain::{Domain, DomainSpec};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub k: usize,
    /// Degree of `(F_q^{∘k})^q`.
    pub degree: BigInt,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct FermatTower<F: Field> {
    pub domain: DomainSpec,
    pub q: u64,
    pub pi: F,
    /// `levels[k] = F_q^{∘k}`.
    pub levels: Vec<Poly<F>>,
    /// One entry per `k` with both level `k` and `k + 1` present.
    pub relations: Vec<RelationCheck>,
}

/// `F_q` itself.
pub fn fermat_poly<F: Field>(q: u64, pi: &F) -> Poly<F> {
    let ctx = pi.context();
    let inv = pi.inv().expect("pi_q is nonzero");
    let mut coeffs = vec![F::zero_in(&ctx); q as usize + 1];
    coeffs[1] = -inv.clone();
    coeffs[q as usize] = inv;
    Poly::new(ctx, coeffs).unwrap()
}

impl<F: Field> FermatTower<F> {
    /// Levels `0..=top`, each obtained by composing `F_q` onto the previous
    /// one; every relation `L_k^q - L_k - pi L_{k+1} = 0` is then evaluated
    /// separately through powering.
    pub fn build<D: Domain<Elem = F>>(d: &D, q: u64, top: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidArgument(format!("Fermat polynomial needs q >= 2, got {q}")));
        }
        let pi = d.pi_generator(q)?;
        let f = fermat_poly(q, &pi);
        let mut levels = vec![Poly::x(&d.ctx())];
        for k in 0..top {
            let next = f.compose(&levels[k])?;
            levels.push(next);
        }
        for (k, level) in levels.iter().enumerate() {
            let expected = (q as usize).checked_pow(k as u32);
            if level.degree() != expected {
                return Err(Error::Internal(format!("level {k} of F_{q} has degree {:?}", level.degree())));
            }
        }
        let relations = (0..top)
            .into_par_iter()
            .map(|k| {
                let lhs = levels[k]
                    .pow(q)
                    .checked_sub(&levels[k])
                    .and_then(|x| x.checked_sub(&levels[k + 1].scale(&pi)?))
                    .expect("same field");
                RelationCheck { k, degree: BigInt::from(q).pow(k as u32 + 1), holds: lhs.is_zero() }
            })
            .collect();
        Ok(FermatTower { domain: d.spec(), q, pi, levels, relations })
    }

    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }

    /// `F_{q,n} = prod_i (F_q^{∘i})^{n_i}` over the base-`q` digits `n_i` of `n`.
    pub fn f_n(&self, n: u64) -> Poly<F> {
        let ctx = self.pi.context();
        let mut acc = Poly::one(&ctx);
        for (i, &e) in digits(self.q, n).iter().enumerate() {
            if e > 0 {
                acc = acc.checked_mul(&self.levels[i].pow(e)).unwrap();
            }
        }
        acc
    }
}

/// Tower through level `depth + 1`, so that relations `k = 0..=depth` are checked.
/// Errors if any relation fails.
pub fn fermat_tower<D: Domain>(d: &D, q: u64, depth: usize) -> Result<FermatTower<D::Elem>> {
    let t = FermatTower::build(d, q, depth + 1)?;
    if let Some(bad) = t.relations.iter().find(|r| !r.holds) {
        return Err(Error::Internal(format!("relation k = {} fails for q = {q}", bad.k)));
    }
    Ok(t)
}

/// Number of base-`k` digits of `n` minus one (0 for `n < k`).
pub(crate) fn top_level(k: u64, n: u64) -> usize {
    digits(k, n).len().saturating_sub(1)
}

/// `F_{k,n}`; degree `n` and leading coefficient `pi_k^{-w_k(n)}` are checked.
pub fn f_kn<D: Domain>(d: &D, k: u64, n: u64) -> Result<Poly<D::Elem>> {
    let tower = FermatTower::build(d, k, top_level(k, n))?;
    f_kn_from(&tower, n)
}

pub(crate) fn f_kn_from<F: Field>(tower: &FermatTower<F>, n: u64) -> Result<Poly<F>> {
    let f = tower.f_n(n);
    let lead = tower.pi.inv().unwrap().pow(w_u64(tower.q, n));
    if f.degree() != Some(n as usize) || f.lead() != Some(&lead) {
        return Err(Error::Internal(format!(
            "F_{{{},{n}}} has degree {:?} and leading coefficient {:?}, expected {n} and {lead}",
            tower.q,
            f.degree(),
            f.lead().map(|c| c.to_string())
        )));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{FpPolyRing, Integers};
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn tower_over_z() {
        let t = fermat_tower(&Integers, 2, 1).unwrap();
        assert_eq!(t.levels[1], Poly::new((), vec![q(0, 1), q(-1, 2), q(1, 2)]).unwrap());
        // (F^2 - F)/2 with F = (X^2 - X)/2
        let f = &t.levels[1];
        let expect = f.pow(2).checked_sub(f).unwrap().div_scalar(&q(2, 1)).unwrap();
        assert_eq!(t.levels[2], expect);
        assert_eq!(t.relations.len(), 2);
        let t4 = fermat_tower(&Integers, 4, 0).unwrap();
        assert_eq!(
            t4.levels[1].to_string(),
            Poly::new((), vec![q(0, 1), q(-1, 1), q(0, 1), q(0, 1), q(1, 1)]).unwrap().to_string()
        );
    }

    #[test]
    fn tower_over_f2t() {
        let t = fermat_tower(&FpPolyRing::new(2), 2, 0).unwrap();
        assert_eq!(t.pi.to_string(), "T^2+T");
        assert_eq!(
            t.levels[1],
            Poly::<crate::arith::ratfunc::RatFunc>::parse(&2, "0,(1)/(T^2+T),(1)/(T^2+T)").unwrap()
        );
    }

    #[test]
    fn f_kn_examples() {
        let f = f_kn(&Integers, 2, 3).unwrap();
        let t = fermat_tower(&Integers, 2, 0).unwrap();
        assert_eq!(f, Poly::x(&()).checked_mul(&t.levels[1]).unwrap());
        assert_eq!(f.lead(), Some(&q(1, 2)));
        assert_eq!(f_kn(&Integers, 2, 1).unwrap(), Poly::x(&()));
        assert_eq!(f_kn(&Integers, 3, 9).unwrap().lead(), Some(&q(1, 81)));
        assert_eq!(f_kn(&Integers, 3, 10).unwrap().lead(), Some(&q(1, 81)));
    }
}
