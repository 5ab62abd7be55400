//! Splitting of rational primes in an imaginary quadratic field, with the
//! factorization shape checked through ideal arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::arith::int::{field_discriminant, is_squarefree, kronecker, primes_up_to};
use crate::error::{Error, Result};
use crate::quad_ideal::{ideal_mul, primes_above, QuadIdeal, Splitting};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSplitting {
    pub p: u64,
    pub kronecker: i32,
    pub splitting: Splitting,
    /// Roots of the minimal polynomial of `omega` over `F_p`, by enumeration.
    pub root_count: usize,
    pub ideals: Vec<QuadIdeal>,
    /// Size of each residue field `O_K / P`, by counting residues.
    pub residue_sizes: Vec<u64>,
    /// `pO_K` is a product of distinct primes with residue field `F_p`.
    pub prime_fields: bool,
    /// Symbol, root count and ideal factorization all agree.
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub d: BigInt,
    pub disc: BigInt,
    pub bound: u64,
    pub primes: Vec<PrimeSplitting>,
    /// The split primes up to the bound: the primes outside `S`.
    pub split: Vec<u64>,
    pub consistent: bool,
}

/// Number of `x` in `F_p` with `x^2 - delta x - (disc - delta)/4 = 0`,
/// `delta = disc mod 2`.
fn omega_roots(disc: &BigInt, p: u64) -> usize {
    let delta: BigInt = disc.mod_floor(&BigInt::from(2));
    let c: BigInt = (disc - &delta) / 4;
    let pb = BigInt::from(p);
    let dl = delta.to_i64().unwrap();
    let c = c.mod_floor(&pb).to_u64().unwrap() as u128;
    let p128 = p as u128;
    (0..p as u128).filter(|&x| (x * x + (p128 - dl as u128) * x % p128 + (p128 - c)).is_multiple_of(p128)).count()
}

fn analyse(disc: &BigInt, p: u64) -> PrimeSplitting {
    let symbol = kronecker(disc, p);
    let splitting = Splitting::of(disc, p);
    let root_count = omega_roots(disc, p);
    let above = primes_above(p, disc);
    let ideals: Vec<QuadIdeal> = above.iter().map(|(i, _)| i.clone()).collect();
    let residue_sizes: Vec<u64> = ideals.iter().map(|i| i.residues().count() as u64).collect();
    let pb = BigInt::from(p);
    let rational = QuadIdeal::rational(&pb, disc);
    let product = ideals.iter().fold(QuadIdeal::unit(disc), |acc, i| ideal_mul(&acc, i).unwrap());
    let norms_ok = above.iter().zip(&residue_sizes).all(|((_, n), &r)| *n == BigInt::from(r));
    let shape_ok = match splitting {
        Splitting::Split => ideals.len() == 2 && ideals[0] != ideals[1] && product == rational,
        Splitting::Ramified => ideals.len() == 1 && ideal_mul(&ideals[0], &ideals[0]).unwrap() == rational,
        Splitting::Inert => ideals.len() == 1 && ideals[0] == rational,
    };
    let expected_roots = match symbol {
        1 => 2,
        0 => 1,
        _ => 0,
    };
    let prime_fields = splitting == Splitting::Split && residue_sizes.iter().all(|&r| r == p);
    let fields_match = prime_fields == (root_count == 2);
    PrimeSplitting {
        p,
        kronecker: symbol,
        splitting,
        root_count,
        ideals,
        residue_sizes,
        prime_fields,
        consistent: shape_ok && norms_ok && root_count == expected_roots && fields_match,
    }
}

/// Splitting types of all primes `p <= bound` in `Q(sqrt d)`.
pub fn numthm_split_analysis(d: &BigInt, bound: u64) -> Result<SplitReport> {
    if !d.is_negative() || !is_squarefree(d) {
        return Err(Error::InvalidArgument(format!("d = {d} must be negative and squarefree")));
    }
    if bound < 2 {
        return Err(Error::InvalidArgument(format!("bound {bound} must be at least 2")));
    }
    let disc = field_discriminant(d);
    let primes: Vec<PrimeSplitting> = primes_up_to(bound).into_iter().map(|p| analyse(&disc, p)).collect();
    let split = primes.iter().filter(|s| s.prime_fields).map(|s| s.p).collect();
    let consistent = primes.iter().all(|s| s.consistent);
    Ok(SplitReport { d: d.clone(), disc, bound, primes, split, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian() {
        let r = numthm_split_analysis(&BigInt::from(-1), 20).unwrap();
        assert!(r.consistent);
        assert_eq!(r.split, vec![5, 13, 17]);
        let three = r.primes.iter().find(|s| s.p == 3).unwrap();
        assert_eq!(three.splitting, Splitting::Inert);
        assert_eq!(three.residue_sizes, vec![9]);
        let two = &r.primes[0];
        assert_eq!(two.splitting, Splitting::Ramified);
        assert_eq!(two.root_count, 1);
    }

    #[test]
    fn minus_five() {
        let r = numthm_split_analysis(&BigInt::from(-5), 10).unwrap();
        assert!(r.consistent);
        assert_eq!(r.split, vec![3, 7]);
        assert!(numthm_split_analysis(&BigInt::from(-4), 10).is_err());
        assert!(numthm_split_analysis(&BigInt::from(-5), 1).is_err());
    }

    #[test]
    fn omega_polynomial() {
        // disc -3: x^2 - x + 1 has the roots 3, 5 mod 7 and 2 mod 3
        assert_eq!(omega_roots(&BigInt::from(-3), 7), 2);
        assert_eq!(omega_roots(&BigInt::from(-3), 3), 1);
        assert_eq!(omega_roots(&BigInt::from(-3), 5), 0);
    }
}
