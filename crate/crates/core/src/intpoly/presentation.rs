//! Bounded-degree certificates for the presentations of `Int(D)` by the
//! generators `X_k -> F_q^{∘k}` and relations `X_k^q - X_k - pi X_{k+1}`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::tower::{FermatTower, RelationCheck};
use super::w::{digits, w_u64};
use crate::arith::Field;
use crate::domain::{Domain, DomainSpec, LocalizedIntegers};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCheck {
    pub n: u64,
    /// Exponents `n_k < q` of the normal-form monomial `prod X_k^{n_k}`.
    pub exponents: Vec<u64>,
    pub degree: u64,
    pub lead_matches: bool,
}

#[derive(Clone, Debug)]
pub struct PresentationReport {
    pub domain: DomainSpec,
    pub q: u64,
    pub maxdeg: u64,
    pub relations: Vec<RelationCheck>,
    pub monomials: Vec<MonomialCheck>,
    pub distinct_degrees: bool,
    pub pass: bool,
}

/// Certificate through `maxdeg` for the generators attached to `q`:
/// relations with `q^{k+1} <= maxdeg` vanish, and the images of the
/// normal-form monomials have pairwise distinct degrees and leading
/// coefficients `pi^{-w_q(n)}`.
pub fn verify_presentation<D: Domain>(d: &D, q: u64, maxdeg: u64) -> Result<PresentationReport> {
    if maxdeg < 1 {
        return Err(Error::InvalidArgument("maxdeg must be at least 1".into()));
    }
    let top = digits(q, maxdeg).len() - 1;
    let tower = FermatTower::build(d, q, top)?;
    let inv = tower.pi.inv().unwrap();
    let monomials: Vec<MonomialCheck> = (0..=maxdeg)
        .into_par_iter()
        .map(|n| {
            let image = tower.f_n(n);
            let degree = image.degree().map_or(0, |x| x as u64);
            let lead_matches = image.lead() == Some(&inv.pow(w_u64(q, n)));
            MonomialCheck { n, exponents: digits(q, n), degree, lead_matches }
        })
        .collect();
    let degrees: BTreeSet<u64> = monomials.iter().map(|m| m.degree).collect();
    let distinct_degrees = degrees.len() == monomials.len();
    let pass = distinct_degrees && tower.all_hold() && monomials.iter().all(|m| m.lead_matches && m.degree == m.n);
    Ok(PresentationReport {
        domain: d.spec(),
        q,
        maxdeg,
        relations: tower.relations,
        monomials,
        distinct_degrees,
        pass,
    })
}

/// The certificate for `Z_(p)`, where `q = p` and `pi = p`.
pub fn verify_local_presentation(p: u64, maxdeg: u64) -> Result<PresentationReport> {
    DomainSpec::LocalizedIntegers(p).validate()?;
    verify_presentation(&LocalizedIntegers::new(p), p, maxdeg)
}

#[derive(Clone, Debug)]
pub struct GlobalRelationsReport {
    pub domain: DomainSpec,
    pub depth: usize,
    /// Per `q`, in the order given.
    pub towers: Vec<(u64, BigInt, Vec<RelationCheck>)>,
    pub pass: bool,
}

/// Exact check of `(F_q^{∘k})^q - F_q^{∘k} - pi_q F_q^{∘(k+1)} = 0` for each
/// `q` and `k <= depth`. Towers are built in parallel; output keeps `qs` order.
pub fn verify_global_relations<D: Domain>(d: &D, qs: &[u64], depth: usize) -> Result<GlobalRelationsReport> {
    let towers: Vec<(u64, BigInt, Vec<RelationCheck>)> = qs
        .par_iter()
        .map(|&q| {
            let t = FermatTower::build(d, q, depth + 1)?;
            let top_degree = BigInt::from(q).pow(depth as u32 + 1);
            Ok((q, top_degree, t.relations))
        })
        .collect::<Result<_>>()?;
    let pass = towers.iter().all(|(_, _, r)| r.iter().all(|c| c.holds));
    Ok(GlobalRelationsReport { domain: d.spec(), depth, towers, pass })
}
