//! Regular bases of `Int(D)` assembled from Fermat towers, and expansion of
//! integer-valued polynomials in them.

use std::collections::BTreeMap;

use super::tower::{f_kn_from, top_level, FermatTower};
use super::w::w_u64;
use crate::arith::int::is_prime_power;
use crate::arith::poly::Poly;
use crate::arith::Field;
use crate::domain::{Domain, DomainSpec};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct RegularBasis<F: Field> {
    pub domain: DomainSpec,
    /// `polys[n] = G_n`.
    pub polys: Vec<Poly<F>>,
    /// `sigmas[n]`, the leading coefficient of `G_n`.
    pub sigmas: Vec<F>,
    /// `bezout[n]`: the pairs `(k, a_{k,n})` with `G_n = sum a_{k,n} F_{k,n}`.
    pub bezout: Vec<Vec<(u64, F)>>,
}

/// `sigma_n = prod_{1 < k <= n} pi_k^{-w_k(n)}` over prime powers `k`.
pub fn sigma<D: Domain>(d: &D, n: u64) -> Result<D::Elem> {
    let mut acc = d.one();
    for k in (2..=n).filter(|&k| is_prime_power(k)) {
        let pi = d.pi_generator(k)?;
        acc = acc * pi.inv().unwrap().pow(w_u64(k, n));
    }
    Ok(acc)
}

pub fn regular_basis<D: Domain>(d: &D, upto: u64) -> Result<RegularBasis<D::Elem>> {
    let ks: Vec<u64> = (2..=upto).filter(|&k| is_prime_power(k)).collect();
    // Every Pi_q must be principal; the first failure names its class.
    let mut pis = BTreeMap::new();
    for &k in &ks {
        pis.insert(k, d.pi_generator(k)?);
    }
    let towers: BTreeMap<u64, FermatTower<D::Elem>> =
        ks.iter().map(|&k| Ok((k, FermatTower::build(d, k, top_level(k, upto))?))).collect::<Result<_>>()?;

    let ctx = d.ctx();
    let mut basis = RegularBasis {
        domain: d.spec(),
        polys: vec![Poly::one(&ctx)],
        sigmas: vec![d.one()],
        bezout: vec![Vec::new()],
    };
    if upto >= 1 {
        basis.polys.push(Poly::x(&ctx));
        basis.sigmas.push(d.one());
        basis.bezout.push(Vec::new());
    }
    for n in 2..=upto {
        let active: Vec<u64> = ks.iter().copied().filter(|&k| k <= n).collect();
        // t_k = pi_k^{-w_k(n)}; sigma_n is their product and u_k = t_k / sigma_n lies in D.
        let t: Vec<D::Elem> = active.iter().map(|k| pis[k].inv().unwrap().pow(w_u64(*k, n))).collect();
        let sigma = t.iter().cloned().fold(d.one(), |a, b| a * b);
        let sigma_inv = sigma.inv().unwrap();
        let u: Vec<D::Elem> = t.iter().map(|x| x.clone() * sigma_inv.clone()).collect();
        debug_assert!(u.iter().all(|x| d.contains(x)));
        let a = d.bezout(&u).ok_or_else(|| {
            Error::Internal(format!(
                "no Bézout solution for n = {n} over {}: u = [{}]",
                d.spec(),
                u.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
            ))
        })?;
        let mut g = Poly::zero(&ctx);
        for (k, ak) in active.iter().zip(&a) {
            if ak.is_zero_elem() {
                continue;
            }
            let f = f_kn_from(&towers[k], n)?;
            g = g.checked_add(&f.scale(ak)?)?;
        }
        if g.degree() != Some(n as usize) || g.lead() != Some(&sigma) {
            return Err(Error::Internal(format!(
                "G_{n} has degree {:?} and leading coefficient {:?}, expected sigma_{n} = {sigma}",
                g.degree(),
                g.lead().map(|c| c.to_string())
            )));
        }
        basis.polys.push(g);
        basis.sigmas.push(sigma);
        basis.bezout.push(active.into_iter().zip(a).collect());
    }
    Ok(basis)
}

/// Outcome of expanding `f` in a regular basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion<F> {
    /// `f = sum c_n G_n` with every `c_n` in `D`.
    Coefficients(Vec<F>),
    /// Elimination produced `c_index` outside `D`, so `f` is not in `Int(D)`.
    NotIntegral { index: usize, coefficient: F },
}

/// Descending elimination `c_n = lead(remainder) / sigma_n`.
pub fn expand_in_basis<D: Domain>(
    d: &D,
    f: &Poly<D::Elem>,
    basis: &RegularBasis<D::Elem>,
) -> Result<Expansion<D::Elem>> {
    d.check_field(f)?;
    let Some(deg) = f.degree() else {
        return Ok(Expansion::Coefficients(Vec::new()));
    };
    if deg >= basis.polys.len() {
        return Err(Error::InvalidArgument(format!(
            "degree {deg} exceeds the basis, which stops at {}",
            basis.polys.len() - 1
        )));
    }
    // Back substitution: c_n = (f_n - sum_{m > n} c_m [X^n] G_m) / sigma_n.
    let ctx = f.ctx().clone();
    let one = D::Elem::one_in(&ctx);
    let mut out = vec![d.zero(); deg + 1];
    let mut negated: Vec<D::Elem> = vec![d.zero(); deg + 1];
    for n in (0..=deg).rev() {
        let lead = f.coeff(n);
        let lower: Vec<D::Elem> = (n + 1..=deg).map(|m| basis.polys[m].coeff(n)).collect();
        let mut terms = vec![(&lead, &one)];
        terms.extend(negated[n + 1..].iter().zip(&lower).filter(|(c, _)| !c.is_zero_elem()));
        let c = D::Elem::sum_of_products(&ctx, &terms) * basis.sigmas[n].inv().unwrap();
        if !d.contains(&c) {
            return Ok(Expansion::NotIntegral { index: n, coefficient: c });
        }
        negated[n] = -c.clone();
        out[n] = c;
    }
    Ok(Expansion::Coefficients(out))
}

/// `sum c_n G_n`.
pub fn combine<F: Field>(basis: &RegularBasis<F>, coeffs: &[F]) -> Result<Poly<F>> {
    let ctx = basis.sigmas[0].context();
    if coeffs.len() > basis.polys.len() {
        return Err(Error::InvalidArgument(format!(
            "{} coefficients for a basis of {} polynomials",
            coeffs.len(),
            basis.polys.len()
        )));
    }
    let zero = F::zero_in(&ctx);
    let out: Vec<F> = (0..coeffs.len())
        .map(|i| {
            let cols: Vec<F> = basis.polys[i..coeffs.len()].iter().map(|g| g.coeff(i)).collect();
            let terms: Vec<(&F, &F)> = coeffs[i..].iter().zip(&cols).filter(|(c, _)| !c.is_zero_elem()).collect();
            if terms.is_empty() {
                zero.clone()
            } else {
                F::sum_of_products(&ctx, &terms)
            }
        })
        .collect();
    Poly::new(ctx, out)
}
