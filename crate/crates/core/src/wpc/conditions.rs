//! Frobenius-type conditions for a finite `Z`-algebra at each prime.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::algebra::{rref, FiniteAlgebra, ResidueAlgebra};
use crate::error::{Error, Result};
use crate::hnf::hnf;

/// Largest `|A/pA|` enumerated.
pub const WPC_BUDGET: u64 = 1 << 20;

/// Verdicts of the congruence conditions; they equal WPC for domains such as `Z`.
pub const VERDICT_LABEL: &str = "congruence conditions (= WPC for D in class C)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// `a`, as coordinates on the generators of `A`.
    pub element: Vec<BigInt>,
    /// `a^p` reduced in `A/pA`, same coordinates.
    pub power: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeVerdict {
    pub p: u64,
    /// `|A/pA|`.
    pub residues: u64,
    /// `a^p - a in pA` for all `a`, tested in `A` against the lattice of `pA`.
    pub congruence: bool,
    /// Frobenius is the identity on `A/pA`, tested in the residue algebra.
    pub frobenius: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WpcReport {
    pub order: BigInt,
    pub primes: Vec<PrimeVerdict>,
    pub overall: bool,
    pub label: &'static str,
}

fn residue_algebra(a: &FiniteAlgebra, p: u64) -> Result<(ResidueAlgebra, u64)> {
    let r = ResidueAlgebra::new(a, p);
    match r.size().filter(|&n| n <= WPC_BUDGET) {
        Some(n) => Ok((r, n)),
        None => Err(Error::BudgetExceeded { needed: format!("{p}^{}", r.dim()), budget: WPC_BUDGET }),
    }
}

fn check_prime(a: &FiniteAlgebra, p: u64) -> Result<PrimeVerdict> {
    let (res, n) = residue_algebra(a, p)?;
    let rank = a.rank();
    // (2): the Frobenius map on A/pA
    let bad = (0..n).map(|i| res.element(i)).find(|x| res.pow(x, p) != *x);
    // (1): a^p - a against the lattice of pA inside Z^r
    let mut rows: Vec<Vec<BigInt>> = a.relations().to_vec();
    for i in 0..rank {
        let mut v = vec![BigInt::zero(); rank];
        v[i] = BigInt::from(p);
        rows.push(v);
    }
    let pa = hnf(&rows);
    let congruence = (0..n).all(|i| {
        let x = res.lift(&res.element(i), rank);
        let d: Vec<BigInt> = a.pow(&x, p).iter().zip(&x).map(|(u, v)| u - v).collect();
        pa.reduce(&d).iter().all(Zero::is_zero)
    });
    let frobenius = bad.is_none();
    if congruence != frobenius {
        return Err(Error::Internal(format!(
            "congruence and Frobenius verdicts differ at p = {p}: {congruence} vs {frobenius}"
        )));
    }
    let witness = bad.map(|x| Witness { element: res.lift(&x, rank), power: res.lift(&res.pow(&x, p), rank) });
    Ok(PrimeVerdict { p, residues: n, congruence, frobenius, witness })
}

/// Tests `a^p = a` on `A/pA` for every prime `p` dividing `|A|`; other primes
/// have `pA = A`.
pub fn check_wpc_over_z(a: &FiniteAlgebra) -> Result<WpcReport> {
    let primes = a.primes()?;
    let verdicts: Vec<PrimeVerdict> = primes.par_iter().map(|&p| check_prime(a, p)).collect::<Result<_>>()?;
    let overall = verdicts.iter().all(|v| v.frobenius);
    Ok(WpcReport { order: a.order(), primes: verdicts, overall, label: VERDICT_LABEL })
}

/// An `F_p`-subspace of the residue algebra in reduced echelon form.
#[derive(Clone, Debug)]
struct Subspace {
    p: u64,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn spanned(p: u64, gens: Vec<Vec<u64>>) -> Self {
        let (rows, pivots) = if gens.is_empty() { (Vec::new(), Vec::new()) } else { rref(&gens, p) };
        Subspace { p, rows, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn contains(&self, v: &[u64]) -> bool {
        let p = self.p;
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = v[c];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = super::algebra::submod(*x, super::algebra::mulmod(f, *y, p), p);
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }
}

fn ideal_of(r: &ResidueAlgebra, gens: &[Vec<u64>]) -> Subspace {
    let mut span: Vec<Vec<u64>> = Vec::new();
    for g in gens {
        for b in 0..r.dim() {
            span.push(r.mul(g, &r.basis(b)));
        }
    }
    Subspace::spanned(r.p, span)
}

fn ideal_product(r: &ResidueAlgebra, i: &Subspace, j: &Subspace) -> Subspace {
    let mut span = Vec::new();
    for x in &i.rows {
        for y in &j.rows {
            span.push(r.mul(x, y));
        }
    }
    Subspace::spanned(r.p, span)
}

/// Every maximal ideal of the residue algebra. A non-unit not yet covered is
/// grown greedily in one pass over all elements; that pass ends maximal.
fn maximal_ideals(r: &ResidueAlgebra, n: u64) -> Vec<Subspace> {
    let m = r.dim();
    let mut found: Vec<Subspace> = Vec::new();
    for i in 0..n {
        let a = r.element(i);
        if ideal_of(r, std::slice::from_ref(&a)).dim() == m || found.iter().any(|f| f.contains(&a)) {
            continue;
        }
        let mut cur = ideal_of(r, &[a]);
        for j in 0..n {
            let b = r.element(j);
            if cur.contains(&b) {
                continue;
            }
            let mut span = cur.rows.clone();
            span.extend(ideal_of(r, &[b]).rows);
            let next = Subspace::spanned(r.p, span);
            if next.dim() < m {
                cur = next;
            }
        }
        found.push(cur);
    }
    found
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionSuite {
    pub p: u64,
    pub dim: usize,
    pub residues: u64,
    /// (2) `a -> a^p` is the identity on `A/pA`.
    pub frobenius: bool,
    /// (4) reduced, and every residue field has `p` elements.
    pub reduced_prime_fields: bool,
    /// (5) embeds in a power of `F_p`, via primitive idempotents.
    pub embeds_in_fp_power: bool,
    /// (8) `pA` is a product of distinct maximal ideals with residue field `F_p`.
    pub max_ideal_product: bool,
    /// Residue field sizes `p^f`, one exponent `f` per maximal ideal.
    pub residue_degrees: Vec<usize>,
    /// Dimension of each component `eA/pA` for the primitive idempotents `e`.
    pub component_dims: Vec<usize>,
    pub nilpotent: Option<Vec<BigInt>>,
}

impl ConditionSuite {
    pub fn verdicts(&self) -> [bool; 4] {
        [self.frobenius, self.reduced_prime_fields, self.embeds_in_fp_power, self.max_ideal_product]
    }

    pub fn agree(&self) -> bool {
        let v = self.verdicts();
        v.iter().all(|&x| x == v[0])
    }
}

/// Evaluates conditions (2), (4), (5) and (8) on `A/pA` separately and
/// errors if they disagree.
pub fn check_condition_suite(a: &FiniteAlgebra, p: u64) -> Result<ConditionSuite> {
    if !crate::arith::int::is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let (r, n) = residue_algebra(a, p)?;
    let m = r.dim();
    let elems: Vec<Vec<u64>> = (0..n).map(|i| r.element(i)).collect();

    let frobenius = elems.iter().all(|x| r.pow(x, p) == *x);

    let zero = r.zero();
    let nil = elems.iter().find(|x| **x != zero && r.pow(x, m.max(1) as u64) == zero);
    let maxes = maximal_ideals(&r, n);
    let residue_degrees: Vec<usize> = maxes.iter().map(|i| m - i.dim()).collect();
    let reduced_prime_fields = nil.is_none() && residue_degrees.iter().all(|&f| f == 1);

    let idempotents: Vec<&Vec<u64>> = elems.iter().filter(|e| **e != zero && r.mul(e, e) == **e).collect();
    let primitive: Vec<&Vec<u64>> =
        idempotents.iter().copied().filter(|e| !idempotents.iter().any(|f| f != e && r.mul(e, f) == **f)).collect();
    let component_dims: Vec<usize> = primitive.iter().map(|e| ideal_of(&r, std::slice::from_ref(*e)).dim()).collect();
    let embeds_in_fp_power = if component_dims.iter().all(|&d| d == 1) {
        // phi(x)_i = c with x e_i = c e_i; check it is an injective ring map
        let coord = |x: &[u64], e: &[u64]| -> u64 {
            let xe = r.mul(x, e);
            let k = e.iter().position(|&c| c != 0).unwrap();
            super::algebra::mulmod(xe[k], crate::arith::int::pow_mod(e[k], p - 2, p), p)
        };
        let phi = |x: &[u64]| -> Vec<u64> { primitive.iter().map(|e| coord(x, e)).collect() };
        let basis: Vec<Vec<u64>> = (0..m).map(|b| r.basis(b)).collect();
        let images: Vec<Vec<u64>> = basis.iter().map(|b| phi(b)).collect();
        let hom = basis.iter().zip(&images).all(|(x, px)| {
            basis.iter().zip(&images).all(|(y, py)| {
                phi(&r.mul(x, y))
                    == px.iter().zip(py).map(|(u, v)| super::algebra::mulmod(*u, *v, p)).collect::<Vec<_>>()
            })
        }) && phi(&r.unity).iter().all(|&c| c == 1);
        let injective = m == 0 || Subspace::spanned(p, images.clone()).dim() == m;
        if !(hom && injective) {
            return Err(Error::Internal(format!("idempotent decomposition at p = {p} does not give an embedding")));
        }
        true
    } else {
        false
    };

    let product = maxes
        .iter()
        .fold(Subspace::spanned(p, (0..m).map(|b| r.basis(b)).collect()), |acc, i| ideal_product(&r, &acc, i));
    let max_ideal_product = residue_degrees.iter().all(|&f| f == 1) && product.dim() == 0;

    let suite = ConditionSuite {
        p,
        dim: m,
        residues: n,
        frobenius,
        reduced_prime_fields,
        embeds_in_fp_power,
        max_ideal_product,
        residue_degrees,
        component_dims,
        nilpotent: nil.map(|x| r.lift(x, a.rank())),
    };
    if !suite.agree() {
        return Err(Error::Internal(format!("condition verdicts disagree at p = {p}: {:?}", suite.verdicts())));
    }
    Ok(suite)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn examples() {
        let z6 = check_wpc_over_z(&FiniteAlgebra::cyclic(6).unwrap()).unwrap();
        assert!(z6.overall);
        assert_eq!(z6.primes.iter().map(|v| v.p).collect::<Vec<_>>(), vec![2, 3]);
        assert!(check_wpc_over_z(&FiniteAlgebra::cyclic(4).unwrap()).unwrap().overall);
        let f4 = check_wpc_over_z(&FiniteAlgebra::poly_quotient(&[1, 1, 1], 2).unwrap()).unwrap();
        assert!(!f4.overall);
        let w = f4.primes[0].witness.as_ref().unwrap();
        assert_eq!(w.element, b(&[0, 1]));
        assert_eq!(w.power, b(&[1, 1]));
        let f9 = check_wpc_over_z(&FiniteAlgebra::poly_quotient(&[1, 0, 1], 3).unwrap()).unwrap();
        assert!(!f9.overall);
    }

    #[test]
    fn suites() {
        let z6 = FiniteAlgebra::cyclic(6).unwrap();
        for p in [2, 3, 5] {
            let s = check_condition_suite(&z6, p).unwrap();
            assert_eq!(s.verdicts(), [true; 4]);
        }
        let f4 = FiniteAlgebra::poly_quotient(&[1, 1, 1], 2).unwrap();
        let s = check_condition_suite(&f4, 2).unwrap();
        assert_eq!(s.verdicts(), [false; 4]);
        assert_eq!(s.residue_degrees, vec![2]);
        let z4sq = FiniteAlgebra::poly_quotient(&[0, -1, 1], 4).unwrap();
        let s = check_condition_suite(&z4sq, 2).unwrap();
        assert_eq!(s.verdicts(), [true; 4]);
        assert_eq!(s.residue_degrees, vec![1, 1]);
        assert_eq!(s.component_dims, vec![1, 1]);
        // F_2[x]/(x^2) is not reduced
        let dual = FiniteAlgebra::poly_quotient(&[0, 0, 1], 2).unwrap();
        let s = check_condition_suite(&dual, 2).unwrap();
        assert_eq!(s.verdicts(), [false; 4]);
        assert_eq!(s.nilpotent, Some(b(&[0, 1])));
    }
}
