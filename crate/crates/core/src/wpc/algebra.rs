//! Finite commutative `Z`-algebras given by structure constants modulo a
//! full-rank relation lattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::hnf::{hnf, Hnf};

#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    rank: usize,
    /// `mult[(i * r + j) * r + k] = c_{ijk}`.
    mult: Vec<BigInt>,
    lattice: Hnf,
    unity: Vec<BigInt>,
}

/// JSON input shape; integers may be numbers or decimal strings.
#[derive(Deserialize)]
struct RawAlgebra {
    rank: usize,
    mult: Vec<JsonInt>,
    relations: Vec<Vec<JsonInt>>,
    unity: Vec<JsonInt>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Num(i64),
    Str(String),
}

impl JsonInt {
    fn value(&self) -> Result<BigInt> {
        match self {
            JsonInt::Num(n) => Ok(BigInt::from(*n)),
            JsonInt::Str(s) => s.trim().parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
        }
    }
}

fn ints(v: &[JsonInt]) -> Result<Vec<BigInt>> {
    v.iter().map(JsonInt::value).collect()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

impl FiniteAlgebra {
    /// Checks that the relations have full rank and span an ideal, and that
    /// the product is commutative, associative and unital modulo them.
    /// The relation rows may be any generating set; they are put in HNF here.
    pub fn new(rank: usize, mult: Vec<BigInt>, relations: Vec<Vec<BigInt>>, unity: Vec<BigInt>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidAlgebra("rank must be positive".into()));
        }
        if mult.len() != rank * rank * rank {
            return Err(Error::InvalidAlgebra(format!(
                "structure tensor has {} entries, expected {}",
                mult.len(),
                rank * rank * rank
            )));
        }
        if unity.len() != rank || relations.iter().any(|r| r.len() != rank) {
            return Err(Error::InvalidAlgebra(format!("vectors must have length {rank}")));
        }
        let lattice = hnf(&relations);
        if lattice.rank() != rank {
            return Err(Error::InvalidAlgebra(format!(
                "relation lattice has rank {} < {rank}; the quotient is infinite",
                lattice.rank()
            )));
        }
        let a = FiniteAlgebra { rank, mult, lattice, unity };
        let unit = |i: usize| {
            let mut v = vec![BigInt::zero(); rank];
            v[i] = BigInt::one();
            v
        };
        for (n, row) in a.lattice.rows.iter().enumerate() {
            for j in 0..rank {
                if !a.is_zero(&a.mul_raw(row, &unit(j))) {
                    return Err(Error::InvalidAlgebra(format!("relation row {n} times e_{j} leaves the lattice")));
                }
            }
        }
        for i in 0..rank {
            let ei = unit(i);
            if !a.is_zero(&sub(&a.mul_raw(&a.unity, &ei), &ei)) {
                return Err(Error::InvalidAlgebra(format!("unity does not fix e_{i}")));
            }
            for j in 0..rank {
                let ej = unit(j);
                let ij = a.mul_raw(&ei, &ej);
                if !a.is_zero(&sub(&ij, &a.mul_raw(&ej, &ei))) {
                    return Err(Error::InvalidAlgebra(format!("e_{i} e_{j} != e_{j} e_{i}")));
                }
                for k in 0..rank {
                    let ek = unit(k);
                    let l = a.mul_raw(&ij, &ek);
                    let r = a.mul_raw(&ei, &a.mul_raw(&ej, &ek));
                    if !a.is_zero(&sub(&l, &r)) {
                        return Err(Error::InvalidAlgebra(format!("(e_{i} e_{j}) e_{k} != e_{i} (e_{j} e_{k})")));
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawAlgebra = serde_json::from_str(s).map_err(|e| Error::Parse(format!("algebra JSON: {e}")))?;
        let relations = raw.relations.iter().map(|r| ints(r)).collect::<Result<_>>()?;
        FiniteAlgebra::new(raw.rank, ints(&raw.mult)?, relations, ints(&raw.unity)?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let s = |v: &[BigInt]| v.iter().map(|x| serde_json::Value::String(x.to_string())).collect::<Vec<_>>();
        serde_json::json!({
            "rank": self.rank,
            "mult": s(&self.mult),
            "relations": self.lattice.rows.iter().map(|r| s(r)).collect::<Vec<_>>(),
            "unity": s(&self.unity),
        })
    }

    /// `Z/n`.
    pub fn cyclic(n: i64) -> Result<Self> {
        FiniteAlgebra::new(1, big(&[1]), vec![big(&[n])], big(&[1]))
    }

    /// `Z[x]/(f, n)` for monic `f` (ascending coefficients, leading 1 included),
    /// on the basis `1, x, ..., x^(deg f - 1)`.
    pub fn poly_quotient(f: &[i64], n: i64) -> Result<Self> {
        let r = f
            .len()
            .checked_sub(1)
            .filter(|&r| r > 0 && f[r] == 1)
            .ok_or_else(|| Error::InvalidAlgebra("modulus must be monic of positive degree".into()))?;
        // x^m reduced modulo f, for m < 2r - 1
        let mut powers: Vec<Vec<BigInt>> = Vec::new();
        let mut cur = vec![BigInt::zero(); r];
        cur[0] = BigInt::one();
        for _ in 0..(2 * r - 1) {
            powers.push(cur.clone());
            // multiply by x
            let top = cur[r - 1].clone();
            let mut next = vec![BigInt::zero(); r];
            next[1..r].clone_from_slice(&cur[..r - 1]);
            for (k, c) in next.iter_mut().enumerate() {
                *c -= &top * f[k];
            }
            cur = next;
        }
        let mut mult = Vec::with_capacity(r * r * r);
        for i in 0..r {
            for j in 0..r {
                mult.extend(powers[i + j].iter().cloned());
            }
        }
        let relations = (0..r).map(|i| (0..r).map(|j| BigInt::from(if i == j { n } else { 0 })).collect()).collect();
        let mut unity = vec![BigInt::zero(); r];
        unity[0] = BigInt::one();
        FiniteAlgebra::new(r, mult, relations, unity)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &[Vec<BigInt>] {
        &self.lattice.rows
    }

    pub fn unity(&self) -> &[BigInt] {
        &self.unity
    }

    /// `c_{ijk}`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &BigInt {
        &self.mult[(i * self.rank + j) * self.rank + k]
    }

    /// `|A|`.
    pub fn order(&self) -> BigInt {
        self.lattice.index()
    }

    /// Primes dividing `|A|`, the only ones with `pA != A`.
    pub fn primes(&self) -> Result<Vec<u64>> {
        let n = self
            .order()
            .to_u64()
            .ok_or_else(|| Error::BudgetExceeded { needed: self.order().to_string(), budget: u64::MAX })?;
        Ok(crate::arith::int::factor(n).into_iter().map(|(p, _)| p).collect())
    }

    fn mul_raw(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let r = self.rank;
        let mut out = vec![BigInt::zero(); r];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let s = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    /// Canonical coordinates modulo the relations.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.lattice.reduce(v)
    }

    pub fn is_zero(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn mul(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        self.reduce(&self.mul_raw(x, y))
    }

    pub fn pow(&self, x: &[BigInt], mut e: u64) -> Vec<BigInt> {
        let mut acc = self.reduce(&self.unity);
        let mut b = self.reduce(x);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// `A/I` with `I` generated by the existing relations and `extra`.
    pub fn quotient(&self, extra: &[Vec<BigInt>]) -> Result<Self> {
        let mut rows = self.lattice.rows.clone();
        rows.extend_from_slice(extra);
        // close the extra rows under multiplication so they span an ideal
        let r = self.rank;
        for v in extra {
            for j in 0..r {
                let mut e = vec![BigInt::zero(); r];
                e[j] = BigInt::one();
                rows.push(self.mul_raw(v, &e));
            }
        }
        FiniteAlgebra::new(r, self.mult.clone(), rows, self.unity.clone())
    }

    /// `A x B` on the concatenated basis.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let (r1, r2) = (self.rank, other.rank);
        let r = r1 + r2;
        let mut mult = vec![BigInt::zero(); r * r * r];
        for i in 0..r1 {
            for j in 0..r1 {
                for k in 0..r1 {
                    mult[(i * r + j) * r + k] = self.constant(i, j, k).clone();
                }
            }
        }
        for i in 0..r2 {
            for j in 0..r2 {
                for k in 0..r2 {
                    mult[((r1 + i) * r + r1 + j) * r + r1 + k] = other.constant(i, j, k).clone();
                }
            }
        }
        let mut rows = Vec::new();
        for row in &self.lattice.rows {
            let mut v = row.clone();
            v.resize(r, BigInt::zero());
            rows.push(v);
        }
        for row in &other.lattice.rows {
            let mut v = vec![BigInt::zero(); r1];
            v.extend(row.iter().cloned());
            rows.push(v);
        }
        let mut unity = self.unity.clone();
        unity.extend(other.unity.iter().cloned());
        FiniteAlgebra::new(r, mult, rows, unity)
    }
}

fn sub(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// `A/pA` as an `F_p`-algebra: `F_p^r` modulo the lattice reduced mod `p`,
/// on the basis of non-pivot coordinates.
#[derive(Clone, Debug)]
pub struct ResidueAlgebra {
    pub p: u64,
    /// Original coordinates used as the basis.
    pub free: Vec<usize>,
    /// `table[a][b]` = product of basis elements `a` and `b`.
    table: Vec<Vec<Vec<u64>>>,
    pub unity: Vec<u64>,
}

/// Reduced row echelon form over `F_p`; returns rows and pivot columns.
pub(crate) fn rref(rows: &[Vec<u64>], p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let n = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(k) = (r..m.len()).find(|&k| m[k][c] != 0) else { continue };
        m.swap(r, k);
        let inv = crate::arith::int::pow_mod(m[r][c], p - 2, p);
        for x in m[r].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        let pivot = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k != r && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = submod(*x, mulmod(f, *y, p), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn submod(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

impl ResidueAlgebra {
    pub fn new(a: &FiniteAlgebra, p: u64) -> Self {
        let pb = BigInt::from(p);
        let modp = |v: &[BigInt]| -> Vec<u64> { v.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect() };
        let rows: Vec<Vec<u64>> = a.relations().iter().map(|r| modp(r)).collect();
        let (ech, pivots) = rref(&rows, p);
        let free: Vec<usize> = (0..a.rank()).filter(|c| !pivots.contains(c)).collect();
        let reduce = |v: Vec<u64>| -> Vec<u64> {
            let mut v = v;
            for (row, &c) in ech.iter().zip(&pivots) {
                let f = v[c];
                if f != 0 {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = submod(*x, mulmod(f, *y, p), p);
                    }
                }
            }
            free.iter().map(|&c| v[c]).collect()
        };
        let r = a.rank();
        let table = free
            .iter()
            .map(|&i| {
                free.iter()
                    .map(|&j| reduce((0..r).map(|k| a.constant(i, j, k).mod_floor(&pb).to_u64().unwrap()).collect()))
                    .collect()
            })
            .collect();
        let unity = reduce(modp(a.unity()));
        ResidueAlgebra { p, free, table, unity }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// `p^dim`, or `None` on overflow.
    pub fn size(&self) -> Option<u64> {
        self.p.checked_pow(self.dim() as u32)
    }

    /// Element with base-`p` digits of `index` as coordinates.
    pub fn element(&self, mut index: u64) -> Vec<u64> {
        (0..self.dim())
            .map(|_| {
                let d = index % self.p;
                index /= self.p;
                d
            })
            .collect()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.dim()]
    }

    pub fn basis(&self, i: usize) -> Vec<u64> {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = self.zero();
        for (a, &xa) in x.iter().enumerate().filter(|(_, v)| **v != 0) {
            for (b, &yb) in y.iter().enumerate().filter(|(_, v)| **v != 0) {
                let s = mulmod(xa, yb, p);
                for (o, &t) in out.iter_mut().zip(&self.table[a][b]) {
                    *o = addmod(*o, mulmod(s, t, p), p);
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).map(|(&a, &b)| addmod(a, b, self.p)).collect()
    }

    pub fn scale(&self, c: u64, x: &[u64]) -> Vec<u64> {
        x.iter().map(|&a| mulmod(c, a, self.p)).collect()
    }

    pub fn pow(&self, x: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = self.unity.clone();
        let mut b = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Integer lift in the original coordinates of `A`.
    pub fn lift(&self, x: &[u64], rank: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); rank];
        for (&c, &xi) in self.free.iter().zip(x) {
            v[c] = BigInt::from(xi);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_algebras() {
        let z6 = FiniteAlgebra::cyclic(6).unwrap();
        assert_eq!(z6.order(), BigInt::from(6));
        assert_eq!(z6.primes().unwrap(), vec![2, 3]);
        let f4 = FiniteAlgebra::poly_quotient(&[1, 1, 1], 2).unwrap();
        assert_eq!(f4.order(), BigInt::from(4));
        let w = big(&[0, 1]);
        // w^2 = w + 1 and w^3 = 1
        assert_eq!(f4.mul(&w, &w), big(&[1, 1]));
        assert_eq!(f4.pow(&w, 3), big(&[1, 0]));
        let r = ResidueAlgebra::new(&f4, 2);
        assert_eq!(r.dim(), 2);
        assert_eq!(r.mul(&[0, 1], &[0, 1]), vec![1, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        // rank 1 with an infinite quotient
        assert!(FiniteAlgebra::new(1, big(&[1]), vec![big(&[0])], big(&[1])).is_err());
        // e_0 e_1 = e_1 but e_1 e_0 = 0
        let mult = big(&[1, 0, 0, 1, 0, 0, 0, 0]);
        let rel = vec![big(&[5, 0]), big(&[0, 5])];
        assert!(matches!(FiniteAlgebra::new(2, mult, rel, big(&[1, 0])), Err(Error::InvalidAlgebra(_))));
        // relation 2 e_1 with e_1 e_1 = e_0 is not an ideal
        let mult = big(&[1, 0, 0, 1, 0, 1, 1, 0]);
        let rel = vec![big(&[4, 0]), big(&[0, 2])];
        assert!(FiniteAlgebra::new(2, mult, rel, big(&[1, 0])).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let a = FiniteAlgebra::poly_quotient(&[0, -1, 1], 4).unwrap();
        let s = a.to_json().to_string();
        let b = FiniteAlgebra::from_json(&s).unwrap();
        assert_eq!(b.to_json(), a.to_json());
        let c = FiniteAlgebra::from_json(r#"{"rank":1,"mult":[1],"relations":[[6]],"unity":[1]}"#).unwrap();
        assert_eq!(c.order(), BigInt::from(6));
    }

    #[test]
    fn products_and_quotients() {
        let a = FiniteAlgebra::cyclic(4).unwrap();
        let b = FiniteAlgebra::cyclic(3).unwrap();
        let ab = a.product(&b).unwrap();
        assert_eq!(ab.order(), BigInt::from(12));
        let q = a.quotient(&[big(&[2])]).unwrap();
        assert_eq!(q.order(), BigInt::from(2));
    }
}
