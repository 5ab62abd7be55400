//! Row-style Hermite normal form over `Z` with a unimodular transform.
//!
//! Rows of the input generate a lattice. The output rows are upper
//! echelon, pivots positive, entries above each pivot reduced into
//! `[0, pivot)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    /// The nonzero HNF rows, `rank` of them.
    pub rows: Vec<Vec<BigInt>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
    /// `transform * input = rows ++ zero rows`; square of size `input.len()`.
    pub transform: Vec<Vec<BigInt>>,
}

fn axpy(dst: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= q * s;
    }
}

pub fn hnf(input: &[Vec<BigInt>]) -> Hnf {
    let m = input.len();
    let n = input.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<BigInt>> = input.to_vec();
    let mut u: Vec<Vec<BigInt>> =
        (0..m).map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == m {
            break;
        }
        loop {
            let best = (r..m).filter(|&i| !h[i][col].is_zero()).min_by(|&i, &j| h[i][col].abs().cmp(&h[j][col].abs()));
            let Some(best) = best else { break };
            h.swap(r, best);
            u.swap(r, best);
            let mut done = true;
            for i in r + 1..m {
                if h[i][col].is_zero() {
                    continue;
                }
                let q = h[i][col].div_floor(&h[r][col]);
                let (top, rest) = h.split_at_mut(i);
                axpy(&mut rest[0], &q, &top[r]);
                let (top, rest) = u.split_at_mut(i);
                axpy(&mut rest[0], &q, &top[r]);
                if !h[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][col].is_zero() {
            continue;
        }
        if h[r][col].is_negative() {
            for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = h[i][col].div_floor(&h[r][col]);
            if q.is_zero() {
                continue;
            }
            let (top, rest) = h.split_at_mut(r);
            axpy(&mut top[i], &q, &rest[0]);
            let (top, rest) = u.split_at_mut(r);
            axpy(&mut top[i], &q, &rest[0]);
        }
        pivots.push(col);
        r += 1;
    }
    h.truncate(r);
    Hnf { rows: h, pivots, transform: u }
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Integer `x` with `x * input = target`, if the target lies in the lattice.
    pub fn solve(&self, target: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut rem = target.to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let (q, r) = rem[col].div_rem(&row[col]);
            if !r.is_zero() {
                return None;
            }
            axpy(&mut rem, &q, row);
            coeffs.push(q);
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let m = self.transform.len();
        let mut x = vec![BigInt::zero(); m];
        for (c, urow) in coeffs.iter().zip(&self.transform) {
            for (xi, ui) in x.iter_mut().zip(urow) {
                *xi += c * ui;
            }
        }
        Some(x)
    }

    /// Canonical representative of `v` modulo a full-rank square lattice:
    /// each pivot coordinate ends up in `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut v = v.to_vec();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let q = v[col].div_floor(&row[col]);
            if !q.is_zero() {
                axpy(&mut v, &q, row);
            }
        }
        v
    }

    /// Absolute determinant for a full-rank square lattice (the index in `Z^n`).
    pub fn index(&self) -> BigInt {
        self.rows.iter().zip(&self.pivots).map(|(r, &c)| r[c].clone()).product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn mul(u: &[Vec<BigInt>], a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        u.iter()
            .map(|urow| (0..a[0].len()).map(|j| urow.iter().zip(a).map(|(x, row)| x * &row[j]).sum()).collect())
            .collect()
    }

    #[test]
    fn small_example() {
        let a = mat(&[&[2, 4], &[3, 5], &[0, 6]]);
        let h = hnf(&a);
        assert_eq!(h.rows, mat(&[&[1, 1], &[0, 2]]));
        let prod = mul(&h.transform, &a);
        assert_eq!(&prod[..2], &h.rows[..]);
        assert!(prod[2].iter().all(Zero::is_zero));
        let x = h.solve(&[BigInt::from(1), BigInt::from(3)]).unwrap();
        let back: Vec<BigInt> = (0..2).map(|j| x.iter().zip(&a).map(|(c, r)| c * &r[j]).sum()).collect();
        assert_eq!(back, vec![BigInt::from(1), BigInt::from(3)]);
        assert!(h.solve(&[BigInt::from(1), BigInt::from(2)]).is_none());
    }

    proptest! {
        #[test]
        fn transform_is_consistent(rows in prop::collection::vec(prop::collection::vec(-30i64..30, 3), 1..6)) {
            let a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let h = hnf(&a);
            let prod = mul(&h.transform, &a);
            prop_assert_eq!(&prod[..h.rank()], &h.rows[..]);
            prop_assert!(prod[h.rank()..].iter().all(|r| r.iter().all(Zero::is_zero)));
            for (i, (row, &c)) in h.rows.iter().zip(&h.pivots).enumerate() {
                prop_assert!(row[c].is_positive());
                prop_assert!(row[..c].iter().all(Zero::is_zero));
                for above in &h.rows[..i] {
                    prop_assert!(!above[c].is_negative() && above[c] < row[c]);
                }
            }
        }
    }
}
