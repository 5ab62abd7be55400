//! Exact arithmetic kernel: integers, rationals, `F_p[T]`, `F_p(T)`,
//! imaginary quadratic field elements, and dense polynomials over any of them.

pub mod fp_poly;
pub mod int;
pub mod poly;
pub mod quad;
pub mod ratfunc;
pub mod rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

/// A coefficient field with a runtime context (the prime `p` for `F_p(T)`,
/// the radicand `d` for `Q(sqrt d)`, nothing for `Q`).
///
/// The operator impls assume both operands share a context; [`poly::Poly`]
/// checks contexts at its boundary and reports mismatches as errors.
pub trait Field:
    Clone
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Ctx: Clone + Eq + Debug + Send + Sync + 'static;

    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, n: &BigInt) -> Self;
    fn context(&self) -> Self::Ctx;
    fn is_zero_elem(&self) -> bool;
    fn inv(&self) -> Option<Self>;

    fn is_one_elem(&self) -> bool {
        *self == Self::one_in(&self.context())
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_in(&self.context());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Product of dense coefficient vectors (ascending degree, both nonempty).
    /// Fields with cheaper bulk arithmetic override this.
    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        schoolbook_mul(a, b)
    }

    /// `sum x_i y_i` over a nonempty list of pairs.
    fn sum_of_products(ctx: &Self::Ctx, terms: &[(&Self, &Self)]) -> Self {
        terms.iter().fold(Self::zero_in(ctx), |acc, (x, y)| acc + (*x).clone() * (*y).clone())
    }

    /// Human-readable name of the field for a context.
    fn field_name(ctx: &Self::Ctx) -> String;
}

pub(crate) fn schoolbook_mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let ctx = a[0].context();
    let mut out = vec![F::zero_in(&ctx); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero_elem() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero_elem() {
                continue;
            }
            let t = x.clone() * y.clone();
            let slot = std::mem::replace(&mut out[i + j], F::zero_in(&ctx));
            out[i + j] = slot + t;
        }
    }
    out
}
