//! Dense univariate polynomials in `X` over a [`Field`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::quad::QuadElem;
use super::ratfunc::RatFunc;
use super::rational::parse_rational;
use super::Field;
use crate::error::{Error, Result};

/// Coefficients ascend in degree; no trailing zero. The zero polynomial has
/// no coefficients and degree `None`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

fn mismatch<F: Field>(a: &F::Ctx, b: &F::Ctx) -> Error {
    Error::FieldMismatch(format!("{} vs {}", F::field_name(a), F::field_name(b)))
}

impl<F: Field> Poly<F> {
    pub fn new(ctx: F::Ctx, coeffs: Vec<F>) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.context() != ctx) {
            return Err(mismatch::<F>(&ctx, &c.context()));
        }
        Ok(Self::from_parts(ctx, coeffs))
    }

    pub(crate) fn from_parts(ctx: F::Ctx, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(F::is_zero_elem) {
            coeffs.pop();
        }
        Poly { ctx, coeffs }
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Poly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::constant(F::one_in(ctx))
    }

    /// The indeterminate `X`.
    pub fn x(ctx: &F::Ctx) -> Self {
        Self::from_parts(ctx.clone(), vec![F::zero_in(ctx), F::one_in(ctx)])
    }

    pub fn constant(c: F) -> Self {
        Self::from_parts(c.context(), vec![c])
    }

    pub fn monomial(c: F, deg: usize) -> Self {
        let ctx = c.context();
        let mut coeffs = vec![F::zero_in(&ctx); deg];
        coeffs.push(c);
        Self::from_parts(ctx, coeffs)
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| F::zero_in(&self.ctx))
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(mismatch::<F>(&self.ctx, &other.ctx));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(F, F) -> F) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| op(self.coeff(i), other.coeff(i))).collect();
        Self::from_parts(self.ctx.clone(), coeffs)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.mul_same(other))
    }

    fn mul_same(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        Self::from_parts(self.ctx.clone(), F::poly_mul(&self.coeffs, &other.coeffs))
    }

    pub fn neg(&self) -> Self {
        Self::from_parts(self.ctx.clone(), self.coeffs.iter().cloned().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &F) -> Result<Self> {
        if c.context() != self.ctx {
            return Err(mismatch::<F>(&self.ctx, &c.context()));
        }
        Ok(Self::from_parts(self.ctx.clone(), self.coeffs.iter().map(|x| x.clone() * c.clone()).collect()))
    }

    /// Divides every coefficient by `c`; errors on a zero divisor.
    pub fn div_scalar(&self, c: &F) -> Result<Self> {
        let inv = c.inv().ok_or_else(|| Error::InvalidArgument("division by zero".into()))?;
        self.scale(&inv)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_same(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_same(&base);
            }
        }
        acc
    }

    /// `self(g(X))` by Horner's scheme.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.same_field(g)?;
        let mut acc = Self::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_same(g).add_constant(c);
        }
        Ok(acc)
    }

    fn add_constant(mut self, c: &F) -> Self {
        if self.coeffs.is_empty() {
            self.coeffs.push(c.clone());
        } else {
            let c0 = std::mem::replace(&mut self.coeffs[0], F::zero_in(&self.ctx));
            self.coeffs[0] = c0 + c.clone();
        }
        Self::from_parts(self.ctx, self.coeffs)
    }

    /// Horner evaluation at `a`.
    pub fn eval(&self, a: &F) -> Result<F> {
        if a.context() != self.ctx {
            return Err(mismatch::<F>(&self.ctx, &a.context()));
        }
        Ok(self.eval_same(a))
    }

    pub(crate) fn eval_same(&self, a: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero_in(&self.ctx), |acc, c| acc * a.clone() + c.clone())
    }

    pub fn field_name(&self) -> String {
        F::field_name(&self.ctx)
    }
}

/// Coefficient fields that can be read from the command line.
pub trait ParseCoeff: Field {
    fn parse_coeff(ctx: &Self::Ctx, s: &str) -> Result<Self>;

    /// Text accepted back by `parse_coeff`.
    fn format_coeff(&self) -> String {
        self.to_string()
    }
}

impl ParseCoeff for BigRational {
    fn parse_coeff(_: &(), s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

impl ParseCoeff for RatFunc {
    fn parse_coeff(p: &u64, s: &str) -> Result<Self> {
        RatFunc::parse(*p, s)
    }
}

impl ParseCoeff for QuadElem {
    fn parse_coeff(d: &BigInt, s: &str) -> Result<Self> {
        QuadElem::parse(d, s)
    }

    fn format_coeff(&self) -> String {
        if self.y.is_zero() {
            self.x.to_string()
        } else {
            format!("{}:{}", self.x, self.y)
        }
    }
}

impl<F: ParseCoeff> Poly<F> {
    /// Comma-separated coefficients in ascending degree.
    pub fn parse(ctx: &F::Ctx, s: &str) -> Result<Self> {
        let coeffs = s.split(',').map(|c| F::parse_coeff(ctx, c.trim())).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(ctx.clone(), coeffs))
    }
}

impl Poly<BigRational> {
    /// Coefficients `c_k` with `f = sum c_k * binom(X, k)`, via `c_k = Δ^k f(0)`.
    pub fn binomial_basis(&self) -> Vec<BigRational> {
        let Some(n) = self.degree() else {
            return Vec::new();
        };
        // differences of the integer values of L*f, divided by L at the end
        let (nums, l) = super::rational::clear_denominators(&self.coeffs);
        let mut diffs: Vec<BigInt> = (0..=n)
            .map(|i| {
                let x = BigInt::from(i);
                nums.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
            })
            .collect();
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            out.push(BigRational::new(diffs[0].clone(), l.clone()));
            for i in 0..n - k {
                diffs[i] = &diffs[i + 1] - &diffs[i];
            }
            diffs.pop();
        }
        out
    }

    /// `binom(X, k) = X(X-1)...(X-k+1)/k!`.
    pub fn binomial(k: usize) -> Self {
        let mut acc = Self::one(&());
        for j in 0..k {
            let lin = Self::from_parts((), vec![BigRational::from_integer(-BigInt::from(j)), One::one()]);
            acc = acc.mul_same(&lin);
        }
        let fact: BigInt = (1..=k).map(BigInt::from).product();
        Self::from_parts((), acc.coeffs.into_iter().map(|c| c / BigRational::from_integer(fact.clone())).collect())
    }

    /// Inverse of [`Self::binomial_basis`].
    pub fn from_binomial_basis(coeffs: &[BigRational]) -> Self {
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .fold(Self::zero(&()), |acc, (k, c)| acc.zip_with(&Self::binomial(k).scale(c).unwrap(), |a, b| a + b))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero_elem() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*X")?,
                _ => write!(f, "({c})*X^{i}")?,
            }
        }
        Ok(())
    }
}
