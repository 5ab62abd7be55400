//! Integer-valued polynomial rings over `Z`, `Z_(p)`, `F_p[T]` and imaginary
//! quadratic orders: regular bases, factorial ideals, Pólya–Ostrowski groups,
//! presentation certificates and weak polynomial completeness of finite algebras.

pub mod arith;
pub mod domain;
pub mod error;
pub mod hnf;
pub mod intpoly;
pub mod json;
pub mod quad_ideal;
pub mod wpc;

pub use arith::poly::Poly;
pub use arith::quad::QuadElem;
pub use arith::ratfunc::RatFunc;
pub use error::{Error, Result};

pub type Rational = num_rational::BigRational;
/// Polynomials over `Q`, the fraction field of `Z` and `Z_(p)`.
pub type QPoly = Poly<Rational>;
/// Polynomials over `F_p(T)`.
pub type FpTPoly = Poly<RatFunc>;
/// Polynomials over `Q(sqrt d)`.
pub type QuadPoly = Poly<QuadElem>;
