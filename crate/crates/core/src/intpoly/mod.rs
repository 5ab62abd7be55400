//! Integer-valued polynomials: the exponents `w_k(n)`, Fermat towers,
//! regular bases, membership, factorial ideals and presentation checks.

pub mod basis;
pub mod presentation;
pub mod report;
pub mod tower;
pub mod w;

use crate::arith::poly::Poly;
use crate::domain::{Domain, Membership};
use crate::error::Result;

pub use basis::{combine, expand_in_basis, regular_basis, sigma, Expansion, RegularBasis};
pub use presentation::{verify_global_relations, verify_local_presentation, verify_presentation};
pub use report::{ideal_report, IdealReport};
pub use tower::{f_kn, fermat_poly, fermat_tower, FermatTower, RelationCheck};
pub use w::w;

/// Whether `f(D)` lies in `D`, with a witness point when it does not.
pub fn is_member<D: Domain>(d: &D, f: &Poly<D::Elem>) -> Result<Membership<D::Elem>> {
    d.is_member(f)
}
