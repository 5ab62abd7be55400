use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient field mismatch: {0}")]
    FieldMismatch(String),

    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// `Π_q` has no generator; `class` names the obstruction.
    #[error("Π_{q} is not principal ({class})")]
    NotPrincipal { q: u64, class: String },

    #[error("discriminant {0} is not fundamental")]
    NonFundamental(BigInt),

    #[error("discriminant {disc} exceeds the class-group cap {cap}")]
    DiscriminantTooLarge { disc: BigInt, cap: u64 },

    #[error("enumeration budget exceeded: {needed} residues requested, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },

    #[error("inconsistent algebra: {0}")]
    InvalidAlgebra(String),

    /// An identity that must hold did not; carries the diagnostics.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
