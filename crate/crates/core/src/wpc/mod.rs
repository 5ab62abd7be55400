//! Weak polynomial completeness of finite `Z`-algebras, and the split-prime
//! data of imaginary quadratic fields.

pub mod algebra;
pub mod conditions;
pub mod split;

pub use algebra::{FiniteAlgebra, ResidueAlgebra};
pub use conditions::{
    check_condition_suite, check_wpc_over_z, ConditionSuite, PrimeVerdict, Witness, WpcReport, VERDICT_LABEL,
    WPC_BUDGET,
};
pub use split::{numthm_split_analysis, PrimeSplitting, SplitReport};
