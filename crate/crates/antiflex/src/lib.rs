//! Exact-arithmetic workbench for finite-dimensional nonassociative algebras
//! given by structure constants.

// structure-constant code walks several tensors by shared basis indices;
// iterator rewrites obscure that
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod error;
pub mod identities;
pub mod json;
pub mod linalg;
pub mod nijenhuis;
pub mod omod;
pub mod report;
pub mod rota;
pub mod scalar;
pub mod search;
pub mod symplectic;

pub use algebra::{Algebra, BilinearForm};
pub use error::{Error, Result};
pub use identities::{check_identity, AlgebraIdentity, PreAntiFlexible};
pub use linalg::{LinearMap, Vector};
pub use omod::{Bimodule, LiftVariant, ModuleOperator};
pub use report::{CheckReport, SuiteClaim, SuiteReport, Witness};
pub use rota::WeightedOperator;
pub use scalar::{FieldSpec, Scalar};
