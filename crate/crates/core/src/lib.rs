//! Octonions, split octonions, and the octonionic form of the vacuum
//! Maxwell equations.
//!
//! The crate implements both algebras from one signed multiplication
//! table, expands `∂F` symbolically and numerically, and computes the
//! derivation algebra of each table by exact linear algebra.

pub mod algebra;
pub mod cli;
pub mod derivation;
pub mod error;
pub mod identities;
pub mod linalg;
pub mod numeric;
pub mod report;
pub mod symbolic;
pub mod tolerances;

pub use algebra::{
    associator, conjugate, multiply, norm_form, signature, AlgebraKind, Octonion, Rational, Scalar,
    StructureTable,
};
pub use error::{Error, Result};
