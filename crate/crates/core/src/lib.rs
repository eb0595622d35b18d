//! Exact computation with finite-dimensional superalgebras, aimed at Jordan
//! superalgebras: constructions, identity checking, structure analysis and
//! verification suites.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod analysis;
pub mod construct;
pub mod error;
pub mod exec;
pub mod extend;
pub mod identities;
pub mod json;
pub mod linalg;
pub mod operator;
pub mod scalar;
pub mod verifier;

pub use algebra::{Element, Parity, Superalgebra, TableBuilder};
pub use error::{Error, Result};
pub use exec::Exec;
pub use identities::{Identity, Report, Witness};
pub use operator::Operator;
pub use scalar::{Characteristic, Scalar};
