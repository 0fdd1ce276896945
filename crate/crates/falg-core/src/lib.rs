//! Exact-arithmetic toolkit for finite-dimensional F-algebras and their
//! relatives: super F-algebras, modules, Rinehart-style pairs, and desk-scale
//! algebroid models, all represented as structure-constant tensors over the
//! rationals.
//!
//! Everything is checked, never assumed: constructors return raw candidate
//! data and the checkers produce per-axiom reports with exact counterexample
//! witnesses.

pub mod algebra;
pub mod algebroid;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod falgebra;
pub mod linalg;
pub mod modules;
pub mod pairs;
pub mod rat;
pub mod report;
pub mod search;
pub mod superalg;
pub mod tensor;

pub use algebra::{AlgebraData, CoordFrame, Provenance};
pub use error::{FalgError, Result};
pub use linalg::{Matrix, Vector};
pub use rat::Rat;
pub use report::{AxiomCheck, CheckStatus, VerificationReport};
pub use tensor::BilinearTensor;
