//! Exact-arithmetic Hom-algebras over ℚ.
//!
//! A Hom-algebra is `(A, μ, α)` with `α∘μ = μ∘(α⊗α)`. This crate evaluates
//! the Hom-associator, Hom-Jacobian and friends, sweeps the Hom-type
//! identities (Hom-Maltsev, Hom-alternative, Hom-Jordan, Hom-Moufang, ...)
//! over basis tuples, and builds new Hom-algebras by twisting, deriving and
//! symmetrizing.
//!
//! ```
//! use homalg::{catalog, checkers};
//!
//! let oa = catalog::octonions_twisted();
//! assert!(checkers::is_hom_alternative(&oa).holds);
//! assert!(!checkers::is_hom_associative(&oa).holds);
//! ```

pub mod algebra;
pub mod catalog;
pub mod checkers;
pub mod constructions;
pub mod element;
pub mod error;
pub mod format;
pub mod forms;
pub mod laws;
pub mod report;
pub mod scalar;

pub use algebra::{HomAlgebra, StructureTensor};
pub use element::{Element, LinearMap};
pub use error::{AlgebraError, Result};
pub use laws::Law;
pub use report::{CheckReport, CrossCheck, Witness};
pub use scalar::Scalar;
