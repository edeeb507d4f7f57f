//! Restricted filiform Lie algebras m₂^λ(p) over GF(p) and GF(p²): the
//! algebras themselves, their ordinary and restricted cohomology in degrees
//! 1 and 2, and their one-dimensional restricted central extensions.

pub mod algebra;
pub mod cli;
pub mod cochain;
pub mod cohomology;
pub mod error;
pub mod extensions;
pub mod field;
pub mod linalg;
pub mod restricted;

pub use algebra::{make_m2, LambdaVector, LieElement, RestrictedLieAlgebra};
pub use error::{AlgebraError, CohomologyError, ExtensionError, FieldError, LinalgError};
pub use field::{Fe, Field, QuadraticModulus};
