//! Exact exterior algebra and decomposability criteria for `s`-vectors.
//!
//! * [`exterior`]: sparse multivectors over the rationals, wedge and
//!   interior products, pairings, support spaces.
//! * [`decomposability`]: the simplicity criteria, equation counts, the
//!   duality identity, factorization, and the three-plane lemma.
//! * [`young`]: two-column Young shapes, symmetric-group characters, and
//!   components of `P⊗P`.

pub mod blade;
pub mod decomposability;
pub mod error;
pub mod exterior;
pub mod json;
mod kernel;
pub mod linalg;
pub mod poly;
pub mod random;
pub mod rational;
pub mod young;

#[cfg(test)]
mod testing;

pub use blade::Blade;
pub use decomposability::{CriterionKind, CriterionRegistry, CriterionReport, Witness};
pub use error::{Error, Result};
pub use exterior::{DualMultivector, Multivector};
pub use rational::Rational;
