//! Two-column Young shapes and the components of `P⊗P`.
//!
//! `Y^{a,b}` is the irreducible with column heights `a ≥ b`, i.e. the
//! partition `(2^b, 1^{a−b})`. Dimensions come from the hook-content
//! product; isotypic components are probed with the central character
//! projector; the `Y^{s+2,s−2}` component is enumerated exactly.

mod characters;
mod dims;
mod isotypic;
mod projection;
mod shape;

pub use characters::{class_sign, sym_character};
pub use dims::{dim_y, standard_tableaux_count, verify_star_star, Identity, StarStarReport};
pub use isotypic::{find_nonzero_probe, isotypic_probe, ProbeHit, MAX_PROBE_CELLS};
pub use projection::{
    projection_coefficient, projection_equation_count, young_project_s2_coefficients,
    ProjectionIndex, MAX_PROJECTION_GRADE,
};
pub use shape::{Partition, TwoColumnShape};
