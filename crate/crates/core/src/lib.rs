//! Calabi-Yau objects in the stable module categories of the
//! self-injective Nakayama algebras Lambda(n, t).
//!
//! An object X is Calabi-Yau of dimension d when the Serre functor F and
//! the d-th shift agree on it. Over Lambda(n, t) every functor involved
//! acts by affine maps on the index pairs (i, l) of the uniserial
//! indecomposables S[i,l], so the whole classification is finite
//! combinatorics. The crate keeps three independent computation routes
//! and checks them against each other:
//!
//! - [`classify`]: closed-form families of minimal d-th CY objects and
//!   the category-level classification;
//! - [`orbit`]: brute-force orbit enumeration for the functor
//!   `G = [-d] . F` together with the Auslander-Reiten triangle
//!   characterization;
//! - [`homspace`]: an exact matrix model of the module category, solving
//!   intertwiner systems to verify the Serre-duality dimension identities
//!   the other two routes rely on.
//!
//! [`verify`] drives the cross-checks over parameter grids; [`par`] fans
//! grid work over rayon when the `parallel` feature (default) is enabled
//! and falls back to sequential execution otherwise.

#![forbid(unsafe_code)]
// `len` on module types is the Loewy length, not a collection size.
#![allow(clippy::len_without_is_empty)]

pub mod algebra;
pub mod classify;
pub mod error;
pub mod homspace;
pub mod orbit;
pub mod par;
pub mod verify;

pub use algebra::{
    relative_order, Algebra, ArrowFunctor, ArrowKind, IndecModule, IrreducibleMap, StableObject,
};
pub use classify::{
    category_report, cy_dimension, cy_params, indecomposable_cy_report, is_d_cy,
    minimal_cy_modules, normalize_degree, CaseTag, CategoryReport, ClassificationResult, CyParams,
    HalfInt,
};
pub use error::{Error, Result};
pub use homspace::{
    cy_dim_symmetry_check, hom_dim, irreducible_map_census, matrix_rep, serre_duality_check,
    stable_hom, stable_hom_mod_p, HomReport, MatrixRep, StableHomTable,
};
pub use orbit::{
    all_orbits, ar_triangle_check, ar_triangle_shape, check_minimality, middle_term_cy_check,
    minimal_cy_from_orbits, orbit, ArTriangleShape, OrbitRecord,
};
