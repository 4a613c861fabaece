//! Finite partial group actions on finite sets.
//!
//! A partial action gives each group element g a subset D_g of a carrier
//! set and a bijection α_g : D_{g⁻¹} → D_g, subject to identity, domain
//! intertwining and composition axioms. This crate represents such
//! actions, validates the axioms exhaustively with minimal witnesses,
//! computes the per-point combinatorics (partial orbits, stabilizers, the
//! sets G^x of elements defined at x, coset spaces G^x/G_x and partial
//! transversals), mechanically verifies the orbit-stabilizer identity
//! |O_x| = |G^x| / |G_x| through an explicit partial G-isomorphism,
//! predicts global orbit sizes via |O_x| = |O_x^α| + |Ḡ^x| / |G_x|, and
//! constructs the enveloping global action as a verified quotient of
//! G × X, cross-checked against the predictions and Burnside's orbit
//! count.
//!
//! Everything is exact, index-based and deterministic; labels are
//! display-only. All types are immutable after construction and safe to
//! share across threads.

// Table arithmetic reads better with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod action;
pub mod error;
pub mod global;
pub mod globalize;
pub mod group;
pub mod orbit;
pub mod report;
pub mod sample;

pub use action::{restrict_global, FiniteSet, PartialAction, PartialOrbitReport, SparseEntry};
pub use error::{ActionError, Error, GroupError};
pub use global::GlobalAction;
pub use globalize::{
    actions_isomorphic, globalize, globalize_with_cap, verify_globalization, Globalization,
    DEFAULT_SIZE_CAP,
};
pub use group::{Coset, Group, Subgroup};
pub use orbit::{
    burnside_orbit_count, coset_space, global_orbit_size, induced_coset_action,
    orbit_stabilizer_iso, CosetSpace, GMapReport, InducedCosetAction, PartialGMap,
};
pub use report::{Check, ValidationReport};
