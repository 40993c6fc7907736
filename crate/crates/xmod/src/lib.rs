//! Exact computation with finite crossed structures.
//!
//! This crate represents finite groups by Cayley tables and builds on them:
//!
//! - [`group`]: finite groups, homomorphisms, actions by automorphisms, and
//!   total lifting tables;
//! - [`crossed`]: 2-crossed and 3-crossed modules with exhaustive axiom
//!   verifiers (10 checks resp. 33 checks, see `docs/axioms.md`);
//! - [`simplicial`]: the simplicial operator calculus and the colored
//!   simplicial set attached to a crossed structure, with enumeration
//!   oracles;
//! - [`horns`]: inner-horn filling and desk-scale quasi-category
//!   certification;
//! - [`moore`]: truncated simplicial groups, Moore complexes of length 3,
//!   and the 3-crossed module they induce;
//! - [`from2cm`]: the product construction of a 3-crossed module from a
//!   2-crossed module, plus small feeders;
//! - [`files`]: JSON schemas for every structure the CLI reads or writes.
//!
//! Everything is exact integer arithmetic over element indices; there are no
//! tolerances anywhere. All types are immutable after construction and safe
//! to share across threads.

pub mod crossed;
pub mod files;
pub mod from2cm;
pub mod group;
pub mod horns;
pub mod moore;
pub mod report;
pub mod simplicial;

pub use group::{FiniteGroup, GroupAction, GroupHom, Lifting2, Lifting3};
pub use report::{CheckReport, Violation};
