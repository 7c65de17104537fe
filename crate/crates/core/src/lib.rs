//! Partial information decompositions of discrete joint distributions built
//! from any base-concept: redundancy, weak synergy, union information,
//! vulnerable information, their partner measures, or unique information.
//!
//! The crate is organised bottom-up:
//!
//! - [`lattice`]: antichains, parthood distributions, the `α ↔ f` and
//!   `α ↔ f̃` correspondences, the partner mappings and (semi-)lattices with
//!   Moebius inversion.
//! - [`info`]: discrete joint distributions and exact (conditional) mutual
//!   information.
//! - [`concepts`]: the sixteen parthood conditions, per-concept domains,
//!   atom selectors and the reference measure family.
//! - [`engine`]: solving base-concept measures for information atoms,
//!   consistency checks and the proper-synergy rank analysis.

pub mod concepts;
pub mod engine;
pub mod error;
pub mod info;
pub mod lattice;
pub mod random;

pub use concepts::{BaseConcept, MeasureAssignment};
pub use engine::{decompose, Atoms, MeasureSource, PidResult};
pub use error::{PidError, Result};
pub use info::JointDistribution;
pub use lattice::{Antichain, ParthoodDistribution, SourceSet};
