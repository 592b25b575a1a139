//! Finite quandles built from permutation groups.
//!
//! The crate covers permutation groups (Schreier-Sims chains, blocks,
//! normal closures, coset actions), quandles (axioms, inner and displacement
//! groups, congruences, isomorphism), the constructions linking them
//! (envelopes, conjugation, coset and affine quandles), enumeration of the
//! quandles of a given order from a catalog of transitive groups, and the text
//! formats and CLI around it.

pub mod catalog;
pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod library;
pub mod perm;
pub mod permgrp;
pub mod quandle;

pub use catalog::{CatalogRecord, Flags};
pub use construct::{Envelope, Matrix};
pub use enumerate::{AffineStatus, EnumerationResult, Mode, Options};
pub use error::{AxiomViolation, Error, Result};
pub use perm::Permutation;
pub use permgrp::{BlockSystem, CosetAction, Limits, PermGroup};
pub use quandle::{brute_force_enumerate, Congruence, Invariants, Quandle};
