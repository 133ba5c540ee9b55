//! Exact computation of projective embedding degrees of finite groups.
//!
//! The library materializes finite p-groups from power-commutator
//! presentations, computes exact character tables over cyclotomic integers,
//! and derives the minimal degrees tau(G) and tau_irr(G) of faithful
//! (irreducible) complex projective representations from covering-group
//! data. A built-in catalog and verification harness reproduce the known
//! closed-form values for abelian, extraspecial, Heisenberg and small
//! p-power-order groups.

pub mod catalog;
pub mod chartab;
pub mod closed_forms;
pub mod config;
pub mod covering;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod presentation;
pub mod report;
pub mod snf;
pub mod tau;
pub mod verify;
pub mod word;

pub use config::Config;
pub use covering::Covering;
pub use error::{Error, Result};
pub use group::Group;
pub use presentation::{CoveringSpec, PcPresentation};
pub use tau::{TauKind, TauReport};
pub use word::NormalWord;
