//! Multi-criteria choice procedures over profiles of linear orders, and
//! exhaustive/sampled checkers for the normative conditions they satisfy.
//!
//! Every rule is evaluated as `C(P_X, X)`: a [`Tally`] of the full profile
//! plus the presented subset `X` as an [`AltSet`].
#![no_std]

extern crate alloc;

pub mod altset;
pub mod profile;
pub mod relation;
pub mod rules;
pub mod tally;

pub use altset::{AltSet, MAX_ALTS, MAX_CRITERIA};
pub use profile::{LinearOrder, Profile, ProfileError};
pub use relation::{MajorityRelation, RelationError, TournamentMatrix};
pub use rules::{Rule, RuleError, RuleParams};
pub use tally::{PositionStats, Tally};
pub mod axioms;
pub mod mcgarvey;
