//! Checkers for the eight normative conditions.

pub mod checker;
pub mod condition;
pub mod search;
pub mod space;
pub mod table2;
pub mod witness;

pub use checker::{Checker, MoveScope, ProfileReport, Violation};
pub use condition::{CondSet, Condition};
pub use search::{check_profile, search_exhaustive, search_range, space_for, RangeResult, EXHAUSTIVE_CAP};
pub use space::{ProfileSpace, SpaceKind};
pub use table2::{Row, TABLE2};
pub use witness::{is_improvement, literal_choice, Verdict, Witness};
