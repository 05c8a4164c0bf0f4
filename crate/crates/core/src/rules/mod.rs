//! The 28 choice procedures behind a single [`Rule`] descriptor.

pub mod majority;
pub mod scoring;
pub mod value;

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use crate::altset::AltSet;
use crate::relation::MajorityRelation;
use crate::tally::Tally;

pub use majority::{Minimality, SetFamily};
pub use scoring::{EliminationTrace, Round};
pub use value::{Level, ThresholdPolicy};

pub const DEFAULT_Q: usize = 2;
pub const DEFAULT_K: usize = 2;

/// A choice procedure together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Rule {
    SimpleMajority,
    Plurality,
    InversePlurality,
    QApproval(usize),
    RunOff,
    Hare,
    Borda,
    Black,
    InverseBorda,
    Nanson,
    Coombs,
    MinimalDominant,
    MinimalUndominated,
    MinimalWeaklyStable,
    Fishburn,
    Uncovered1,
    Uncovered2,
    Richelson,
    Condorcet,
    Core,
    KStable(usize),
    Threshold,
    Copeland1,
    Copeland2,
    Copeland3,
    SuperThreshold(ThresholdPolicy),
    Minimax,
    Simpson,
}

/// Canonical identifiers in table order.
pub const RULE_IDS: [&str; 28] = [
    "simple-majority",
    "plurality",
    "inverse-plurality",
    "q-approval",
    "run-off",
    "hare",
    "borda",
    "black",
    "inverse-borda",
    "nanson",
    "coombs",
    "minimal-dominant",
    "minimal-undominated",
    "minimal-weakly-stable",
    "fishburn",
    "uncovered-1",
    "uncovered-2",
    "richelson",
    "condorcet",
    "core",
    "k-stable",
    "threshold",
    "copeland-1",
    "copeland-2",
    "copeland-3",
    "super-threshold",
    "minimax",
    "simpson",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleError {
    UnknownRule(String),
    /// A parameter was given to a rule that does not take it.
    UnexpectedParameter { rule: &'static str, param: &'static str },
    InvalidParameter(String),
}

impl fmt::Display for RuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleError::UnknownRule(id) => write!(f, "unknown rule `{id}`"),
            RuleError::UnexpectedParameter { rule, param } => {
                write!(f, "rule `{rule}` does not take parameter `{param}`")
            }
            RuleError::InvalidParameter(msg) => f.write_str(msg),
        }
    }
}

/// Optional parameters accepted by [`Rule::from_id`].
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct RuleParams {
    pub q: Option<usize>,
    pub k: Option<usize>,
    /// 0-based criterion for super-threshold.
    pub criterion: Option<usize>,
    pub level: Option<Level>,
}

impl Rule {
    pub fn from_id(id: &str, p: RuleParams) -> Result<Rule, RuleError> {
        let pos = RULE_IDS.iter().position(|&r| r == id).ok_or_else(|| RuleError::UnknownRule(id.to_string()))?;
        let rid = RULE_IDS[pos];
        let reject = |given: bool, param| if given { Err(RuleError::UnexpectedParameter { rule: rid, param }) } else { Ok(()) };
        if id != "q-approval" {
            reject(p.q.is_some(), "q")?;
        }
        if id != "k-stable" {
            reject(p.k.is_some(), "k")?;
        }
        if id != "super-threshold" {
            reject(p.criterion.is_some(), "criterion")?;
            reject(p.level.is_some(), "level")?;
        }
        Ok(match id {
            "simple-majority" => Rule::SimpleMajority,
            "plurality" => Rule::Plurality,
            "inverse-plurality" => Rule::InversePlurality,
            "q-approval" => {
                let q = p.q.unwrap_or(DEFAULT_Q);
                if q == 0 {
                    return Err(RuleError::InvalidParameter("q must be at least 1".into()));
                }
                Rule::QApproval(q)
            }
            "run-off" => Rule::RunOff,
            "hare" => Rule::Hare,
            "borda" => Rule::Borda,
            "black" => Rule::Black,
            "inverse-borda" => Rule::InverseBorda,
            "nanson" => Rule::Nanson,
            "coombs" => Rule::Coombs,
            "minimal-dominant" => Rule::MinimalDominant,
            "minimal-undominated" => Rule::MinimalUndominated,
            "minimal-weakly-stable" => Rule::MinimalWeaklyStable,
            "fishburn" => Rule::Fishburn,
            "uncovered-1" => Rule::Uncovered1,
            "uncovered-2" => Rule::Uncovered2,
            "richelson" => Rule::Richelson,
            "condorcet" => Rule::Condorcet,
            "core" => Rule::Core,
            "k-stable" => {
                let k = p.k.unwrap_or(DEFAULT_K);
                if k == 0 {
                    return Err(RuleError::InvalidParameter("k must be at least 1".into()));
                }
                Rule::KStable(k)
            }
            "threshold" => Rule::Threshold,
            "copeland-1" => Rule::Copeland1,
            "copeland-2" => Rule::Copeland2,
            "copeland-3" => Rule::Copeland3,
            "super-threshold" => Rule::SuperThreshold(ThresholdPolicy {
                criterion: p.criterion.unwrap_or(0),
                level: p.level.unwrap_or(Level::Fixed(None)),
            }),
            "minimax" => Rule::Minimax,
            "simpson" => Rule::Simpson,
            _ => unreachable!(),
        })
    }

    pub fn id(&self) -> &'static str {
        RULE_IDS[self.index()]
    }

    /// Position in [`RULE_IDS`].
    pub fn index(&self) -> usize {
        match self {
            Rule::SimpleMajority => 0,
            Rule::Plurality => 1,
            Rule::InversePlurality => 2,
            Rule::QApproval(_) => 3,
            Rule::RunOff => 4,
            Rule::Hare => 5,
            Rule::Borda => 6,
            Rule::Black => 7,
            Rule::InverseBorda => 8,
            Rule::Nanson => 9,
            Rule::Coombs => 10,
            Rule::MinimalDominant => 11,
            Rule::MinimalUndominated => 12,
            Rule::MinimalWeaklyStable => 13,
            Rule::Fishburn => 14,
            Rule::Uncovered1 => 15,
            Rule::Uncovered2 => 16,
            Rule::Richelson => 17,
            Rule::Condorcet => 18,
            Rule::Core => 19,
            Rule::KStable(_) => 20,
            Rule::Threshold => 21,
            Rule::Copeland1 => 22,
            Rule::Copeland2 => 23,
            Rule::Copeland3 => 24,
            Rule::SuperThreshold(_) => 25,
            Rule::Minimax => 26,
            Rule::Simpson => 27,
        }
    }

    /// Identifier with parameters, e.g. `q-approval(q=2)`.
    pub fn describe(&self) -> String {
        match self {
            Rule::QApproval(q) => format!("q-approval(q={q})"),
            Rule::KStable(k) => format!("k-stable(k={k})"),
            Rule::SuperThreshold(p) => match p.level {
                Level::Fixed(Some(l)) => format!("super-threshold(criterion={}, level={l})", p.criterion + 1),
                Level::Fixed(None) => format!("super-threshold(criterion={}, level=ceil(m/2))", p.criterion + 1),
                Level::Mean => format!("super-threshold(criterion={}, level=mean)", p.criterion + 1),
            },
            r => r.id().to_string(),
        }
    }

    /// Whether permuting criteria can never change the outcome.
    pub fn is_anonymous(&self) -> bool {
        !matches!(self, Rule::SuperThreshold(_))
    }

    /// Whether the rule depends on the profile only through `μ`.
    pub fn uses_relation_only(&self) -> bool {
        matches!(self.index(), 11..=20 | 22..=24)
    }

    /// Checks parameters against a profile shape.
    pub fn validate(&self, _m: usize, n: usize) -> Result<(), RuleError> {
        if let Rule::SuperThreshold(p) = self {
            if p.criterion >= n {
                return Err(RuleError::InvalidParameter(format!(
                    "criterion {} is out of range for {n} criteria",
                    p.criterion + 1
                )));
            }
        }
        Ok(())
    }

    /// `C(P_X, X)` for the presented set `x` of the tallied profile.
    #[inline]
    pub fn choose(&self, t: &Tally, x: AltSet) -> AltSet {
        if let Some(c) = self.choose_on_relation(t.relation(), x) {
            return c;
        }
        match *self {
            Rule::SimpleMajority => scoring::simple_majority(t, x),
            Rule::Plurality => scoring::plurality(t, x),
            Rule::InversePlurality => scoring::inverse_plurality(t, x),
            Rule::QApproval(q) => scoring::q_approval(t, x, q),
            Rule::RunOff => scoring::run_off(t, x, None),
            Rule::Hare => scoring::hare(t, x, None),
            Rule::Borda => scoring::borda(t, x),
            Rule::Black => scoring::black(t, x),
            Rule::InverseBorda => scoring::inverse_borda(t, x, None),
            Rule::Nanson => scoring::nanson(t, x, None),
            Rule::Coombs => scoring::coombs(t, x, None),
            Rule::Threshold => value::threshold(t, x),
            Rule::SuperThreshold(p) => value::super_threshold(t, x, p),
            Rule::Minimax => value::minimax(t.matrix(), x),
            Rule::Simpson => value::simpson(t.matrix(), x),
            _ => unreachable!("relation rules handled above"),
        }
    }

    /// Like [`Rule::choose`], also returning the elimination trace for
    /// run-off, Hare, Coombs, inverse Borda and Nanson.
    pub fn choose_traced(&self, t: &Tally, x: AltSet) -> (AltSet, Option<EliminationTrace>) {
        let mut tr = EliminationTrace::default();
        let c = match self {
            Rule::RunOff => scoring::run_off(t, x, Some(&mut tr)),
            Rule::Hare => scoring::hare(t, x, Some(&mut tr)),
            Rule::Coombs => scoring::coombs(t, x, Some(&mut tr)),
            Rule::InverseBorda => scoring::inverse_borda(t, x, Some(&mut tr)),
            Rule::Nanson => scoring::nanson(t, x, Some(&mut tr)),
            _ => return (self.choose(t, x), None),
        };
        (c, Some(tr))
    }

    /// Evaluates relation-only rules directly on `μ`; `None` for the rest.
    #[inline]
    pub fn choose_on_relation(&self, rel: &MajorityRelation, x: AltSet) -> Option<AltSet> {
        Some(match *self {
            Rule::MinimalDominant => majority::minimal_dominant(rel, x),
            Rule::MinimalUndominated => majority::minimal_undominated(rel, x),
            Rule::MinimalWeaklyStable => majority::minimal_weakly_stable(rel, x),
            Rule::Fishburn => majority::fishburn(rel, x),
            Rule::Uncovered1 => majority::uncovered_1(rel, x),
            Rule::Uncovered2 => majority::uncovered_2(rel, x),
            Rule::Richelson => majority::richelson(rel, x),
            Rule::Condorcet => majority::condorcet(rel, x),
            Rule::Core => majority::core(rel, x),
            Rule::KStable(k) => majority::k_stable(rel, x, k),
            Rule::Copeland1 => value::copeland_1(rel, x),
            Rule::Copeland2 => value::copeland_2(rel, x),
            Rule::Copeland3 => value::copeland_3(rel, x),
            _ => return None,
        })
    }

    /// The minimal-set family behind the set-union rules.
    pub fn set_family(&self, rel: &MajorityRelation, x: AltSet) -> Option<SetFamily> {
        Some(match *self {
            Rule::MinimalDominant => {
                majority::minimal_family(x, Minimality::Inclusion, |q| majority::is_dominant(rel, x, q))
            }
            Rule::MinimalUndominated => {
                majority::minimal_family(x, Minimality::Inclusion, |q| majority::is_undominated(rel, x, q))
            }
            Rule::MinimalWeaklyStable => {
                majority::minimal_family(x, Minimality::Cardinality, |q| majority::is_k_stable(rel, x, q, 1))
            }
            Rule::KStable(k) => {
                majority::minimal_family(x, Minimality::Cardinality, |q| majority::is_k_stable(rel, x, q, k))
            }
            _ => return None,
        })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}
