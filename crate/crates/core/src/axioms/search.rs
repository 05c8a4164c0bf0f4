//! Sequential search over a profile space. Ranges can be searched
//! independently and merged in index order, which keeps the reported witness
//! (lowest profile index) independent of how the space was split.

use alloc::vec::Vec;

use crate::axioms::checker::{Checker, MoveScope};
use crate::axioms::condition::{CondSet, Condition};
use crate::axioms::space::{ProfileSpace, SpaceKind};
use crate::axioms::witness::{Verdict, Witness};
use crate::profile::{default_label, Profile};
use crate::rules::Rule;
use crate::tally::Tally;

/// Largest `(m!)^n` searched exhaustively.
pub const EXHAUSTIVE_CAP: u128 = 10_000_000;

/// Per-condition progress over a range of profile indices.
#[derive(Clone, Debug, PartialEq)]
pub struct CondProgress {
    pub condition: Condition,
    pub first: Option<(u128, Witness)>,
    pub examined: u128,
    pub covered: u128,
    pub multi_choice: u128,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RangeResult {
    pub progress: Vec<CondProgress>,
}

impl RangeResult {
    /// No profiles searched yet.
    pub fn new(conds: CondSet) -> RangeResult {
        RangeResult {
            progress: conds
                .iter()
                .map(|c| CondProgress { condition: c, first: None, examined: 0, covered: 0, multi_choice: 0 })
                .collect(),
        }
    }

    /// Conditions still without a witness.
    pub fn open(&self) -> CondSet {
        self.progress.iter().filter(|p| p.first.is_none()).map(|p| p.condition).collect()
    }

    /// Appends the result of the range that immediately follows this one.
    /// `next` may track a subset of the conditions (those still open when it
    /// was started).
    pub fn merge_next(&mut self, next: RangeResult) {
        for b in next.progress {
            let Some(a) = self.progress.iter_mut().find(|a| a.condition == b.condition) else { continue };
            if a.first.is_some() {
                continue;
            }
            a.examined += b.examined;
            a.covered += b.covered;
            a.multi_choice += b.multi_choice;
            a.first = b.first;
        }
    }

    pub fn into_verdicts(self) -> Vec<Verdict> {
        self.progress
            .into_iter()
            .map(|p| Verdict {
                condition: p.condition,
                witness: p.first.map(|(_, w)| w),
                profiles_examined: p.examined,
                profiles_covered: p.covered,
                multi_choice_profiles: p.multi_choice,
            })
            .collect()
    }
}

/// The space an exhaustive search for `rule` walks: multisets of orders for
/// anonymous rules, every sequence otherwise.
pub fn space_for(rule: Rule, m: usize, n: usize) -> ProfileSpace {
    let kind = if rule.is_anonymous() { SpaceKind::Multiset } else { SpaceKind::Full };
    ProfileSpace::new(m, n, kind)
}

/// Feeds one tallied profile through the checker and records the outcome at
/// `index`. Returns whether any condition is still open.
pub fn record(
    checker: &mut Checker,
    t: &mut Tally,
    index: u128,
    weight: u128,
    res: &mut RangeResult,
    labels: &[alloc::string::String],
) -> bool {
    let open = res.open();
    if open.is_empty() {
        return false;
    }
    let rep = checker.check(t, open);
    for p in res.progress.iter_mut().filter(|p| p.first.is_none()) {
        p.examined += 1;
        p.covered += weight;
        if rep.multi_choice {
            p.multi_choice += 1;
        }
    }
    if !rep.violations.is_empty() {
        let profile = t.to_profile(labels);
        for v in rep.violations {
            if let Some(p) = res.progress.iter_mut().find(|p| p.condition == v.condition) {
                p.first = Some((index, Witness::from_violation(v, profile.clone())));
            }
        }
    }
    !res.open().is_empty()
}

/// Searches profiles `start..end` of `space`.
pub fn search_range(rule: Rule, conds: CondSet, space: &ProfileSpace, start: u128, end: u128, scope: MoveScope) -> RangeResult {
    let mut res = RangeResult::new(conds);
    let end = end.min(space.len());
    if start >= end {
        return res;
    }
    let labels: Vec<_> = (0..space.m()).map(default_label).collect();
    let mut checker = Checker::new(rule, scope);
    let mut t = Tally::with_capacity(space.m(), space.n());
    let mut cur = space.cursor_at(start);
    loop {
        t.load(cur.orders());
        if !record(&mut checker, &mut t, cur.index(), cur.weight(), &mut res, &labels) {
            break;
        }
        if cur.index() + 1 >= end || !cur.advance() {
            break;
        }
    }
    res
}

/// Exhaustive search of the whole space for `rule`.
pub fn search_exhaustive(rule: Rule, conds: CondSet, m: usize, n: usize) -> Vec<Verdict> {
    let space = space_for(rule, m, n);
    search_range(rule, conds, &space, 0, space.len(), MoveScope::Exhaustive).into_verdicts()
}

/// Checks a single profile (presented set = its universe).
pub fn check_profile(rule: Rule, conds: CondSet, profile: &Profile, scope: MoveScope) -> Vec<Verdict> {
    let mut res = RangeResult::new(conds);
    let mut checker = Checker::new(rule, scope);
    let mut t = Tally::new(profile);
    record(&mut checker, &mut t, 0, 1, &mut res, profile.labels());
    res.into_verdicts()
}
