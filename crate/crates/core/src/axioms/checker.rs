//! Per-profile evaluation of the conditions.

use alloc::vec;
use alloc::vec::Vec;

use crate::altset::AltSet;
use crate::axioms::condition::{CondSet, Condition};
use crate::profile::LinearOrder;
use crate::rules::{value, Rule};
use crate::tally::Tally;

/// Which improvement moves Mon1 and SM try.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveScope {
    /// For use when every profile of the space is visited. Mon1 tries each
    /// one-place raise of the chosen alternative: any composite improvement
    /// that loses it contains a one-place step that does, and that step starts
    /// from another profile of the space. SM tries every composite
    /// improvement, since it has no such chain property.
    Exhaustive,
    /// For sampled spaces: both conditions try raises of any height within a
    /// single criterion.
    SingleCriterion,
}

/// A violation found on one profile, before it is turned into a witness.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub condition: Condition,
    pub subsets: Vec<AltSet>,
    pub target: Option<usize>,
    pub transformed: Option<Vec<LinearOrder>>,
    pub choices: Vec<(&'static str, AltSet)>,
}

/// Outcome of checking one profile.
#[derive(Clone, Debug, Default)]
pub struct ProfileReport {
    pub violations: Vec<Violation>,
    /// `|C(P, A)| ≥ 2`, i.e. Mon2 was not vacuous on this profile.
    pub multi_choice: bool,
}

/// Evaluates one rule on profile after profile, reusing its buffers.
pub struct Checker {
    rule: Rule,
    scope: MoveScope,
    table: Vec<AltSet>,
}

impl Checker {
    pub fn new(rule: Rule, scope: MoveScope) -> Checker {
        Checker { rule, scope, table: Vec::new() }
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    /// Checks `conds` on the tallied profile. The tally is mutated during move
    /// search and restored before returning. At most one violation per
    /// condition is reported.
    pub fn check(&mut self, t: &mut Tally, conds: CondSet) -> ProfileReport {
        let mut rep = ProfileReport::default();
        let m = t.m();
        let u = t.universe();
        let needs_table = conds.iter().any(Condition::is_set_condition);
        if needs_table {
            self.table.clear();
            self.table.resize(1 << m, AltSet::EMPTY);
            for mask in 1..(1u32 << m) {
                self.table[mask as usize] = self.rule.choose(t, AltSet(mask as u16));
            }
        }
        let cu = if needs_table { self.table[u.0 as usize] } else { self.rule.choose(t, u) };
        rep.multi_choice = cu.len() >= 2;
        let table = &self.table;
        let c = |x: AltSet| table[x.0 as usize];
        for cond in conds.iter() {
            let v = match cond {
                Condition::Heredity => heredity(u, &c),
                Condition::Concordance => concordance(u, &c),
                Condition::Outcast => outcast(u, &c),
                Condition::Aca => aca(u, &c),
                Condition::Mon2 => mon2(u, &c),
                Condition::NonCompensatory => {
                    let v = value::threshold(t, u);
                    (v != cu).then(|| Violation {
                        condition: cond,
                        subsets: vec![],
                        target: None,
                        transformed: None,
                        choices: vec![("C(A)", cu), ("threshold(A)", v)],
                    })
                }
                Condition::Mon1 => self.mon1(t, cu),
                Condition::StrictMon => self.strict_mon(t, cu),
            };
            if let Some(v) = v {
                rep.violations.push(v);
            }
        }
        rep
    }

    fn mon1(&self, t: &mut Tally, cu: AltSet) -> Option<Violation> {
        let u = t.universe();
        for x in cu.iter() {
            for i in 0..t.n() {
                let p = t.position(i, x);
                let top = match self.scope {
                    MoveScope::Exhaustive => p.saturating_sub(1),
                    MoveScope::SingleCriterion => 0,
                };
                let mut hit = None;
                let mut moved = 0;
                while t.position(i, x) > top {
                    t.swap_up(i, t.position(i, x));
                    moved += 1;
                    let c2 = self.rule.choose(t, u);
                    if !c2.contains(x) {
                        hit = Some(Violation {
                            condition: Condition::Mon1,
                            subsets: vec![],
                            target: Some(x),
                            transformed: Some(t.orders()),
                            choices: vec![("C(P)", cu), ("C(P')", c2)],
                        });
                        break;
                    }
                }
                t.lower(i, x, moved);
                if hit.is_some() {
                    return hit;
                }
            }
        }
        None
    }

    fn strict_mon(&self, t: &mut Tally, cu: AltSet) -> Option<Violation> {
        let u = t.universe();
        for y in u.minus(cu).iter() {
            let allowed = [cu, AltSet::single(y), cu.with(y)];
            let hit = match self.scope {
                MoveScope::Exhaustive => self.sm_composite(t, y, 0, false, &allowed),
                MoveScope::SingleCriterion => {
                    let mut hit = None;
                    for i in 0..t.n() {
                        let mut moved = 0;
                        while t.position(i, y) > 0 {
                            t.swap_up(i, t.position(i, y));
                            moved += 1;
                            let c2 = self.rule.choose(t, u);
                            if !allowed.contains(&c2) {
                                hit = Some((t.orders(), c2));
                                break;
                            }
                        }
                        t.lower(i, y, moved);
                        if hit.is_some() {
                            break;
                        }
                    }
                    hit
                }
            };
            if let Some((orders, c2)) = hit {
                return Some(Violation {
                    condition: Condition::StrictMon,
                    subsets: vec![],
                    target: Some(y),
                    transformed: Some(orders),
                    choices: vec![("C(P)", cu), ("C(P')", c2)],
                });
            }
        }
        None
    }

    /// Depth-first over criteria `i..n`, raising `y` by every feasible amount.
    fn sm_composite(
        &self,
        t: &mut Tally,
        y: usize,
        i: usize,
        moved: bool,
        allowed: &[AltSet; 3],
    ) -> Option<(Vec<LinearOrder>, AltSet)> {
        if i == t.n() {
            if !moved {
                return None;
            }
            let c2 = self.rule.choose(t, t.universe());
            return (!allowed.contains(&c2)).then(|| (t.orders(), c2));
        }
        if let Some(hit) = self.sm_composite(t, y, i + 1, moved, allowed) {
            return Some(hit);
        }
        let mut steps = 0;
        let mut hit = None;
        while t.position(i, y) > 0 {
            t.swap_up(i, t.position(i, y));
            steps += 1;
            hit = self.sm_composite(t, y, i + 1, true, allowed);
            if hit.is_some() {
                break;
            }
        }
        t.lower(i, y, steps);
        hit
    }
}

fn violation(cond: Condition, subsets: Vec<AltSet>, choices: Vec<(&'static str, AltSet)>) -> Option<Violation> {
    Some(Violation { condition: cond, subsets, target: None, transformed: None, choices })
}

/// `X' ⊆ X ⇒ C(X') ⊇ C(X) ∩ X'`.
fn heredity(u: AltSet, c: &impl Fn(AltSet) -> AltSet) -> Option<Violation> {
    for x in u.subsets() {
        let cx = c(x);
        if cx.is_empty() {
            continue;
        }
        for x2 in x.subsets() {
            let kept = cx.inter(x2);
            if !kept.is_empty() && !kept.is_subset(c(x2)) {
                return violation(Condition::Heredity, vec![x, x2], vec![("C(X)", cx), ("C(X')", c(x2))]);
            }
        }
    }
    None
}

/// `C(X' ∪ X'') ⊇ C(X') ∩ C(X'')`.
fn concordance(u: AltSet, c: &impl Fn(AltSet) -> AltSet) -> Option<Violation> {
    for x1 in u.subsets() {
        let c1 = c(x1);
        if c1.is_empty() {
            continue;
        }
        for x2 in u.subsets() {
            let both = c1.inter(c(x2));
            let cu = c(x1.union(x2));
            if !both.is_subset(cu) {
                return violation(
                    Condition::Concordance,
                    vec![x1, x2],
                    vec![("C(X')", c1), ("C(X'')", c(x2)), ("C(X' ∪ X'')", cu)],
                );
            }
        }
    }
    None
}

/// `X' ⊆ X \ C(X) ⇒ C(X \ X') = C(X)`.
fn outcast(u: AltSet, c: &impl Fn(AltSet) -> AltSet) -> Option<Violation> {
    for x in u.subsets() {
        let cx = c(x);
        for out in x.minus(cx).subsets() {
            if out == x {
                continue;
            }
            let rest = x.minus(out);
            if c(rest) != cx {
                return violation(Condition::Outcast, vec![x, out], vec![("C(X)", cx), ("C(X \\ X')", c(rest))]);
            }
        }
    }
    None
}

/// Emptiness propagates to subsets; otherwise `C(X') = C(X) ∩ X'` whenever
/// the intersection is non-empty.
fn aca(u: AltSet, c: &impl Fn(AltSet) -> AltSet) -> Option<Violation> {
    for x in u.subsets() {
        let cx = c(x);
        for x2 in x.subsets() {
            let c2 = c(x2);
            let kept = cx.inter(x2);
            let bad = if cx.is_empty() { !c2.is_empty() } else { !kept.is_empty() && c2 != kept };
            if bad {
                return violation(Condition::Aca, vec![x, x2], vec![("C(X)", cx), ("C(X')", c2)]);
            }
        }
    }
    None
}

/// For chosen `x ≠ y`: `x ∈ C(X \ {y})`.
fn mon2(u: AltSet, c: &impl Fn(AltSet) -> AltSet) -> Option<Violation> {
    for x in u.subsets() {
        let cx = c(x);
        if cx.len() < 2 {
            continue;
        }
        for y in cx.iter() {
            let c2 = c(x.without(y));
            if let Some(a) = cx.without(y).minus(c2).first() {
                return Some(Violation {
                    condition: Condition::Mon2,
                    subsets: vec![x, AltSet::single(y)],
                    target: Some(a),
                    transformed: None,
                    choices: vec![("C(X)", cx), ("C(X \\ {y})", c2)],
                });
            }
        }
    }
    None
}
