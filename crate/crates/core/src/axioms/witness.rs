use alloc::string::String;
use alloc::vec::Vec;

use crate::altset::AltSet;
use crate::axioms::checker::Violation;
use crate::axioms::condition::Condition;
use crate::profile::Profile;
use crate::rules::{value, Rule};
use crate::tally::Tally;

/// A concrete counterexample: the profile, the presented subsets or the
/// improved profile involved, and the choices observed.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub condition: Condition,
    pub profile: Profile,
    /// `[X, X']` for H/O/ACA (O: `X'` is the removed part), `[X', X'']` for C,
    /// `[X, {y}]` for Mon2; empty for the profile-level conditions.
    pub subsets: Vec<AltSet>,
    /// Improved profile for Mon1/SM.
    pub transformed: Option<Profile>,
    /// The alternative that was improved (Mon1/SM) or dropped (Mon2).
    pub target: Option<usize>,
    pub choices: Vec<(&'static str, AltSet)>,
}

impl Witness {
    pub fn from_violation(v: Violation, profile: Profile) -> Witness {
        let transformed = v.transformed.map(|o| Profile::new(profile.labels().to_vec(), o).expect("same universe"));
        Witness {
            condition: v.condition,
            profile,
            subsets: v.subsets,
            transformed,
            target: v.target,
            choices: v.choices,
        }
    }

    /// Re-derives the violation from the definitions: every choice is
    /// recomputed on an explicitly contracted profile with a fresh tally, and
    /// improvement moves are validated pairwise. Returns a reason on failure.
    pub fn replay(&self, rule: Rule) -> Result<(), String> {
        let p = &self.profile;
        let lit = |s: AltSet| literal_choice(rule, p, s);
        let sub = |i: usize| self.subsets.get(i).copied().ok_or_else(|| String::from("missing subset"));
        let u = p.universe();
        let ok = match self.condition {
            Condition::Heredity => {
                let (x, x2) = (sub(0)?, sub(1)?);
                x2.is_subset(x) && !lit(x).inter(x2).is_subset(lit(x2))
            }
            Condition::Concordance => {
                let (x1, x2) = (sub(0)?, sub(1)?);
                !lit(x1).inter(lit(x2)).is_subset(lit(x1.union(x2)))
            }
            Condition::Outcast => {
                let (x, out) = (sub(0)?, sub(1)?);
                let cx = lit(x);
                out.is_subset(x.minus(cx)) && out != x && lit(x.minus(out)) != cx
            }
            Condition::Aca => {
                let (x, x2) = (sub(0)?, sub(1)?);
                let (cx, c2) = (lit(x), lit(x2));
                let kept = cx.inter(x2);
                x2.is_subset(x) && if cx.is_empty() { !c2.is_empty() } else { !kept.is_empty() && c2 != kept }
            }
            Condition::Mon2 => {
                let (x, ys) = (sub(0)?, sub(1)?);
                let (y, a) = (ys.first().ok_or("empty {y}")?, self.target.ok_or("missing target")?);
                let cx = lit(x);
                a != y && cx.contains(a) && cx.contains(y) && !lit(x.without(y)).contains(a)
            }
            Condition::NonCompensatory => lit(u) != value::threshold(&Tally::new(p), u),
            Condition::Mon1 | Condition::StrictMon => {
                let q = self.transformed.as_ref().ok_or("missing improved profile")?;
                let x = self.target.ok_or("missing target")?;
                if !is_improvement(p, q, x) {
                    return Err(String::from("transformed profile is not an improvement of the target"));
                }
                let (c1, c2) = (lit(u), literal_choice(rule, q, u));
                if self.condition == Condition::Mon1 {
                    c1.contains(x) && !c2.contains(x)
                } else {
                    !c1.contains(x) && c2 != c1 && c2 != AltSet::single(x) && c2 != c1.with(x)
                }
            }
        };
        if ok {
            Ok(())
        } else {
            Err(String::from("replay did not reproduce the violation"))
        }
    }
}

/// `C(P_S, S)` computed on the materialized contraction, reported in the ids
/// of `p`. Super-threshold reads `φ` from the full profile by design, so it is
/// evaluated against the ambient tally instead.
pub fn literal_choice(rule: Rule, p: &Profile, s: AltSet) -> AltSet {
    if let Rule::SuperThreshold(_) = rule {
        return rule.choose(&Tally::new(p), s);
    }
    let sub = p.contract(s).expect("subset of the universe");
    let t = Tally::new(&sub);
    let members: Vec<usize> = s.iter().collect();
    AltSet::from_ids(rule.choose(&t, sub.universe()).iter().map(|k| members[k]))
}

/// `q` improves `x` relative to `p`: pairs without `x` keep their order, `x`
/// never drops below anything it beat, and it passes at least one alternative.
pub fn is_improvement(p: &Profile, q: &Profile, x: usize) -> bool {
    if p.m() != q.m() || p.n() != q.n() {
        return false;
    }
    let m = p.m();
    let mut strict = false;
    for (a, b) in p.orders().iter().zip(q.orders()) {
        for u in 0..m {
            for v in 0..m {
                if u == v {
                    continue;
                }
                let before = a.prefers(u, v);
                let after = b.prefers(u, v);
                if u != x && v != x && before != after {
                    return false;
                }
                if u == x && before && !after {
                    return false;
                }
                if u == x && !before && after {
                    strict = true;
                }
            }
        }
    }
    strict
}

/// Search outcome for one condition.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub condition: Condition,
    pub witness: Option<Witness>,
    /// Profiles visited for this condition (listed representatives).
    pub profiles_examined: u128,
    /// Full-space profiles those representatives stand for.
    pub profiles_covered: u128,
    /// Profiles with at least two chosen alternatives (Mon2 applicability).
    pub multi_choice_profiles: u128,
}

impl Verdict {
    pub fn violated(&self) -> bool {
        self.witness.is_some()
    }

    /// Mon2 held only because no profile ever chose two alternatives.
    pub fn vacuous(&self) -> bool {
        self.condition == Condition::Mon2 && !self.violated() && self.multi_choice_profiles == 0
    }
}
