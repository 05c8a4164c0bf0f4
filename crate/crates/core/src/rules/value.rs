//! Value-function and tournament-count procedures.

use crate::altset::{AltSet, MAX_ALTS};
use crate::relation::{MajorityRelation, TournamentMatrix};
use crate::rules::scoring::{argmax, argmin};
use crate::tally::Tally;

/// Lexicographic minima of `(v_1, ..., v_|x|)`, `v_1` counting worst places.
pub fn threshold(t: &Tally, x: AltSet) -> AltSet {
    let k = x.len();
    let mut best = [u8::MAX; MAX_ALTS];
    let mut out = AltSet::EMPTY;
    for a in x.iter() {
        let v = t.position_counts(a, x);
        match v[..k].cmp(&best[..k]) {
            core::cmp::Ordering::Less => {
                best = v;
                out = AltSet::single(a);
            }
            core::cmp::Ordering::Equal => out.insert(a),
            core::cmp::Ordering::Greater => {}
        }
    }
    out
}

/// `argmax |L(x)| − |D(x)|`.
pub fn copeland_1(rel: &MajorityRelation, x: AltSet) -> AltSet {
    let m = x.len();
    argmax(x, |a| m + rel.lower(a).inter(x).len() - rel.upper(a).inter(x).len())
}

/// `argmax |L(x)|`.
pub fn copeland_2(rel: &MajorityRelation, x: AltSet) -> AltSet {
    argmax(x, |a| rel.lower(a).inter(x).len())
}

/// `argmin |D(x)|`.
pub fn copeland_3(rel: &MajorityRelation, x: AltSet) -> AltSet {
    argmin(x, |a| rel.upper(a).inter(x).len())
}

/// How the super-threshold level `V(X)` is set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Level {
    /// A constant; `None` means `⌈m/2⌉` for the profile's `m`.
    Fixed(Option<f64>),
    /// Mean of `φ` over the presented set.
    Mean,
}

/// Super-threshold configuration. `criterion` is 0-based.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThresholdPolicy {
    pub criterion: usize,
    pub level: Level,
}

impl Default for ThresholdPolicy {
    fn default() -> Self {
        ThresholdPolicy { criterion: 0, level: Level::Fixed(None) }
    }
}

/// `φ(y) = m − position + 1` on the designated criterion of the full profile
/// (best = `m`), independent of the presented set.
#[inline]
pub fn phi(t: &Tally, criterion: usize, y: usize) -> usize {
    t.below(criterion, y).len() + 1
}

/// `{y ∈ x : φ(y) ≥ V(x)}`; may be empty. Panics if the criterion index is
/// out of range (validated at rule construction).
pub fn super_threshold(t: &Tally, x: AltSet, policy: ThresholdPolicy) -> AltSet {
    let c = policy.criterion;
    match policy.level {
        Level::Fixed(level) => {
            let level = level.unwrap_or(t.m().div_ceil(2) as f64);
            AltSet::from_ids(x.iter().filter(|&y| phi(t, c, y) as f64 >= level))
        }
        Level::Mean => {
            let k = x.len();
            let total: usize = x.iter().map(|y| phi(t, c, y)).sum();
            AltSet::from_ids(x.iter().filter(|&y| phi(t, c, y) * k >= total))
        }
    }
}

/// `argmin_a max_{b≠a} n(b,a)`; a lone alternative is chosen.
pub fn minimax(s: &TournamentMatrix, x: AltSet) -> AltSet {
    argmin(x, |a| x.without(a).iter().map(|b| s.get(b, a)).max().unwrap_or(0))
}

/// `argmax_a min_{b≠a} n(a,b)`; a lone alternative is chosen.
pub fn simpson(s: &TournamentMatrix, x: AltSet) -> AltSet {
    argmax(x, |a| x.without(a).iter().map(|b| s.get(a, b)).min().unwrap_or(usize::MAX))
}
