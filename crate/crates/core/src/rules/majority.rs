//! Procedures defined through the majority relation `μ` restricted to the
//! presented set. All take the relation directly, so `μ` fixtures given as
//! matrices replay without a profile.

use alloc::vec::Vec;

use crate::altset::{AltSet, MAX_ALTS};
use crate::relation::MajorityRelation;

/// How "minimal" is read when a rule chooses the union of minimal sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Minimality {
    /// No proper subset qualifies.
    Inclusion,
    /// No qualifying set is smaller.
    Cardinality,
}

/// The minimal qualifying subsets of a presented set and their union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    pub minimal_sets: Vec<AltSet>,
    pub union: AltSet,
}

const MAX_ANTICHAIN: usize = 924; // C(12, 6)

/// Enumerates subsets of `x` by increasing size and collects the minimal ones
/// satisfying `pred`. Supersets of an already found set are skipped, which is
/// exact for inclusion-minimality because every qualifying set contains a
/// minimal one of smaller or equal size.
fn scan_minimal(x: AltSet, mode: Minimality, pred: impl Fn(AltSet) -> bool, mut found: impl FnMut(AltSet)) {
    let mut members = [0usize; MAX_ALTS];
    let k = x.len();
    for (i, a) in x.iter().enumerate() {
        members[i] = a;
    }
    let expand = |local: u32| {
        let mut s = AltSet::EMPTY;
        let mut b = local;
        while b != 0 {
            s.insert(members[b.trailing_zeros() as usize]);
            b &= b - 1;
        }
        s
    };
    let mut seen = [0u16; MAX_ANTICHAIN];
    let mut len = 0;
    for size in 1..=k {
        let mut c: u32 = (1 << size) - 1;
        while c < 1 << k {
            let local = c as u16;
            if !seen[..len].iter().any(|&f| f & local == f) {
                let s = expand(c);
                if pred(s) {
                    seen[len] = local;
                    len += 1;
                    found(s);
                }
            }
            // Gosper's hack: next mask with the same popcount.
            let lo = c & c.wrapping_neg();
            let r = c + lo;
            c = (((r ^ c) >> 2) / lo) | r;
        }
        if len > 0 && mode == Minimality::Cardinality {
            return;
        }
    }
}

pub fn minimal_union(x: AltSet, mode: Minimality, pred: impl Fn(AltSet) -> bool) -> AltSet {
    let mut u = AltSet::EMPTY;
    scan_minimal(x, mode, pred, |s| u = u.union(s));
    u
}

pub fn minimal_family(x: AltSet, mode: Minimality, pred: impl Fn(AltSet) -> bool) -> SetFamily {
    let mut sets = Vec::new();
    scan_minimal(x, mode, pred, |s| sets.push(s));
    let union = sets.iter().fold(AltSet::EMPTY, |u, s| u.union(*s));
    SetFamily { minimal_sets: sets, union }
}

/// Every member of `q` dominates every member of `x \ q`.
pub fn is_dominant(rel: &MajorityRelation, x: AltSet, q: AltSet) -> bool {
    let out = x.minus(q);
    q.iter().all(|a| out.is_subset(rel.lower(a)))
}

/// No member of `x \ q` dominates a member of `q`.
pub fn is_undominated(rel: &MajorityRelation, x: AltSet, q: AltSet) -> bool {
    rel.upper_of(q).inter(x.minus(q)).is_empty()
}

/// Every outside threat to `q` is reached from `q` by a `μ`-path of at most
/// `k` edges inside `x`. `k = 1` is weak stability.
pub fn is_k_stable(rel: &MajorityRelation, x: AltSet, q: AltSet, k: usize) -> bool {
    let threats = rel.upper_of(q).inter(x.minus(q));
    if threats.is_empty() {
        return true;
    }
    let mut reach = rel.lower_of(q).inter(x);
    let mut frontier = reach;
    for _ in 1..k {
        if threats.is_subset(reach) {
            return true;
        }
        let next = rel.lower_of(frontier).inter(x).minus(reach);
        if next.is_empty() {
            break;
        }
        reach = reach.union(next);
        frontier = next;
    }
    threats.is_subset(reach)
}

pub fn minimal_dominant(rel: &MajorityRelation, x: AltSet) -> AltSet {
    minimal_union(x, Minimality::Inclusion, |q| is_dominant(rel, x, q))
}

pub fn minimal_undominated(rel: &MajorityRelation, x: AltSet) -> AltSet {
    minimal_union(x, Minimality::Inclusion, |q| is_undominated(rel, x, q))
}

/// Union of the smallest weakly stable sets.
pub fn minimal_weakly_stable(rel: &MajorityRelation, x: AltSet) -> AltSet {
    k_stable(rel, x, 1)
}

/// Union of the smallest `k`-stable sets.
pub fn k_stable(rel: &MajorityRelation, x: AltSet, k: usize) -> AltSet {
    minimal_union(x, Minimality::Cardinality, |q| is_k_stable(rel, x, q, k.max(1)))
}

/// Alternatives not `γ`-dominated, `y γ x ⇔ D(y) ⊂ D(x)`.
pub fn fishburn(rel: &MajorityRelation, x: AltSet) -> AltSet {
    let d = |a: usize| rel.upper(a).inter(x);
    AltSet::from_ids(x.iter().filter(|&a| !x.iter().any(|b| d(b).is_proper_subset(d(a)))))
}

/// Alternatives not `δ`-dominated, `y δ x ⇔ L(y) ⊃ L(x)`.
pub fn uncovered_1(rel: &MajorityRelation, x: AltSet) -> AltSet {
    let l = |a: usize| rel.lower(a).inter(x);
    AltSet::from_ids(x.iter().filter(|&a| !x.iter().any(|b| l(a).is_proper_subset(l(b)))))
}

/// Alternatives not covered, `y B x ⇔ y μ x and D(y) ⊂ D(x)`.
pub fn uncovered_2(rel: &MajorityRelation, x: AltSet) -> AltSet {
    let d = |a: usize| rel.upper(a).inter(x);
    AltSet::from_ids(x.iter().filter(|&a| !d(a).iter().any(|b| d(b).is_proper_subset(d(a)))))
}

/// Alternatives not `σ`-dominated: `y σ x` iff `D(y) ⊆ D(x)`, `L(y) ⊇ L(x)`,
/// at least one inclusion strict.
pub fn richelson(rel: &MajorityRelation, x: AltSet) -> AltSet {
    let d = |a: usize| rel.upper(a).inter(x);
    let l = |a: usize| rel.lower(a).inter(x);
    let sigma = |y: usize, a: usize| {
        d(y).is_subset(d(a)) && l(a).is_subset(l(y)) && (d(y) != d(a) || l(y) != l(a))
    };
    AltSet::from_ids(x.iter().filter(|&a| !x.iter().any(|y| sigma(y, a))))
}

pub fn condorcet(rel: &MajorityRelation, x: AltSet) -> AltSet {
    AltSet::from_ids(x.iter().filter(|&a| x.without(a).is_subset(rel.lower(a))))
}

/// `μ`-undominated alternatives; may be empty.
pub fn core(rel: &MajorityRelation, x: AltSet) -> AltSet {
    AltSet::from_ids(x.iter().filter(|&a| rel.upper(a).inter(x).is_empty()))
}
