//! Rules checked against independent reference computations.

use choice_core::axioms::{ProfileSpace, SpaceKind};
use choice_core::profile::all_orders;
use choice_core::{AltSet, MajorityRelation, Profile, Rule, Tally};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Calls `f` on every profile of `m` alternatives and `n` criteria.
fn each_profile(m: usize, n: usize, kind: SpaceKind, mut f: impl FnMut(&Tally)) -> u128 {
    let space = ProfileSpace::new(m, n, kind);
    let mut cur = space.cursor_at(0);
    let mut t = Tally::with_capacity(m, n);
    let mut count = 0;
    loop {
        t.load(cur.orders());
        f(&t);
        count += 1;
        if !cur.advance() {
            return count;
        }
    }
}

/// Alternatives that reach every other one along `μ`: the top strongly
/// connected component of a tournament.
fn top_cycle(rel: &MajorityRelation, m: usize) -> AltSet {
    let mut reach = vec![vec![false; m]; m];
    for (a, row) in reach.iter_mut().enumerate() {
        for (b, r) in row.iter_mut().enumerate() {
            *r = a == b || rel.dominates(a, b);
        }
    }
    for k in 0..m {
        for a in 0..m {
            for b in 0..m {
                if reach[a][k] && reach[k][b] {
                    reach[a][b] = true;
                }
            }
        }
    }
    AltSet::from_ids((0..m).filter(|&a| reach[a].iter().all(|&r| r)))
}

#[test]
fn minimal_dominant_is_the_top_cycle() {
    for n in [1, 3, 5] {
        each_profile(4, n, SpaceKind::Multiset, |t| {
            assert_eq!(Rule::MinimalDominant.choose(t, t.universe()), top_cycle(t.relation(), 4));
        });
    }
}

/// Union of the smallest `Q` such that every outside alternative beating a
/// member of `Q` is beaten by a member of `Q`.
fn weakly_stable_by_definition(rel: &MajorityRelation, m: usize) -> AltSet {
    let stable = |q: u16| {
        (0..m).filter(|&x| q >> x & 1 == 1).all(|x| {
            (0..m).filter(|&y| q >> y & 1 == 0 && rel.dominates(y, x)).all(|y| (0..m).any(|z| q >> z & 1 == 1 && rel.dominates(z, y)))
        })
    };
    let sets: Vec<u16> = (1u16..1 << m).filter(|&q| stable(q)).collect();
    let min = sets.iter().map(|q| q.count_ones()).min().unwrap();
    AltSet(sets.iter().filter(|q| q.count_ones() == min).fold(0, |u, q| u | q))
}

#[test]
fn one_stable_is_weakly_stable() {
    let profiles = each_profile(4, 3, SpaceKind::Full, |t| {
        let u = t.universe();
        let oracle = weakly_stable_by_definition(t.relation(), 4);
        assert_eq!(Rule::KStable(1).choose(t, u), oracle);
        assert_eq!(Rule::MinimalWeaklyStable.choose(t, u), oracle);
    });
    assert_eq!(profiles, 13_824);
}

#[test]
fn one_approval_is_plurality() {
    for (m, expected) in [(3, 216), (4, 13_824)] {
        let profiles = each_profile(m, 3, SpaceKind::Full, |t| {
            for x in t.universe().subsets() {
                assert_eq!(Rule::QApproval(1).choose(t, x), Rule::Plurality.choose(t, x));
            }
        });
        assert_eq!(profiles, expected);
    }
}

#[test]
fn minimax_equals_simpson() {
    let profiles = each_profile(3, 3, SpaceKind::Full, |t| {
        for x in t.universe().subsets() {
            assert_eq!(Rule::Minimax.choose(t, x), Rule::Simpson.choose(t, x));
        }
    });
    assert_eq!(profiles, 216);
}

/// `v_j(a)`: criteria placing `a` j-th from the bottom of the contraction,
/// computed from a sorted copy of each contracted order.
fn v_vector(p: &Profile, a: usize) -> Vec<usize> {
    let mut v = vec![0; p.m()];
    for o in p.orders() {
        let mut ranked: Vec<usize> = (0..p.m()).collect();
        ranked.sort_by_key(|&x| std::cmp::Reverse(o.position(x)));
        v[ranked.iter().position(|&x| x == a).unwrap()] += 1;
    }
    v
}

#[test]
fn threshold_matches_sorted_v_vectors() {
    let orders = all_orders(5);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10_000 {
        let picked = (0..9).map(|_| orders[rng.gen_range(0..orders.len())]).collect();
        let p = Profile::from_orders(5, picked).unwrap();
        let x = AltSet(rng.gen_range(1..32));
        let sub = p.contract(x).unwrap();
        let ids: Vec<usize> = x.iter().collect();
        let mut vs: Vec<(Vec<usize>, usize)> = (0..sub.m()).map(|a| (v_vector(&sub, a), ids[a])).collect();
        vs.sort();
        let best = vs[0].0.clone();
        let oracle = AltSet::from_ids(vs.iter().filter(|(v, _)| *v == best).map(|(_, a)| *a));
        assert_eq!(Rule::Threshold.choose(&Tally::new(&p), x), oracle);
    }
}

#[test]
fn majority_solution_chain() {
    for (m, n) in [(3, 3), (4, 3)] {
        each_profile(m, n, SpaceKind::Full, |t| {
            for x in t.universe().subsets() {
                let w = Rule::Condorcet.choose(t, x);
                let core = Rule::Core.choose(t, x);
                assert!(w.is_subset(core));
                assert!(core.is_subset(Rule::Uncovered1.choose(t, x)));
                assert!(core.is_subset(Rule::Fishburn.choose(t, x)));
                if w.len() == 1 {
                    for r in [Rule::MinimalDominant, Rule::MinimalUndominated, Rule::MinimalWeaklyStable, Rule::Core] {
                        assert_eq!(r.choose(t, x), w, "{r}");
                    }
                }
            }
        });
    }
}

#[test]
fn copeland_variants_agree_on_a_condorcet_winner() {
    for m in [3, 4] {
        for n in [1, 3, 5] {
            each_profile(m, n, SpaceKind::Multiset, |t| {
                let u = t.universe();
                let w = Rule::Condorcet.choose(t, u);
                if !w.is_empty() {
                    for r in [Rule::Copeland1, Rule::Copeland2, Rule::Copeland3] {
                        assert_eq!(r.choose(t, u), w, "{r}");
                    }
                }
            });
        }
    }
}
