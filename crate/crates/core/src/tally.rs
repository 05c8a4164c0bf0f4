use alloc::string::String;
use alloc::vec::Vec;

use crate::altset::{AltSet, MAX_ALTS, MAX_CRITERIA};
use crate::profile::{LinearOrder, Profile};
use crate::relation::{MajorityRelation, TournamentMatrix};

/// Precomputed view of a profile that every rule reads from.
///
/// Each rule is evaluated as `C(P_X, X)` against the full profile and a
/// presented subset `X`; counts for the contraction `P_X` are derived from
/// per-criterion "ranked below" bitsets, so no contraction is materialized.
/// Pairwise counts and `μ` are contraction-invariant and computed once.
#[derive(Clone)]
pub struct Tally {
    m: usize,
    n: usize,
    seq: Vec<[u8; MAX_ALTS]>,
    pos: Vec<[u8; MAX_ALTS]>,
    below: Vec<[AltSet; MAX_ALTS]>,
    matrix: TournamentMatrix,
    mu: MajorityRelation,
}

impl Tally {
    pub fn new(profile: &Profile) -> Tally {
        Tally::from_orders(profile.m(), profile.orders())
    }

    pub fn from_orders(m: usize, orders: &[LinearOrder]) -> Tally {
        let mut t = Tally::with_capacity(m, orders.len());
        t.load(orders.iter().copied());
        t
    }

    /// Empty tally with room for `n` criteria; fill it with [`Tally::load`].
    pub fn with_capacity(m: usize, n: usize) -> Tally {
        assert!((1..=MAX_ALTS).contains(&m) && (1..=MAX_CRITERIA).contains(&n));
        Tally {
            m,
            n: 0,
            seq: Vec::with_capacity(n),
            pos: Vec::with_capacity(n),
            below: Vec::with_capacity(n),
            matrix: TournamentMatrix { m: m as u8, n: 0, counts: [[0; MAX_ALTS]; MAX_ALTS] },
            mu: MajorityRelation::empty(m),
        }
    }

    /// Replaces the criteria, reusing buffers.
    pub fn load<I: IntoIterator<Item = LinearOrder>>(&mut self, orders: I) {
        let m = self.m;
        self.seq.clear();
        self.pos.clear();
        self.below.clear();
        self.matrix.counts = [[0; MAX_ALTS]; MAX_ALTS];
        for o in orders {
            debug_assert_eq!(o.len(), m);
            let mut seq = [0u8; MAX_ALTS];
            let mut pos = [0u8; MAX_ALTS];
            let mut below = [AltSet::EMPTY; MAX_ALTS];
            let mut rest = AltSet::full(m);
            for (p, &x) in o.ranking().iter().enumerate() {
                let x = x as usize;
                seq[p] = x as u8;
                pos[x] = p as u8;
                rest.remove(x);
                below[x] = rest;
                for y in rest.iter() {
                    self.matrix.counts[x][y] += 1;
                }
            }
            self.seq.push(seq);
            self.pos.push(pos);
            self.below.push(below);
        }
        self.n = self.seq.len();
        self.matrix.n = self.n as u8;
        self.mu = self.matrix.majority();
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn universe(&self) -> AltSet {
        AltSet::full(self.m)
    }

    #[inline]
    pub fn matrix(&self) -> &TournamentMatrix {
        &self.matrix
    }

    #[inline]
    pub fn relation(&self) -> &MajorityRelation {
        &self.mu
    }

    /// `n(a,b)`.
    #[inline]
    pub fn count(&self, a: usize, b: usize) -> usize {
        self.matrix.counts[a][b] as usize
    }

    /// Alternatives ranked below `x` in criterion `i` (full universe).
    #[inline]
    pub fn below(&self, i: usize, x: usize) -> AltSet {
        self.below[i][x]
    }

    /// Alternatives ranked above `x` in criterion `i` (full universe).
    #[inline]
    pub fn above(&self, i: usize, x: usize) -> AltSet {
        self.universe().minus(self.below[i][x]).without(x)
    }

    /// 0-based position of `x` in criterion `i` (full universe).
    #[inline]
    pub fn position(&self, i: usize, x: usize) -> usize {
        self.pos[i][x] as usize
    }

    /// Alternative at 0-based `position` in criterion `i`.
    #[inline]
    pub fn at(&self, i: usize, position: usize) -> usize {
        self.seq[i][position] as usize
    }

    /// `n⁺(a, P_X)`: criteria where `a` is best within `x`.
    #[inline]
    pub fn top_count(&self, a: usize, x: AltSet) -> usize {
        let above = x.minus(AltSet::single(a));
        self.below.iter().filter(|b| above.is_subset(b[a])).count()
    }

    /// `n⁻(a, P_X)`: criteria where `a` is worst within `x`.
    #[inline]
    pub fn bottom_count(&self, a: usize, x: AltSet) -> usize {
        self.below.iter().filter(|b| b[a].inter(x).is_empty()).count()
    }

    /// `n⁺(a, P_X, q)`: criteria where `a` is among the best `q` within `x`.
    #[inline]
    pub fn top_q_count(&self, a: usize, x: AltSet, q: usize) -> usize {
        let rest = x.without(a);
        self.below.iter().filter(|b| rest.minus(b[a]).len() < q).count()
    }

    /// Borda count `r(a, P_X)`: alternatives of `x` ranked below `a`, summed.
    #[inline]
    pub fn borda(&self, a: usize, x: AltSet) -> usize {
        self.below.iter().map(|b| b[a].inter(x).len()).sum()
    }

    /// `v_1(a)..v_|x|(a)` for `P_X`, worst place first (`v[0]` = number of
    /// criteria where `a` is worst within `x`).
    #[inline]
    pub fn position_counts(&self, a: usize, x: AltSet) -> [u8; MAX_ALTS] {
        let mut v = [0u8; MAX_ALTS];
        for b in &self.below {
            v[b[a].inter(x).len()] += 1;
        }
        v
    }

    /// Moves the alternative at `position` (> 0) of criterion `i` one place up.
    #[inline]
    pub fn swap_up(&mut self, i: usize, position: usize) {
        debug_assert!(position > 0 && position < self.m);
        let hi = self.seq[i][position - 1] as usize;
        let lo = self.seq[i][position] as usize;
        self.seq[i].swap(position - 1, position);
        self.pos[i][lo] = (position - 1) as u8;
        self.pos[i][hi] = position as u8;
        self.below[i][lo].insert(hi);
        self.below[i][hi].remove(lo);
        self.matrix.counts[lo][hi] += 1;
        self.matrix.counts[hi][lo] -= 1;
        self.mu.clear_pair(lo, hi);
        let (a, b) = (self.matrix.counts[lo][hi], self.matrix.counts[hi][lo]);
        if a > b {
            self.mu.add(lo, hi);
        } else if b > a {
            self.mu.add(hi, lo);
        }
    }

    /// Raises `x` by `steps` places in criterion `i`.
    pub fn raise(&mut self, i: usize, x: usize, steps: usize) {
        let p = self.position(i, x);
        debug_assert!(steps <= p);
        for k in 0..steps {
            self.swap_up(i, p - k);
        }
    }

    /// Undoes [`Tally::raise`]: lowers `x` by `steps` places in criterion `i`.
    pub fn lower(&mut self, i: usize, x: usize, steps: usize) {
        let p = self.position(i, x);
        debug_assert!(p + steps < self.m);
        for k in 0..steps {
            self.swap_up(i, p + k + 1);
        }
    }

    pub fn order(&self, i: usize) -> LinearOrder {
        let ids: Vec<usize> = self.seq[i][..self.m].iter().map(|&x| x as usize).collect();
        LinearOrder::new(&ids).expect("tally holds permutations")
    }

    pub fn orders(&self) -> Vec<LinearOrder> {
        (0..self.n).map(|i| self.order(i)).collect()
    }

    /// Materializes the current criteria as a profile with the given labels.
    pub fn to_profile(&self, labels: &[String]) -> Profile {
        Profile::new(labels.to_vec(), self.orders()).expect("tally holds a valid profile")
    }
}

/// Positional statistics of `P_X`, indexed by alternative id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionStats {
    pub subset: AltSet,
    /// `n⁺(x)`.
    pub top: Vec<usize>,
    /// `n⁻(x)`.
    pub bottom: Vec<usize>,
    /// `n⁺(x, q)` when `q` was supplied.
    pub top_q: Option<Vec<usize>>,
    /// Borda count `r(x)`.
    pub borda: Vec<usize>,
    /// `v[x][j-1] = v_j(x)`, `j = 1` being the worst place.
    pub v: Vec<Vec<usize>>,
}

impl PositionStats {
    /// Statistics for the contraction onto `x`. Entries for alternatives outside
    /// `x` are zero. `q` must satisfy `1 ≤ q ≤ |x|`.
    pub fn compute(t: &Tally, x: AltSet, q: Option<usize>) -> Option<PositionStats> {
        if x.is_empty() || q.is_some_and(|q| q == 0 || q > x.len()) {
            return None;
        }
        let m = t.m();
        let k = x.len();
        let mut s = PositionStats {
            subset: x,
            top: alloc::vec![0; m],
            bottom: alloc::vec![0; m],
            top_q: q.map(|_| alloc::vec![0; m]),
            borda: alloc::vec![0; m],
            v: alloc::vec![alloc::vec![0; k]; m],
        };
        for a in x.iter() {
            s.top[a] = t.top_count(a, x);
            s.bottom[a] = t.bottom_count(a, x);
            s.borda[a] = t.borda(a, x);
            if let (Some(q), Some(tq)) = (q, s.top_q.as_mut()) {
                tq[a] = t.top_q_count(a, x, q);
            }
            let v = t.position_counts(a, x);
            for j in 0..k {
                s.v[a][j] = v[j] as usize;
            }
        }
        Some(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swaps_keep_counts_consistent() {
        let p = Profile::from_letters(&["abcd", "dcba", "bdac"]).unwrap();
        let mut t = Tally::new(&p);
        t.raise(0, 3, 3);
        let fresh = Tally::new(&p.with_order(0, LinearOrder::new(&[3, 0, 1, 2]).unwrap()).unwrap());
        assert_eq!(t.matrix(), fresh.matrix());
        assert_eq!(t.relation(), fresh.relation());
        assert_eq!(t.orders(), fresh.orders());
        t.lower(0, 3, 3);
        assert_eq!(t.orders(), p.orders());
        assert_eq!(t.relation(), Tally::new(&p).relation());
    }

    #[test]
    fn stats_reject_bad_q() {
        let p = Profile::from_letters(&["abc"]).unwrap();
        let t = Tally::new(&p);
        assert!(PositionStats::compute(&t, p.universe(), Some(0)).is_none());
        assert!(PositionStats::compute(&t, p.universe(), Some(4)).is_none());
        assert!(PositionStats::compute(&t, AltSet::EMPTY, None).is_none());
        let s = PositionStats::compute(&t, p.universe(), Some(3)).unwrap();
        assert_eq!(s.top_q.unwrap(), [1, 1, 1]);
    }
}
