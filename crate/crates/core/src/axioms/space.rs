//! Deterministic enumeration of profile spaces.

use alloc::vec::Vec;

use crate::altset::MAX_CRITERIA;
use crate::profile::{all_orders, factorial, LinearOrder};

/// Which profiles a space lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceKind {
    /// Every `(m!)^n` sequence of orders.
    Full,
    /// One representative per multiset of orders (non-decreasing order
    /// indices). Sound for anonymous rules; each representative carries the
    /// multinomial weight of its permutation class.
    Multiset,
}

/// The profiles over `m` alternatives with `n` criteria, in a fixed order:
/// mixed-radix over lexicographically ordered permutations, first criterion
/// most significant.
#[derive(Clone, Debug)]
pub struct ProfileSpace {
    m: usize,
    n: usize,
    kind: SpaceKind,
    orders: Vec<LinearOrder>,
}

/// Saturating binomial coefficient.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

impl ProfileSpace {
    pub fn new(m: usize, n: usize, kind: SpaceKind) -> ProfileSpace {
        assert!((1..=8).contains(&m) && (1..=MAX_CRITERIA).contains(&n));
        ProfileSpace { m, n, kind, orders: all_orders(m) }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    /// All orders of `0..m`, indexed as in cursors.
    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    /// `(m!)^n`, saturating.
    pub fn full_size(&self) -> u128 {
        let f = factorial(self.m) as u128;
        (0..self.n).try_fold(1u128, |acc, _| acc.checked_mul(f)).unwrap_or(u128::MAX)
    }

    /// Number of listed profiles.
    pub fn len(&self) -> u128 {
        match self.kind {
            SpaceKind::Full => self.full_size(),
            SpaceKind::Multiset => {
                let k = factorial(self.m);
                binomial(k + self.n as u64 - 1, self.n as u64)
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cursor positioned at the `index`-th profile.
    pub fn cursor_at(&self, index: u128) -> Cursor<'_> {
        let k = self.orders.len() as u64;
        let mut digits = [0u16; MAX_CRITERIA];
        match self.kind {
            SpaceKind::Full => {
                let mut rest = index;
                for j in (0..self.n).rev() {
                    digits[j] = (rest % k as u128) as u16;
                    rest /= k as u128;
                }
            }
            SpaceKind::Multiset => {
                let mut rest = index;
                let mut lo = 0u64;
                for j in 0..self.n {
                    let tail = (self.n - j - 1) as u64;
                    let mut v = lo;
                    loop {
                        // Completions of the remaining `tail` slots with values in [v, k).
                        let cnt = binomial(k - v + tail - 1, tail);
                        if rest < cnt || v + 1 == k {
                            break;
                        }
                        rest -= cnt;
                        v += 1;
                    }
                    digits[j] = v as u16;
                    lo = v;
                }
            }
        }
        Cursor { space: self, digits, index }
    }
}

/// A position in a [`ProfileSpace`].
#[derive(Clone)]
pub struct Cursor<'a> {
    space: &'a ProfileSpace,
    digits: [u16; MAX_CRITERIA],
    index: u128,
}

impl<'a> Cursor<'a> {
    pub fn index(&self) -> u128 {
        self.index
    }

    /// Order index per criterion.
    pub fn digits(&self) -> &[u16] {
        &self.digits[..self.space.n]
    }

    pub fn orders(&self) -> impl Iterator<Item = LinearOrder> + '_ {
        self.digits().iter().map(|&d| self.space.orders[d as usize])
    }

    /// Number of full-space profiles this cursor stands for.
    pub fn weight(&self) -> u128 {
        match self.space.kind {
            SpaceKind::Full => 1,
            SpaceKind::Multiset => {
                let d = self.digits();
                let mut w: u128 = 1;
                let mut placed = 0u64;
                let mut j = 0;
                while j < d.len() {
                    let mut run = 1;
                    while j + run < d.len() && d[j + run] == d[j] {
                        run += 1;
                    }
                    w *= binomial(placed + run as u64, run as u64);
                    placed += run as u64;
                    j += run;
                }
                w
            }
        }
    }

    /// Steps to the next profile; `false` past the end.
    pub fn advance(&mut self) -> bool {
        let k = self.space.orders.len() as u16;
        let n = self.space.n;
        self.index += 1;
        for j in (0..n).rev() {
            if self.digits[j] + 1 < k {
                self.digits[j] += 1;
                if self.space.kind == SpaceKind::Multiset {
                    let v = self.digits[j];
                    for d in &mut self.digits[j + 1..n] {
                        *d = v;
                    }
                } else {
                    for d in &mut self.digits[j + 1..n] {
                        *d = 0;
                    }
                }
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(ProfileSpace::new(2, 2, SpaceKind::Full).len(), 4);
        assert_eq!(ProfileSpace::new(3, 3, SpaceKind::Full).len(), 216);
        assert_eq!(ProfileSpace::new(4, 3, SpaceKind::Full).len(), 13_824);
        assert_eq!(ProfileSpace::new(3, 3, SpaceKind::Multiset).len(), 56);
        assert_eq!(ProfileSpace::new(4, 5, SpaceKind::Multiset).len(), 98_280);
    }

    #[test]
    fn cursor_seek_matches_iteration_and_weights_cover_full_space() {
        for kind in [SpaceKind::Full, SpaceKind::Multiset] {
            let s = ProfileSpace::new(3, 4, kind);
            let mut c = s.cursor_at(0);
            let mut count = 0u128;
            let mut weight = 0u128;
            loop {
                let seek = s.cursor_at(c.index());
                assert_eq!(seek.digits(), c.digits());
                count += 1;
                weight += c.weight();
                if !c.advance() {
                    break;
                }
            }
            assert_eq!(count, s.len());
            assert_eq!(weight, s.full_size());
        }
    }
}
