use core::fmt;

/// Upper bound on the number of alternatives in one universe.
pub const MAX_ALTS: usize = 12;

/// Upper bound on the number of criteria in one profile.
pub const MAX_CRITERIA: usize = 64;

/// A subset of alternative ids `0..MAX_ALTS`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct AltSet(pub u16);

impl AltSet {
    pub const EMPTY: AltSet = AltSet(0);

    /// `{0, 1, ..., m-1}`.
    #[inline]
    pub const fn full(m: usize) -> AltSet {
        AltSet(((1u32 << m) - 1) as u16)
    }

    #[inline]
    pub const fn single(x: usize) -> AltSet {
        AltSet(1 << x)
    }

    #[inline]
    pub const fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1 << x);
    }

    #[inline]
    pub const fn with(self, x: usize) -> AltSet {
        AltSet(self.0 | 1 << x)
    }

    #[inline]
    pub const fn without(self, x: usize) -> AltSet {
        AltSet(self.0 & !(1 << x))
    }

    #[inline]
    pub const fn union(self, o: AltSet) -> AltSet {
        AltSet(self.0 | o.0)
    }

    #[inline]
    pub const fn inter(self, o: AltSet) -> AltSet {
        AltSet(self.0 & o.0)
    }

    #[inline]
    pub const fn minus(self, o: AltSet) -> AltSet {
        AltSet(self.0 & !o.0)
    }

    #[inline]
    pub const fn is_subset(self, o: AltSet) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub const fn is_proper_subset(self, o: AltSet) -> bool {
        self.is_subset(o) && self.0 != o.0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All non-empty subsets of `self` (including `self`), in decreasing bit order.
    #[inline]
    pub fn subsets(self) -> Subsets {
        Subsets { of: self.0, next: self.0, done: self.0 == 0 }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> AltSet {
        let mut s = AltSet::EMPTY;
        for x in ids {
            s.insert(x);
        }
        s
    }
}

impl fmt::Debug for AltSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over members in increasing id order.
#[derive(Clone)]
pub struct Members(u16);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Iterator over the non-empty submasks of a set.
#[derive(Clone)]
pub struct Subsets {
    of: u16,
    next: u16,
    done: bool,
}

impl Iterator for Subsets {
    type Item = AltSet;

    #[inline]
    fn next(&mut self) -> Option<AltSet> {
        if self.done {
            return None;
        }
        let cur = self.next;
        self.next = cur.wrapping_sub(1) & self.of;
        if self.next == 0 {
            self.done = true;
        }
        Some(AltSet(cur))
    }
}
