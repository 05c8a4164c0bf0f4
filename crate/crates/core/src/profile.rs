use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::altset::{AltSet, MAX_ALTS, MAX_CRITERIA};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProfileError {
    NoAlternatives,
    TooManyAlternatives(usize),
    NoCriteria,
    TooManyCriteria(usize),
    DuplicateLabel(String),
    /// An order that is not a permutation of the universe.
    NotAPermutation { criterion: usize },
    EmptySubset,
    ForeignAlternative(usize),
    CriterionOutOfRange(usize),
}

impl fmt::Display for ProfileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileError::NoAlternatives => write!(f, "at least one alternative is required"),
            ProfileError::TooManyAlternatives(m) => {
                write!(f, "{m} alternatives exceed the supported maximum of {MAX_ALTS}")
            }
            ProfileError::NoCriteria => write!(f, "at least one order (criterion) is required"),
            ProfileError::TooManyCriteria(n) => {
                write!(f, "{n} criteria exceed the supported maximum of {MAX_CRITERIA}")
            }
            ProfileError::DuplicateLabel(l) => write!(f, "duplicate alternative label `{l}`"),
            ProfileError::NotAPermutation { criterion } => {
                write!(f, "order {} does not rank every alternative exactly once", criterion + 1)
            }
            ProfileError::EmptySubset => write!(f, "subset must be non-empty"),
            ProfileError::ForeignAlternative(x) => write!(f, "alternative id {x} is not in the universe"),
            ProfileError::CriterionOutOfRange(i) => write!(f, "criterion {i} is out of range"),
        }
    }
}

/// A strict ranking of alternative ids, best first.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    len: u8,
    seq: [u8; MAX_ALTS],
}

impl LinearOrder {
    /// Builds an order from a best-to-worst ranking. Returns `None` unless
    /// `ranking` is a permutation of `0..ranking.len()`.
    pub fn new(ranking: &[usize]) -> Option<LinearOrder> {
        let m = ranking.len();
        if m == 0 || m > MAX_ALTS {
            return None;
        }
        let mut seen = AltSet::EMPTY;
        let mut seq = [0u8; MAX_ALTS];
        for (p, &x) in ranking.iter().enumerate() {
            if x >= m || seen.contains(x) {
                return None;
            }
            seen.insert(x);
            seq[p] = x as u8;
        }
        Some(LinearOrder { len: m as u8, seq })
    }

    pub fn identity(m: usize) -> LinearOrder {
        let mut seq = [0u8; MAX_ALTS];
        for (i, s) in seq.iter_mut().enumerate().take(m) {
            *s = i as u8;
        }
        LinearOrder { len: m as u8, seq }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Alternative ids, best first.
    #[inline]
    pub fn ranking(&self) -> &[u8] {
        &self.seq[..self.len as usize]
    }

    #[inline]
    pub fn at(&self, position: usize) -> usize {
        self.seq[position] as usize
    }

    /// 0-based position of `x` (0 = best).
    pub fn position(&self, x: usize) -> usize {
        self.ranking().iter().position(|&y| y as usize == x).expect("alternative in order")
    }

    pub fn prefers(&self, a: usize, b: usize) -> bool {
        self.position(a) < self.position(b)
    }

    pub fn reversed(&self) -> LinearOrder {
        let mut out = *self;
        out.seq[..self.len as usize].reverse();
        out
    }

    /// Lexicographic successor among permutations of the same length.
    pub fn next_permutation(&self) -> Option<LinearOrder> {
        let mut out = *self;
        let s = &mut out.seq[..self.len as usize];
        let n = s.len();
        if n < 2 {
            return None;
        }
        let mut i = n - 1;
        while i > 0 && s[i - 1] >= s[i] {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let mut j = n - 1;
        while s[j] <= s[i - 1] {
            j -= 1;
        }
        s.swap(i - 1, j);
        s[i..].reverse();
        Some(out)
    }

    /// Restriction to `subset`, with surviving ids renumbered densely in
    /// increasing original-id order.
    fn restrict(&self, subset: AltSet) -> LinearOrder {
        let mut remap = [0u8; MAX_ALTS];
        for (k, x) in subset.iter().enumerate() {
            remap[x] = k as u8;
        }
        let mut seq = [0u8; MAX_ALTS];
        let mut len = 0;
        for &x in self.ranking() {
            if subset.contains(x as usize) {
                seq[len] = remap[x as usize];
                len += 1;
            }
        }
        LinearOrder { len: len as u8, seq }
    }

    /// Relabels every id `x` as `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> LinearOrder {
        let mut out = *self;
        for s in out.seq[..self.len as usize].iter_mut() {
            *s = perm[*s as usize] as u8;
        }
        out
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.ranking()).finish()
    }
}

/// All `m!` orders of `0..m`, lexicographic.
pub fn all_orders(m: usize) -> Vec<LinearOrder> {
    let mut out = Vec::new();
    let mut cur = Some(LinearOrder::identity(m));
    while let Some(o) = cur {
        out.push(o);
        cur = o.next_permutation();
    }
    out
}

pub fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

/// Default label for id `x`: `a`, `b`, ... .
pub fn default_label(x: usize) -> String {
    ((b'a' + x as u8) as char).to_string()
}

/// A list of criteria (linear orders) over a common universe of labelled
/// alternatives. Alternative `x` has label `labels[x]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    labels: Vec<String>,
    orders: Vec<LinearOrder>,
}

impl Profile {
    pub fn new(labels: Vec<String>, orders: Vec<LinearOrder>) -> Result<Profile, ProfileError> {
        let m = labels.len();
        if m == 0 {
            return Err(ProfileError::NoAlternatives);
        }
        if m > MAX_ALTS {
            return Err(ProfileError::TooManyAlternatives(m));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(ProfileError::DuplicateLabel(l.clone()));
            }
        }
        if orders.is_empty() {
            return Err(ProfileError::NoCriteria);
        }
        if orders.len() > MAX_CRITERIA {
            return Err(ProfileError::TooManyCriteria(orders.len()));
        }
        for (i, o) in orders.iter().enumerate() {
            if o.len() != m {
                return Err(ProfileError::NotAPermutation { criterion: i });
            }
        }
        Ok(Profile { labels, orders })
    }

    /// Profile over default labels `a, b, ...` from id rankings.
    pub fn from_orders(m: usize, orders: Vec<LinearOrder>) -> Result<Profile, ProfileError> {
        Profile::new((0..m).map(default_label).collect(), orders)
    }

    /// Compact constructor: each string is one criterion written best to worst
    /// with single-character labels, e.g. `["abcd", "dcba"]`. The universe is
    /// the sorted set of characters in the first string.
    pub fn from_letters(orders: &[&str]) -> Result<Profile, ProfileError> {
        let first = orders.first().ok_or(ProfileError::NoCriteria)?;
        let mut chars: Vec<char> = first.chars().collect();
        chars.sort_unstable();
        let labels: Vec<String> = chars.iter().map(|c| c.to_string()).collect();
        let mut parsed = Vec::with_capacity(orders.len());
        for (i, s) in orders.iter().enumerate() {
            let ids: Option<Vec<usize>> =
                s.chars().map(|c| chars.iter().position(|&d| d == c)).collect();
            let o = ids
                .filter(|v| v.len() == chars.len())
                .and_then(|v| LinearOrder::new(&v))
                .ok_or(ProfileError::NotAPermutation { criterion: i })?;
            parsed.push(o);
        }
        Profile::new(labels, parsed)
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.orders.len()
    }

    #[inline]
    pub fn universe(&self) -> AltSet {
        AltSet::full(self.m())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Set of ids for a string of single-character labels, e.g. `"ab"`.
    pub fn set_of(&self, letters: &str) -> Option<AltSet> {
        let mut s = AltSet::EMPTY;
        for c in letters.chars() {
            let mut buf = [0u8; 4];
            s.insert(self.id_of(c.encode_utf8(&mut buf))?);
        }
        Some(s)
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    pub fn order(&self, i: usize) -> &LinearOrder {
        &self.orders[i]
    }

    /// Replaces criterion `i`.
    pub fn with_order(&self, i: usize, order: LinearOrder) -> Result<Profile, ProfileError> {
        if i >= self.n() {
            return Err(ProfileError::CriterionOutOfRange(i));
        }
        if order.len() != self.m() {
            return Err(ProfileError::NotAPermutation { criterion: i });
        }
        let mut p = self.clone();
        p.orders[i] = order;
        Ok(p)
    }

    /// The contraction onto `subset`: every order restricted to the subset,
    /// criterion count unchanged. Survivors are renumbered in id order and keep
    /// their labels.
    pub fn contract(&self, subset: AltSet) -> Result<Profile, ProfileError> {
        if subset.is_empty() {
            return Err(ProfileError::EmptySubset);
        }
        if let Some(x) = subset.minus(self.universe()).first() {
            return Err(ProfileError::ForeignAlternative(x));
        }
        let labels = subset.iter().map(|x| self.labels[x].clone()).collect();
        let orders = self.orders.iter().map(|o| o.restrict(subset)).collect();
        Ok(Profile { labels, orders })
    }

    /// Criteria reordered: criterion `i` of the result is criterion `perm[i]`.
    pub fn permute_criteria(&self, perm: &[usize]) -> Profile {
        Profile {
            labels: self.labels.clone(),
            orders: perm.iter().map(|&i| self.orders[i]).collect(),
        }
    }

    /// Alternatives renamed: id `x` becomes id `perm[x]`; labels follow ids,
    /// so the result reads as the same profile with names shuffled.
    pub fn relabel(&self, perm: &[usize]) -> Profile {
        Profile {
            labels: self.labels.clone(),
            orders: self.orders.iter().map(|o| o.relabel(perm)).collect(),
        }
    }

    /// Renders `{a,b}` using this profile's labels.
    pub fn fmt_set(&self, s: AltSet) -> String {
        let mut out = String::from("{");
        for (k, x) in s.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&self.labels[x]);
        }
        out.push('}');
        out
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for o in &self.orders {
            let s: String = o.ranking().iter().map(|&x| self.labels[x as usize].as_str()).collect();
            l.entry(&s);
        }
        l.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_are_lexicographic_and_complete() {
        let all = all_orders(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all[0].ranking(), [0, 1, 2, 3]);
        assert_eq!(all[23].ranking(), [3, 2, 1, 0]);
        assert!(all.windows(2).all(|w| w[0].ranking() < w[1].ranking()));
    }

    #[test]
    fn rejects_malformed_orders() {
        assert!(LinearOrder::new(&[0, 0, 1]).is_none());
        assert!(LinearOrder::new(&[0, 3, 1]).is_none());
        assert!(Profile::from_letters(&["abc", "ab"]).is_err());
        assert!(Profile::from_letters(&["aab"]).is_err());
        assert_eq!(Profile::from_orders(2, Vec::new()), Err(ProfileError::NoCriteria));
    }

    #[test]
    fn contraction_keeps_relative_order() {
        let p = Profile::from_letters(&["dbca", "acdb"]).unwrap();
        let c = p.contract(p.set_of("ad").unwrap()).unwrap();
        assert_eq!(c.labels(), ["a", "d"]);
        assert_eq!(c.order(0).ranking(), [1, 0]);
        assert_eq!(c.order(1).ranking(), [0, 1]);
        assert_eq!(p.contract(p.universe()).unwrap(), p);
        assert_eq!(p.contract(AltSet::EMPTY), Err(ProfileError::EmptySubset));
        assert_eq!(p.contract(AltSet::single(7)), Err(ProfileError::ForeignAlternative(7)));
    }
}
