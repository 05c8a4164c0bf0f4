use alloc::vec::Vec;
use core::fmt;

use crate::altset::{AltSet, MAX_ALTS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationError {
    Size(usize),
    Reflexive(usize),
    Symmetric(usize, usize),
}

impl fmt::Display for RelationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationError::Size(m) => write!(f, "relation over {m} alternatives is not supported"),
            RelationError::Reflexive(x) => write!(f, "diagonal entry {x} must be 0"),
            RelationError::Symmetric(x, y) => {
                write!(f, "entries ({x},{y}) and ({y},{x}) are both 1; the relation must be asymmetric")
            }
        }
    }
}

/// Pairwise counts `n(a,b)` = number of criteria ranking `a` above `b`.
/// The diagonal is stored as 0 and never read by the rules.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct TournamentMatrix {
    pub(crate) m: u8,
    pub(crate) n: u8,
    pub(crate) counts: [[u8; MAX_ALTS]; MAX_ALTS],
}

impl TournamentMatrix {
    #[inline]
    pub fn m(&self) -> usize {
        self.m as usize
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.counts[a][b] as usize
    }

    pub fn majority(&self) -> MajorityRelation {
        let mut rel = MajorityRelation::empty(self.m());
        for a in 0..self.m() {
            for b in 0..self.m() {
                if a != b && self.counts[a][b] > self.counts[b][a] {
                    rel.add(a, b);
                }
            }
        }
        rel
    }
}

impl fmt::Debug for TournamentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.m();
        let rows: Vec<&[u8]> = self.counts[..m].iter().map(|r| &r[..m]).collect();
        f.debug_struct("TournamentMatrix").field("n", &self.n).field("counts", &rows).finish()
    }
}

/// Strict majority relation `μ`: `x μ y` iff more criteria put `x` above `y`.
///
/// Stored as lower contour sets `L(x) = {y : x μ y}` and upper contour sets
/// `D(x) = {y : y μ x}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MajorityRelation {
    m: u8,
    lower: [AltSet; MAX_ALTS],
    upper: [AltSet; MAX_ALTS],
}

impl MajorityRelation {
    pub fn empty(m: usize) -> MajorityRelation {
        assert!(m <= MAX_ALTS);
        MajorityRelation { m: m as u8, lower: [AltSet::EMPTY; MAX_ALTS], upper: [AltSet::EMPTY; MAX_ALTS] }
    }

    /// Builds a relation from a 0/1 matrix, `rows[x][y] = 1` meaning `x μ y`.
    pub fn from_matrix(rows: &[Vec<bool>]) -> Result<MajorityRelation, RelationError> {
        let m = rows.len();
        if m == 0 || m > MAX_ALTS || rows.iter().any(|r| r.len() != m) {
            return Err(RelationError::Size(m));
        }
        let mut rel = MajorityRelation::empty(m);
        for x in 0..m {
            if rows[x][x] {
                return Err(RelationError::Reflexive(x));
            }
            for y in 0..m {
                if rows[x][y] {
                    if rows[y][x] {
                        return Err(RelationError::Symmetric(x.min(y), x.max(y)));
                    }
                    rel.add(x, y);
                }
            }
        }
        Ok(rel)
    }

    /// Builds a relation from `(x, y)` edges meaning `x μ y`.
    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<MajorityRelation, RelationError> {
        let mut rows = alloc::vec![alloc::vec![false; m]; m];
        for &(x, y) in edges {
            if x >= m || y >= m {
                return Err(RelationError::Size(m));
            }
            rows[x][y] = true;
        }
        MajorityRelation::from_matrix(&rows)
    }

    #[inline]
    pub(crate) fn add(&mut self, x: usize, y: usize) {
        self.lower[x].insert(y);
        self.upper[y].insert(x);
    }

    #[inline]
    pub(crate) fn clear_pair(&mut self, x: usize, y: usize) {
        self.lower[x].remove(y);
        self.upper[y].remove(x);
        self.lower[y].remove(x);
        self.upper[x].remove(y);
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m as usize
    }

    #[inline]
    pub fn universe(&self) -> AltSet {
        AltSet::full(self.m())
    }

    #[inline]
    pub fn dominates(&self, x: usize, y: usize) -> bool {
        self.lower[x].contains(y)
    }

    /// `L(x)`: alternatives dominated by `x`.
    #[inline]
    pub fn lower(&self, x: usize) -> AltSet {
        self.lower[x]
    }

    /// `D(x)`: alternatives dominating `x`.
    #[inline]
    pub fn upper(&self, x: usize) -> AltSet {
        self.upper[x]
    }

    /// Union of `L(z)` over `z ∈ s`.
    #[inline]
    pub fn lower_of(&self, s: AltSet) -> AltSet {
        let mut out = AltSet::EMPTY;
        for z in s.iter() {
            out = out.union(self.lower[z]);
        }
        out
    }

    /// Union of `D(z)` over `z ∈ s`.
    #[inline]
    pub fn upper_of(&self, s: AltSet) -> AltSet {
        let mut out = AltSet::EMPTY;
        for z in s.iter() {
            out = out.union(self.upper[z]);
        }
        out
    }

    /// Number of ordered pairs in the relation.
    pub fn edge_count(&self) -> usize {
        self.lower[..self.m()].iter().map(|s| s.len()).sum()
    }

    /// Every distinct pair is comparable.
    pub fn is_tournament(&self) -> bool {
        (0..self.m()).all(|x| self.lower[x].union(self.upper[x]) == self.universe().without(x))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.m() {
            for y in self.lower[x].iter() {
                out.push((x, y));
            }
        }
        out
    }
}

impl fmt::Debug for MajorityRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.edges()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn matrix_validation() {
        let ok = MajorityRelation::from_matrix(&[vec![false, true], vec![false, false]]).unwrap();
        assert!(ok.dominates(0, 1));
        assert_eq!(ok.upper(1), AltSet::single(0));
        assert_eq!(
            MajorityRelation::from_matrix(&[vec![true, false], vec![false, false]]),
            Err(RelationError::Reflexive(0))
        );
        assert_eq!(
            MajorityRelation::from_matrix(&[vec![false, true], vec![true, false]]),
            Err(RelationError::Symmetric(0, 1))
        );
        assert_eq!(MajorityRelation::from_matrix(&[vec![false; 3], vec![false; 3]]), Err(RelationError::Size(2)));
    }

    #[test]
    fn empty_relation_has_empty_contours() {
        let r = MajorityRelation::empty(4);
        assert!((0..4).all(|x| r.lower(x).is_empty() && r.upper(x).is_empty()));
        assert!(!r.is_tournament());
    }
}
