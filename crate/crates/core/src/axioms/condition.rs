use core::fmt;

/// The eight normative conditions, in table order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    Heredity,
    Concordance,
    Outcast,
    Aca,
    Mon1,
    Mon2,
    StrictMon,
    NonCompensatory,
}

impl Condition {
    pub const ALL: [Condition; 8] = [
        Condition::Heredity,
        Condition::Concordance,
        Condition::Outcast,
        Condition::Aca,
        Condition::Mon1,
        Condition::Mon2,
        Condition::StrictMon,
        Condition::NonCompensatory,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Short code: `H`, `C`, `O`, `ACA`, `M1`, `M2`, `SM`, `NC`.
    pub fn code(self) -> &'static str {
        ["H", "C", "O", "ACA", "M1", "M2", "SM", "NC"][self.index()]
    }

    pub fn name(self) -> &'static str {
        [
            "heredity",
            "concordance",
            "outcast",
            "arrow's choice axiom",
            "monotonicity 1",
            "monotonicity 2",
            "strict monotonicity",
            "non-compensatory",
        ][self.index()]
    }

    /// Accepts the short code in any case.
    pub fn parse(s: &str) -> Option<Condition> {
        Condition::ALL.into_iter().find(|c| c.code().eq_ignore_ascii_case(s))
    }

    /// Conditions quantified over presented subsets rather than moves.
    pub fn is_set_condition(self) -> bool {
        matches!(self, Condition::Heredity | Condition::Concordance | Condition::Outcast | Condition::Aca | Condition::Mon2)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// A set of conditions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CondSet(pub u8);

impl CondSet {
    pub const ALL: CondSet = CondSet(0xff);
    pub const EMPTY: CondSet = CondSet(0);

    pub fn single(c: Condition) -> CondSet {
        CondSet(1 << c.index())
    }

    #[inline]
    pub fn contains(self, c: Condition) -> bool {
        self.0 >> c.index() & 1 == 1
    }

    #[inline]
    pub fn remove(&mut self, c: Condition) {
        self.0 &= !(1 << c.index());
    }

    pub fn insert(&mut self, c: Condition) {
        self.0 |= 1 << c.index();
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Condition> {
        Condition::ALL.into_iter().filter(move |c| self.contains(*c))
    }
}

impl FromIterator<Condition> for CondSet {
    fn from_iter<I: IntoIterator<Item = Condition>>(iter: I) -> Self {
        let mut s = CondSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}
