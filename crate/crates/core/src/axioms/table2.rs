//! The published satisfaction matrix, one row per rule configuration.

use crate::axioms::condition::Condition;
use crate::rules::{Level, Rule, ThresholdPolicy, DEFAULT_K, DEFAULT_Q};

/// One row: a label, the rule configuration it is checked with, and the
/// expected verdict per condition (`true` = satisfied) in [`Condition::ALL`]
/// order.
#[derive(Clone, Copy, Debug)]
pub struct Row {
    pub label: &'static str,
    pub rule: Rule,
    pub expected: [bool; 8],
}

impl Row {
    pub fn expects(&self, c: Condition) -> bool {
        self.expected[c.index()]
    }
}

const fn row(label: &'static str, rule: Rule, e: [u8; 8]) -> Row {
    let mut expected = [false; 8];
    let mut i = 0;
    while i < 8 {
        expected[i] = e[i] == 1;
        i += 1;
    }
    Row { label, rule, expected }
}

const FIXED: ThresholdPolicy = ThresholdPolicy { criterion: 0, level: Level::Fixed(None) };
const MEAN: ThresholdPolicy = ThresholdPolicy { criterion: 0, level: Level::Mean };

/// Columns: H, C, O, ACA, M1, M2, SM, NC.
pub const TABLE2: [Row; 29] = [
    row("1", Rule::SimpleMajority, [1, 0, 1, 0, 1, 1, 0, 0]),
    row("2", Rule::Plurality, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("3", Rule::InversePlurality, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("4", Rule::QApproval(DEFAULT_Q), [0, 0, 0, 0, 1, 0, 0, 0]),
    row("5", Rule::RunOff, [0, 0, 0, 0, 0, 1, 0, 0]),
    row("6", Rule::Hare, [0, 0, 0, 0, 0, 1, 0, 0]),
    row("7", Rule::Borda, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("8", Rule::Black, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("9", Rule::InverseBorda, [0, 0, 0, 0, 0, 0, 0, 0]),
    row("10", Rule::Nanson, [0, 0, 0, 0, 0, 0, 0, 0]),
    row("11", Rule::Coombs, [0, 0, 0, 0, 0, 1, 0, 0]),
    row("12", Rule::MinimalDominant, [0, 1, 1, 0, 1, 0, 0, 0]),
    row("13", Rule::MinimalUndominated, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("14", Rule::MinimalWeaklyStable, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("15", Rule::Fishburn, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("16", Rule::Uncovered1, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("17", Rule::Uncovered2, [0, 1, 0, 0, 1, 0, 0, 0]),
    row("18", Rule::Richelson, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("19", Rule::Condorcet, [1, 1, 0, 0, 1, 1, 0, 0]),
    row("20", Rule::Core, [1, 1, 0, 0, 1, 1, 0, 0]),
    row("21", Rule::KStable(DEFAULT_K), [0, 0, 0, 0, 1, 0, 0, 0]),
    row("22", Rule::Threshold, [0, 0, 0, 0, 1, 0, 0, 1]),
    row("23", Rule::Copeland1, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("24", Rule::Copeland2, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("25", Rule::Copeland3, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("26a", Rule::SuperThreshold(FIXED), [1, 1, 1, 1, 1, 1, 1, 0]),
    row("26b", Rule::SuperThreshold(MEAN), [0, 0, 0, 0, 1, 1, 0, 0]),
    row("27", Rule::Minimax, [0, 0, 0, 0, 1, 0, 0, 0]),
    row("28", Rule::Simpson, [0, 0, 0, 0, 1, 0, 0, 0]),
];
