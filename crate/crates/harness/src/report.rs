//! Text and machine-readable (JSON) rendering of results.

use std::fmt::Write as _;

use choice_core::axioms::{Verdict, Witness};
use choice_core::rules::EliminationTrace;
use choice_core::{AltSet, Profile};
use serde::Serialize;

use crate::fixtures::FixtureResult;
use crate::table2::{Source, Table2Report};

/// `{a,b}`; the empty choice renders as `{}`.
pub fn fmt_set(p: &Profile, s: AltSet) -> String {
    format!("{{{}}}", s.iter().map(|x| p.label(x)).collect::<Vec<_>>().join(","))
}

fn orders(p: &Profile) -> Vec<String> {
    p.orders().iter().map(|o| o.ranking().iter().map(|&x| p.label(x as usize)).collect::<Vec<_>>().join(" ")).collect()
}

/// A witness in plain terms.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessView {
    pub condition: &'static str,
    pub alternatives: Vec<String>,
    /// One order per criterion, best first.
    pub profile: Vec<String>,
    pub subsets: Vec<String>,
    pub improved: Option<Vec<String>>,
    pub target: Option<String>,
    pub choices: Vec<(String, String)>,
}

impl WitnessView {
    pub fn new(w: &Witness) -> WitnessView {
        let p = &w.profile;
        WitnessView {
            condition: w.condition.code(),
            alternatives: p.labels().to_vec(),
            profile: orders(p),
            subsets: w.subsets.iter().map(|&s| fmt_set(p, s)).collect(),
            improved: w.transformed.as_ref().map(orders),
            target: w.target.map(|x| p.label(x).to_string()),
            choices: w.choices.iter().map(|(k, s)| (k.to_string(), fmt_set(p, *s))).collect(),
        }
    }

    pub fn text(&self, indent: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{indent}profile: {}", self.profile.join(" | "));
        if !self.subsets.is_empty() {
            let names = match self.condition {
                "H" | "ACA" => ["X", "X'"],
                "O" => ["X", "removed"],
                "C" => ["X'", "X''"],
                "M2" => ["X", "y"],
                _ => ["", ""],
            };
            let parts: Vec<String> = self.subsets.iter().zip(names).map(|(v, k)| format!("{k} = {v}")).collect();
            let _ = writeln!(s, "{indent}sets: {}", parts.join(", "));
        }
        if let Some(q) = &self.improved {
            let _ = writeln!(s, "{indent}improved: {}", q.join(" | "));
        }
        if let Some(t) = &self.target {
            let _ = writeln!(s, "{indent}target: {t}");
        }
        for (k, v) in &self.choices {
            let _ = writeln!(s, "{indent}{k} = {v}");
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictView {
    pub condition: &'static str,
    pub satisfied: bool,
    pub vacuous: bool,
    pub profiles_examined: u128,
    pub profiles_covered: u128,
    pub multi_choice_profiles: u128,
    pub witness: Option<WitnessView>,
}

impl VerdictView {
    pub fn new(v: &Verdict) -> VerdictView {
        VerdictView {
            condition: v.condition.code(),
            satisfied: !v.violated(),
            vacuous: v.vacuous(),
            profiles_examined: v.profiles_examined,
            profiles_covered: v.profiles_covered,
            multi_choice_profiles: v.multi_choice_profiles,
            witness: v.witness.as_ref().map(WitnessView::new),
        }
    }
}

pub fn verdict_text(rule: &str, v: &VerdictView) -> String {
    let mut s = String::new();
    let state = match (v.satisfied, v.vacuous) {
        (false, _) => "violated",
        (true, true) => "satisfied within budget (vacuous: no profile chose two alternatives)",
        (true, false) => "satisfied within budget",
    };
    let _ = writeln!(s, "{rule} {}: {state} ({} profiles examined)", v.condition, v.profiles_examined);
    if let Some(w) = &v.witness {
        s.push_str(&w.text("  "));
    }
    s
}

pub fn trace_text(p: &Profile, trace: &EliminationTrace) -> String {
    let mut s = String::new();
    for (i, r) in trace.rounds.iter().enumerate() {
        let scores: Vec<String> = r.survivors.iter().map(|x| format!("{}={}", p.label(x), r.scores[x])).collect();
        let _ = writeln!(s, "round {}: {} -> eliminated {}", i + 1, scores.join(" "), fmt_set(p, r.eliminated));
    }
    s
}

fn mark(ok: bool) -> char {
    if ok {
        '+'
    } else {
        '-'
    }
}

pub fn table2_text(r: &Table2Report) -> String {
    let mut s = String::new();
    let conds: Vec<&str> = r.rows.first().map(|row| row.cells.iter().map(|c| c.condition).collect()).unwrap_or_default();
    let _ = writeln!(
        s,
        "budget: m in {:?}, n in {:?}; exhaustive where (m!)^n <= 10^7, else {} samples (seed {})",
        r.ms, r.ns, r.samples, r.seed
    );
    let _ = writeln!(s, "cells show expected/observed; '!' marks a disagreement, 'v' a vacuous Mon2\n");
    let width = r.rows.iter().map(|row| row.rule.chars().count()).max().unwrap_or(0).max(4);
    let _ = write!(s, "{:<4} {:<width$}", "row", "rule");
    for c in &conds {
        let _ = write!(s, " {c:>5}");
    }
    s.push('\n');
    for row in &r.rows {
        let _ = write!(s, "{:<4} {:<width$}", row.label, row.rule);
        for c in &row.cells {
            let flag = if !c.agrees {
                "!"
            } else if c.vacuous {
                "v"
            } else {
                " "
            };
            let _ = write!(s, " {:>5}", format!("{flag}{}/{}", mark(c.expected), mark(c.observed)));
        }
        s.push('\n');
    }
    s.push('\n');
    for (row, c) in r.cells() {
        if let Some(Source::Fixture { name }) = &c.source {
            let _ = writeln!(s, "row {} {}: witness from worked example `{name}`", row.label, c.condition);
        }
    }
    if r.rows.len() == 1 {
        for (row, c) in r.cells().filter(|(_, c)| c.agrees) {
            if let Some(w) = &c.witness {
                let _ = writeln!(s, "row {} {} witness:", row.label, c.condition);
                s.push_str(&WitnessView::new(w).text("  "));
            }
        }
    }
    for (row, c) in r.disagreements() {
        let _ = writeln!(
            s,
            "row {} {}: expected {}, observed {}{}",
            row.label,
            c.condition,
            mark(c.expected),
            mark(c.observed),
            c.documented.map(|d| format!(" (known: {d})")).unwrap_or_default()
        );
        if let Some(w) = &c.witness {
            s.push_str(&WitnessView::new(w).text("  "));
        }
    }
    let total = r.cells().count();
    let agree = total - r.disagreements().count();
    let _ = writeln!(s, "{agree}/{total} cells agree; '+' cells are verified within budget, not proved");
    s
}

/// Machine view of the matrix, with witnesses.
#[derive(Serialize)]
pub struct Table2Json<'a> {
    #[serde(flatten)]
    pub report: &'a Table2Report,
    pub witnesses: Vec<CellWitness>,
}

#[derive(Serialize)]
pub struct CellWitness {
    pub row: &'static str,
    pub condition: &'static str,
    pub witness: WitnessView,
}

pub fn cell_witnesses(r: &Table2Report) -> Vec<CellWitness> {
    r.cells()
        .filter_map(|(row, c)| {
            c.witness.as_ref().map(|w| CellWitness { row: row.label, condition: c.condition, witness: WitnessView::new(w) })
        })
        .collect()
}

pub fn table2_json(r: &Table2Report) -> String {
    serde_json::to_string_pretty(&Table2Json { report: r, witnesses: cell_witnesses(r) }).expect("serializable")
}

pub fn fixtures_text(results: &[FixtureResult]) -> String {
    let mut s = String::new();
    for r in results {
        let status = match (&r.excluded, r.pass()) {
            (Some(_), _) => "excluded",
            (None, true) => "pass",
            (None, false) => "FAIL",
        };
        let _ = writeln!(s, "{status:<8} {} ({})", r.name, r.rule);
        for c in &r.checks {
            let mut line = format!("  {} {}: {}", if c.pass { "ok " } else { "BAD" }, c.what, c.actual);
            if !c.pass {
                let _ = write!(line, " (expected {})", c.expected);
            }
            if let Some(p) = &c.published {
                let _ = write!(line, " [published: {p}]");
            }
            let _ = writeln!(s, "{line}");
        }
        if let Some(why) = &r.excluded {
            let _ = writeln!(s, "  excluded: {why}");
        }
    }
    let included: Vec<_> = results.iter().filter(|r| r.excluded.is_none()).collect();
    let passed = included.iter().filter(|r| r.pass()).count();
    let _ = writeln!(s, "{passed}/{} included fixtures pass; {} excluded", included.len(), results.len() - included.len());
    s
}
