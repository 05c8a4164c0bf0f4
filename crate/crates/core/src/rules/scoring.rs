//! Position-based procedures: simple majority through Coombs.

use alloc::vec;
use alloc::vec::Vec;

use crate::altset::AltSet;
use crate::rules::majority::condorcet;
use crate::tally::Tally;

/// One elimination round: the survivors entering it, their scores
/// (indexed by id; 0 outside the survivors) and who was removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    pub survivors: AltSet,
    pub scores: Vec<usize>,
    pub eliminated: AltSet,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EliminationTrace {
    pub rounds: Vec<Round>,
}

impl EliminationTrace {
    fn push(trace: &mut Option<&mut EliminationTrace>, t: &Tally, survivors: AltSet, score: impl Fn(usize) -> usize, eliminated: AltSet) {
        if let Some(tr) = trace.as_deref_mut() {
            let mut scores = vec![0; t.m()];
            for a in survivors.iter() {
                scores[a] = score(a);
            }
            tr.rounds.push(Round { survivors, scores, eliminated });
        }
    }
}

/// Members of `x` attaining the maximum of `f`.
#[inline]
pub(crate) fn argmax(x: AltSet, f: impl Fn(usize) -> usize) -> AltSet {
    let mut best = 0;
    let mut out = AltSet::EMPTY;
    for a in x.iter() {
        let v = f(a);
        if out.is_empty() || v > best {
            best = v;
            out = AltSet::single(a);
        } else if v == best {
            out.insert(a);
        }
    }
    out
}

/// Members of `x` attaining the minimum of `f`.
#[inline]
pub(crate) fn argmin(x: AltSet, f: impl Fn(usize) -> usize) -> AltSet {
    let mut best = 0;
    let mut out = AltSet::EMPTY;
    for a in x.iter() {
        let v = f(a);
        if out.is_empty() || v < best {
            best = v;
            out = AltSet::single(a);
        } else if v == best {
            out.insert(a);
        }
    }
    out
}

/// `{a : n⁺(a) > n/2}`.
pub fn simple_majority(t: &Tally, x: AltSet) -> AltSet {
    let n = t.n();
    for a in x.iter() {
        if 2 * t.top_count(a, x) > n {
            return AltSet::single(a);
        }
    }
    AltSet::EMPTY
}

pub fn plurality(t: &Tally, x: AltSet) -> AltSet {
    argmax(x, |a| t.top_count(a, x))
}

pub fn inverse_plurality(t: &Tally, x: AltSet) -> AltSet {
    argmin(x, |a| t.bottom_count(a, x))
}

/// `q` is clipped to `|x|`.
pub fn q_approval(t: &Tally, x: AltSet, q: usize) -> AltSet {
    let q = q.clamp(1, x.len().max(1));
    argmax(x, |a| t.top_q_count(a, x, q))
}

/// Two-stage majority. Finalists are the top `n⁺` tier, widened by the next
/// tier when the top tier is a single alternative; the final stage is simple
/// majority on the finalists' contraction, so the result may be empty.
pub fn run_off(t: &Tally, x: AltSet, mut trace: Option<&mut EliminationTrace>) -> AltSet {
    let first = simple_majority(t, x);
    if !first.is_empty() {
        EliminationTrace::push(&mut trace, t, x, |a| t.top_count(a, x), x.minus(first));
        return first;
    }
    let score = |a| t.top_count(a, x);
    let mut finalists = argmax(x, score);
    if finalists.len() < 2 {
        finalists = finalists.union(argmax(x.minus(finalists), score));
    }
    if finalists != x {
        EliminationTrace::push(&mut trace, t, x, score, x.minus(finalists));
    }
    let out = simple_majority(t, finalists);
    EliminationTrace::push(&mut trace, t, finalists, |a| t.top_count(a, finalists), finalists.minus(out));
    out
}

/// Shared loop of Hare and Coombs: stop on a strict-majority top, otherwise
/// delete every survivor tied at the extreme of `loser`. A round that would
/// delete everyone ends with an empty choice.
fn eliminate(
    t: &Tally,
    x: AltSet,
    trace: &mut Option<&mut EliminationTrace>,
    loser: impl Fn(AltSet) -> AltSet,
    score: impl Fn(usize, AltSet) -> usize,
) -> AltSet {
    let mut s = x;
    loop {
        let winner = simple_majority(t, s);
        if !winner.is_empty() {
            EliminationTrace::push(trace, t, s, |a| score(a, s), s.minus(winner));
            return winner;
        }
        let out = loser(s);
        EliminationTrace::push(trace, t, s, |a| score(a, s), out);
        s = s.minus(out);
        if s.is_empty() {
            return s;
        }
    }
}

/// Hare: delete the alternatives ranked best by the fewest criteria.
pub fn hare(t: &Tally, x: AltSet, mut trace: Option<&mut EliminationTrace>) -> AltSet {
    eliminate(t, x, &mut trace, |s| argmin(s, |a| t.top_count(a, s)), |a, s| t.top_count(a, s))
}

/// Coombs: delete the alternatives ranked worst by the most criteria.
pub fn coombs(t: &Tally, x: AltSet, mut trace: Option<&mut EliminationTrace>) -> AltSet {
    eliminate(t, x, &mut trace, |s| argmax(s, |a| t.bottom_count(a, s)), |a, s| t.bottom_count(a, s))
}

pub fn borda(t: &Tally, x: AltSet) -> AltSet {
    argmax(x, |a| t.borda(a, x))
}

/// Condorcet winner if one exists, Borda otherwise.
pub fn black(t: &Tally, x: AltSet) -> AltSet {
    let w = condorcet(t.relation(), x);
    if w.is_empty() {
        borda(t, x)
    } else {
        w
    }
}

/// Baldwin: repeatedly delete all alternatives with the minimum recomputed
/// Borda count; a fully tied survivor set is returned as is.
pub fn inverse_borda(t: &Tally, x: AltSet, mut trace: Option<&mut EliminationTrace>) -> AltSet {
    let mut s = x;
    while s.len() > 1 {
        let low = argmin(s, |a| t.borda(a, s));
        if low == s {
            EliminationTrace::push(&mut trace, t, s, |a| t.borda(a, s), AltSet::EMPTY);
            return s;
        }
        EliminationTrace::push(&mut trace, t, s, |a| t.borda(a, s), low);
        s = s.minus(low);
    }
    s
}

/// Nanson: repeatedly delete every alternative whose Borda count does not
/// exceed the mean; stops when the survivors all tie.
pub fn nanson(t: &Tally, x: AltSet, mut trace: Option<&mut EliminationTrace>) -> AltSet {
    let mut s = x;
    while s.len() > 1 {
        let mut r = [0usize; crate::MAX_ALTS];
        let mut total = 0;
        for a in s.iter() {
            r[a] = t.borda(a, s);
            total += r[a];
        }
        let k = s.len();
        let out = AltSet::from_ids(s.iter().filter(|&a| r[a] * k <= total));
        if out == s {
            EliminationTrace::push(&mut trace, t, s, |a| r[a], AltSet::EMPTY);
            return s;
        }
        EliminationTrace::push(&mut trace, t, s, |a| r[a], out);
        s = s.minus(out);
    }
    s
}
