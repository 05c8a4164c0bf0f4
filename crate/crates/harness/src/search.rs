//! Budgeted search drivers: exhaustive spaces split into index-ordered
//! chunks, and seeded sampling. Both merge chunk results in index order, so
//! the reported witness does not depend on the number of worker threads.

use choice_core::axioms::{
    search::record, search_range, space_for, Checker, CondSet, MoveScope, ProfileSpace, RangeResult, Verdict, EXHAUSTIVE_CAP,
};
use choice_core::profile::{all_orders, default_label, factorial};
use choice_core::{Rule, Tally};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Profiles per work unit.
const CHUNK: u128 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

/// Profile sizes to search and how.
#[derive(Clone, Debug)]
pub struct SearchBudget {
    pub ms: Vec<usize>,
    pub ns: Vec<usize>,
    /// `None`: exhaustive where `(m!)^n` is within the cap, sampled elsewhere.
    pub mode: Option<Mode>,
    pub samples: u64,
    pub seed: u64,
}

impl SearchBudget {
    /// `m ∈ {3,4,5}`, `n ∈ {3,5,7}`, 10^5 samples where exhaustive is too big.
    pub fn standard() -> SearchBudget {
        SearchBudget { ms: vec![3, 4, 5], ns: vec![3, 5, 7], mode: None, samples: 100_000, seed: 2015 }
    }

    pub fn mode_for(&self, m: usize, n: usize) -> Result<Mode, BudgetError> {
        let within = full_size(m, n) <= EXHAUSTIVE_CAP;
        match self.mode {
            None => Ok(if within { Mode::Exhaustive } else { Mode::Sampled }),
            Some(Mode::Exhaustive) if !within => Err(BudgetError::ExhaustiveTooLarge { m, n }),
            Some(mode) => Ok(mode),
        }
    }

    /// Refuses budgets that cannot run as requested.
    pub fn validate(&self) -> Result<(), BudgetError> {
        for &m in &self.ms {
            if !(1..=8).contains(&m) {
                return Err(BudgetError::Unsupported(format!("m = {m} (supported: 1..=8)")));
            }
            for &n in &self.ns {
                if !(1..=choice_core::MAX_CRITERIA).contains(&n) {
                    return Err(BudgetError::Unsupported(format!("n = {n}")));
                }
                self.mode_for(m, n)?;
            }
        }
        if self.ms.is_empty() || self.ns.is_empty() {
            return Err(BudgetError::Unsupported("empty m or n list".into()));
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum BudgetError {
    #[error("exhaustive search refused for m={m}, n={n}: (m!)^n exceeds 10^7")]
    ExhaustiveTooLarge { m: usize, n: usize },
    #[error("unsupported budget: {0}")]
    Unsupported(String),
}

pub fn full_size(m: usize, n: usize) -> u128 {
    (factorial(m) as u128).checked_pow(n as u32).unwrap_or(u128::MAX)
}

/// Result of one `(m, n)` cell of a budget.
#[derive(Clone, Debug)]
pub struct CellRun {
    pub m: usize,
    pub n: usize,
    pub mode: Mode,
    pub verdicts: Vec<Verdict>,
}

/// Searches one `(m, n)` size.
pub fn run_size(rule: Rule, conds: CondSet, m: usize, n: usize, budget: &SearchBudget) -> Result<CellRun, BudgetError> {
    let mode = budget.mode_for(m, n)?;
    let res = match mode {
        Mode::Exhaustive => exhaustive(rule, conds, &space_for(rule, m, n)),
        Mode::Sampled => sampled(rule, conds, m, n, budget.samples, budget.seed),
    };
    Ok(CellRun { m, n, mode, verdicts: res.into_verdicts() })
}

/// Runs every size of the budget, combining per condition: the first witness
/// in (m, n) order wins and counts add up until then.
pub fn run_budget(rule: Rule, conds: CondSet, budget: &SearchBudget) -> Result<(Vec<Verdict>, Vec<CellRun>), BudgetError> {
    budget.validate()?;
    let mut runs = Vec::new();
    let mut open = conds;
    let mut merged: Vec<Verdict> = conds
        .iter()
        .map(|c| Verdict { condition: c, witness: None, profiles_examined: 0, profiles_covered: 0, multi_choice_profiles: 0 })
        .collect();
    for &m in &budget.ms {
        for &n in &budget.ns {
            if open.is_empty() {
                break;
            }
            let run = run_size(rule, open, m, n, budget)?;
            for v in &run.verdicts {
                let slot = merged.iter_mut().find(|x| x.condition == v.condition).expect("requested condition");
                slot.profiles_examined += v.profiles_examined;
                slot.profiles_covered += v.profiles_covered;
                slot.multi_choice_profiles += v.multi_choice_profiles;
                if v.witness.is_some() {
                    slot.witness = v.witness.clone();
                    open.remove(v.condition);
                }
            }
            runs.push(run);
        }
    }
    Ok((merged, runs))
}

/// Exhaustive search in waves of `threads` chunks; stops once every condition
/// has a witness from a fully searched prefix.
pub fn exhaustive(rule: Rule, conds: CondSet, space: &ProfileSpace) -> RangeResult {
    let total = space.len();
    let chunks = total.div_ceil(CHUNK);
    let wave = rayon::current_num_threads().max(1) as u128;
    let mut acc = RangeResult::new(conds);
    let mut next = 0u128;
    while next < chunks && !acc.open().is_empty() {
        let open = acc.open();
        let end = (next + wave).min(chunks);
        let parts: Vec<RangeResult> = (next..end)
            .into_par_iter()
            .map(|c| search_range(rule, open, space, c * CHUNK, (c + 1) * CHUNK, MoveScope::Exhaustive))
            .collect();
        for p in parts {
            acc.merge_next(p);
        }
        next = end;
    }
    acc
}

/// `samples` uniformly random profiles; chunk `c` draws from its own ChaCha
/// stream keyed by `(seed, m, n, c)`.
pub fn sampled(rule: Rule, conds: CondSet, m: usize, n: usize, samples: u64, seed: u64) -> RangeResult {
    let orders = all_orders(m);
    let labels: Vec<String> = (0..m).map(default_label).collect();
    let samples = samples as u128;
    let chunks = samples.div_ceil(CHUNK);
    let wave = rayon::current_num_threads().max(1) as u128;
    let mut acc = RangeResult::new(conds);
    let mut next = 0u128;
    while next < chunks && !acc.open().is_empty() {
        let open = acc.open();
        let end = (next + wave).min(chunks);
        let parts: Vec<RangeResult> = (next..end)
            .into_par_iter()
            .map(|c| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((m as u64) << 56) ^ ((n as u64) << 48));
                rng.set_stream(c as u64);
                let mut res = RangeResult::new(open);
                let mut checker = Checker::new(rule, MoveScope::SingleCriterion);
                let mut t = Tally::with_capacity(m, n);
                let lo = c * CHUNK;
                let hi = ((c + 1) * CHUNK).min(samples);
                for idx in lo..hi {
                    t.load((0..n).map(|_| orders[rng.gen_range(0..orders.len())]));
                    if !record(&mut checker, &mut t, idx, 1, &mut res, &labels) {
                        break;
                    }
                }
                res
            })
            .collect();
        for p in parts {
            acc.merge_next(p);
        }
        next = end;
    }
    acc
}
