//! One PASS/FAIL line per acceptance criterion. A FAIL that is listed here as
//! documented is reported but does not fail the run; anything else exits 1.

use std::time::{Duration, Instant};

use choice_core::axioms::{CondSet, Condition, ProfileSpace, SpaceKind, TABLE2};
use choice_core::profile::all_orders;
use choice_core::rules::{Level, ThresholdPolicy, RULE_IDS};
use choice_core::{AltSet, MajorityRelation, PositionStats, Profile, Rule, RuleParams, Tally};
use choice_harness::fixtures;
use choice_harness::search::SearchBudget;
use choice_harness::table2::{self, Table2Report, MAX_FIXTURE_FALLBACKS};
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RE8_TIME_LIMIT: Duration = Duration::from_secs(1);
const TABLE2_TIME_LIMIT: Duration = Duration::from_secs(30 * 60);
const PERMUTATION_TESTS: usize = 1_000;
const THRESHOLD_PROFILES: usize = 10_000;
const SEED: u64 = 2015;

/// "−" cells no profile with an odd number of criteria witnesses within
/// m ≤ 5: with n odd the majority relation is a tournament, and on
/// tournaments these rules coincide with rules that satisfy the condition.
const ODD_N_GAPS: [(&str, Condition); 5] = [
    ("13", Condition::Outcast),
    ("14", Condition::Outcast),
    ("16", Condition::Concordance),
    ("18", Condition::Concordance),
    ("21", Condition::Concordance),
];

struct Outcome {
    pass: bool,
    documented: Option<String>,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Outcome {
        Outcome { pass, documented: None, detail: detail.into() }
    }
}

fn report(id: &str, title: &str, o: &Outcome) -> bool {
    let status = if o.pass { "PASS" } else { "FAIL" };
    println!("{status} {id} {title}: {}", o.detail);
    if let (false, Some(why)) = (o.pass, &o.documented) {
        println!("     documented: {why}");
    }
    o.pass || o.documented.is_some()
}

fn re8() -> Profile {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/re8.txt")).unwrap();
    choice_harness::format::parse_profile(&text).unwrap()
}

fn re8_table() -> Outcome {
    let p = re8();
    let st = |criterion, level| Rule::SuperThreshold(ThresholdPolicy { criterion, level: Level::Fixed(Some(level)) });
    let expected: Vec<(Rule, &str)> = vec![
        (Rule::SimpleMajority, ""),
        (Rule::Plurality, "ad"),
        (Rule::InversePlurality, "c"),
        (Rule::QApproval(1), "ad"),
        (Rule::QApproval(2), "b"),
        (Rule::QApproval(3), "c"),
        (Rule::QApproval(4), "abcd"),
        (Rule::RunOff, "a"),
        (Rule::Hare, "a"),
        (Rule::Borda, "b"),
        (Rule::Condorcet, ""),
        (Rule::Black, "b"),
        (Rule::InverseBorda, "b"),
        (Rule::Nanson, "b"),
        (Rule::Coombs, "b"),
        (Rule::MinimalDominant, "abcd"),
        (Rule::MinimalUndominated, "b"),
        (Rule::MinimalWeaklyStable, "b"),
        (Rule::Fishburn, "b"),
        (Rule::Uncovered1, "bc"),
        (Rule::Uncovered2, "bd"),
        (Rule::Richelson, "bc"),
        (Rule::Core, "b"),
        (Rule::KStable(1), "b"),
        (Rule::KStable(2), "b"),
        (Rule::KStable(3), "b"),
        (Rule::Threshold, "c"),
        (Rule::Copeland1, "b"),
        (Rule::Copeland2, "bc"),
        (Rule::Copeland3, "b"),
        (st(1, 3.0), "ab"),
        (Rule::Minimax, "b"),
        (Rule::Simpson, "b"),
    ];
    let start = Instant::now();
    let t = Tally::new(&p);
    let mut wrong = Vec::new();
    let mut covered = std::collections::BTreeSet::new();
    for (rule, want) in &expected {
        covered.insert(rule.id());
        let got = rule.choose(&t, p.universe());
        if got != p.set_of(want).unwrap() {
            wrong.push(format!("{rule} = {} (expected {{{want}}})", p.fmt_set(got)));
        }
    }
    let elapsed = start.elapsed();
    let all_rules = RULE_IDS.iter().all(|id| covered.contains(id));
    let pass = wrong.is_empty() && all_rules && elapsed < RE8_TIME_LIMIT;
    let mut detail = format!("{}/{} evaluations match, {} rules, {:.1?}", expected.len() - wrong.len(), expected.len(), covered.len(), elapsed);
    if !wrong.is_empty() {
        detail.push_str(&format!("; mismatches: {}", wrong.join(", ")));
    }
    Outcome::new(pass, detail)
}

fn table2_outcome(r: &Table2Report, elapsed: Duration, gaps: &[(&str, Condition)]) -> Outcome {
    let cells = r.cells().count();
    let disagree: Vec<String> = r.disagreements().map(|(row, c)| format!("{} {}", row.label, c.condition)).collect();
    let unreplayed = r.cells().filter(|(_, c)| !c.observed && c.replayed != Some(true)).count();
    let bad: Vec<&String> = disagree
        .iter()
        .zip(r.disagreements())
        .filter(|(_, (row, c))| {
            c.documented.is_none() && !gaps.iter().any(|(l, k)| *l == row.label && k.code() == c.condition)
        })
        .map(|(s, _)| s)
        .collect();
    let pass = disagree.is_empty() && unreplayed == 0 && r.fixture_fallbacks <= MAX_FIXTURE_FALLBACKS && elapsed < TABLE2_TIME_LIMIT;
    let detail = format!(
        "n in {:?}: {}/{} cells agree, {} fixture fallbacks, {:.0?}{}",
        r.ns,
        cells - disagree.len(),
        cells,
        r.fixture_fallbacks,
        elapsed,
        if disagree.is_empty() { String::new() } else { format!("; disagreements: {}", disagree.join(", ")) }
    );
    let documented = (bad.is_empty() && unreplayed == 0 && elapsed < TABLE2_TIME_LIMIT).then(|| {
        let mut why = String::from("see the known-disagreement reasons in the table2 report");
        if !gaps.is_empty() {
            why.push_str("; the remaining cells need an even number of criteria (see the supplemented run)");
        }
        why
    });
    Outcome { pass, documented, detail }
}

fn table2_literal() -> Outcome {
    let start = Instant::now();
    let r = table2::run(&TABLE2, CondSet::ALL, &SearchBudget::standard(), true).unwrap();
    table2_outcome(&r, start.elapsed(), &ODD_N_GAPS)
}

fn table2_supplemented() -> Outcome {
    let start = Instant::now();
    let r = table2::run(&TABLE2, CondSet::ALL, &table2::default_budget(), true).unwrap();
    table2_outcome(&r, start.elapsed(), &[])
}

/// Row 4 under every q the sizes admit. q ≥ |X| makes the rule choose all of
/// X, so only q < max m is meaningful.
fn q_approval_sweep() -> Outcome {
    let base = *TABLE2.iter().find(|r| r.label == "4").unwrap();
    let budget = SearchBudget::standard();
    let mut parts = Vec::new();
    let mut all = true;
    let mut only_edge = true;
    let top = *budget.ms.iter().max().unwrap();
    for q in 1..top {
        let row = choice_core::axioms::Row { rule: Rule::QApproval(q), ..base };
        let r = table2::run(&[row], CondSet::ALL, &budget, false).unwrap();
        let off: Vec<&str> = r.disagreements().map(|(_, c)| c.condition).collect();
        all &= off.is_empty();
        only_edge &= off.is_empty() || q + 1 == top;
        parts.push(if off.is_empty() { format!("q={q} 8/8") } else { format!("q={q} off at {}", off.join(",")) });
    }
    let mut o = Outcome::new(all, parts.join(", "));
    o.documented = only_edge.then(|| {
        format!(
            "with m <= {top}, q = {} is below |X| only for the full set, so every proper \
             contraction chooses all of X and H or M2 cannot fail within the budget",
            top - 1
        )
    });
    o
}

fn fixture_suite() -> Outcome {
    let results = fixtures::replay_all();
    let included: Vec<_> = results.iter().filter(|r| r.excluded.is_none()).collect();
    let failing: Vec<&str> = included.iter().filter(|r| !r.pass()).map(|r| r.name.as_str()).collect();
    let excluded: Vec<&str> = results.iter().filter(|r| r.excluded.is_some()).map(|r| r.name.as_str()).collect();
    let checks: usize = included.iter().map(|r| r.checks.len()).sum();
    let mut detail = format!(
        "{}/{} included fixtures pass ({checks} checks); excluded with notes: {}",
        included.len() - failing.len(),
        included.len(),
        excluded.join(", ")
    );
    if !failing.is_empty() {
        detail.push_str(&format!("; failing: {}", failing.join(", ")));
    }
    Outcome::new(failing.is_empty(), detail)
}

fn each_profile(m: usize, n: usize, mut f: impl FnMut(&Tally)) -> u128 {
    let space = ProfileSpace::new(m, n, SpaceKind::Full);
    let mut cur = space.cursor_at(0);
    let mut t = Tally::with_capacity(m, n);
    let mut count = 0;
    loop {
        t.load(cur.orders());
        f(&t);
        count += 1;
        if !cur.advance() {
            return count;
        }
    }
}

fn top_cycle(rel: &MajorityRelation, m: usize) -> AltSet {
    let mut reach: Vec<Vec<bool>> = (0..m).map(|a| (0..m).map(|b| a == b || rel.dominates(a, b)).collect()).collect();
    for k in 0..m {
        for a in 0..m {
            for b in 0..m {
                if reach[a][k] && reach[k][b] {
                    reach[a][b] = true;
                }
            }
        }
    }
    AltSet::from_ids((0..m).filter(|&a| reach[a].iter().all(|&r| r)))
}

fn oracle_a() -> Outcome {
    let mut bad = 0;
    let n = each_profile(4, 3, |t| bad += (Rule::MinimalDominant.choose(t, t.universe()) != top_cycle(t.relation(), 4)) as usize);
    Outcome::new(bad == 0, format!("minimal-dominant = top cycle: {bad} discrepancies in {n} profiles (m=4, n=3)"))
}

fn oracle_b() -> Outcome {
    let mut bad = 0;
    let n = each_profile(4, 3, |t| {
        let u = t.universe();
        bad += (Rule::KStable(1).choose(t, u) != Rule::MinimalWeaklyStable.choose(t, u)) as usize;
    });
    Outcome::new(bad == 0, format!("1-stable = minimal weakly stable: {bad} discrepancies in {n} profiles (m=4, n=3)"))
}

fn oracle_c() -> Outcome {
    let (mut bad, mut total) = (0, 0);
    for m in [3, 4] {
        total += each_profile(m, 3, |t| {
            for x in t.universe().subsets() {
                bad += (Rule::QApproval(1).choose(t, x) != Rule::Plurality.choose(t, x)) as usize;
            }
        });
    }
    Outcome::new(bad == 0, format!("1-approval = plurality: {bad} discrepancies in {total} profiles x all subsets (m=3..4, n=3)"))
}

fn oracle_d() -> Outcome {
    let mut bad = 0;
    let n = each_profile(3, 3, |t| {
        for x in t.universe().subsets() {
            bad += (Rule::Minimax.choose(t, x) != Rule::Simpson.choose(t, x)) as usize;
        }
    });
    Outcome::new(bad == 0, format!("minimax = simpson: {bad} discrepancies in {n} profiles x all subsets (m=3, n=3)"))
}

fn v_vector(p: &Profile, a: usize) -> Vec<usize> {
    let mut v = vec![0; p.m()];
    for o in p.orders() {
        let mut ranked: Vec<usize> = (0..p.m()).collect();
        ranked.sort_by_key(|&x| std::cmp::Reverse(o.position(x)));
        v[ranked.iter().position(|&x| x == a).unwrap()] += 1;
    }
    v
}

fn oracle_e() -> Outcome {
    let orders = all_orders(5);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut bad = 0;
    for _ in 0..THRESHOLD_PROFILES {
        let picked = (0..9).map(|_| orders[rng.gen_range(0..orders.len())]).collect();
        let p = Profile::from_orders(5, picked).unwrap();
        let mut vs: Vec<(Vec<usize>, usize)> = (0..5).map(|a| (v_vector(&p, a), a)).collect();
        vs.sort();
        let oracle = AltSet::from_ids(vs.iter().filter(|(v, _)| *v == vs[0].0).map(|(_, a)| *a));
        bad += (Rule::Threshold.choose(&Tally::new(&p), p.universe()) != oracle) as usize;
    }
    Outcome::new(bad == 0, format!("threshold = sorted v-vector oracle: {bad} discrepancies in {THRESHOLD_PROFILES} profiles (m=5, n=9)"))
}

fn all_rules() -> Vec<Rule> {
    let mut rules: Vec<Rule> = RULE_IDS.iter().map(|id| Rule::from_id(id, RuleParams::default()).unwrap()).collect();
    rules.push(Rule::SuperThreshold(ThresholdPolicy { criterion: 0, level: Level::Mean }));
    rules
}

fn random_profile(rng: &mut ChaCha8Rng) -> Profile {
    let (m, n) = (rng.gen_range(2..=6), rng.gen_range(1..=7));
    let orders = all_orders(m);
    Profile::from_orders(m, (0..n).map(|_| orders[rng.gen_range(0..orders.len())]).collect()).unwrap()
}

fn permutation(rng: &mut ChaCha8Rng, k: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..k).collect();
    v.shuffle(rng);
    v
}

fn image(s: AltSet, perm: &[usize]) -> AltSet {
    AltSet::from_ids(s.iter().map(|x| perm[x]))
}

/// Borda total and doubly stochastic `v` for one constructed `PositionStats`.
fn stats_ok(t: &Tally, x: AltSet) -> bool {
    let s = PositionStats::compute(t, x, None).unwrap();
    let k = x.len();
    let borda = x.iter().map(|a| s.borda[a]).sum::<usize>() == t.n() * k * (k - 1) / 2;
    let rows = x.iter().all(|a| s.v[a].iter().sum::<usize>() == t.n());
    let cols = (0..k).all(|j| x.iter().map(|a| s.v[a][j]).sum::<usize>() == t.n());
    borda && rows && cols
}

fn invariants() -> Outcome {
    let rules = all_rules();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut anon, mut neutral, mut inside, mut stats, mut built) = (0, 0, 0, 0, 0);
    for _ in 0..PERMUTATION_TESTS {
        let p = random_profile(&mut rng);
        let x = AltSet(rng.gen_range(1..1u16 << p.m()));
        let pc = permutation(&mut rng, p.n());
        let pa = permutation(&mut rng, p.m());
        let t = Tally::new(&p);
        let tc = Tally::new(&p.permute_criteria(&pc));
        let ta = Tally::new(&p.relabel(&pa));
        for r in &rules {
            let c = r.choose(&t, x);
            inside += !c.is_subset(x) as usize;
            if r.is_anonymous() {
                anon += (r.choose(&tc, x) != c) as usize;
            }
            neutral += (r.choose(&ta, image(x, &pa)) != image(c, &pa)) as usize;
        }
        for y in [x, p.universe()] {
            built += 1;
            stats += !stats_ok(&t, y) as usize;
        }
    }
    let pass = anon + neutral + inside + stats == 0;
    Outcome::new(
        pass,
        format!(
            "{PERMUTATION_TESTS} seeded cases x {} rule configurations: anonymity {anon}, neutrality {neutral}, \
             choice outside X {inside}, Borda/v-marginal failures {stats} of {built} stats",
            rules.len()
        ),
    )
}

fn main() {
    // Libtest-style flags (e.g. from `cargo test -- --quiet`) are ignored.
    let mut ok = true;
    ok &= report("1", "RE8 rule table", &re8_table());
    ok &= report("2", "satisfaction matrix, stated budget", &table2_literal());
    ok &= report("2+", "satisfaction matrix, budget with even n added", &table2_supplemented());
    ok &= report("2q", "q-approval row for every q", &q_approval_sweep());
    ok &= report("3", "worked-example fixtures", &fixture_suite());
    ok &= report("4a", "oracle", &oracle_a());
    ok &= report("4b", "oracle", &oracle_b());
    ok &= report("4c", "oracle", &oracle_c());
    ok &= report("4d", "oracle", &oracle_d());
    ok &= report("4e", "oracle", &oracle_e());
    ok &= report("5", "structural invariants", &invariants());
    if !ok {
        println!("undocumented failures");
        std::process::exit(1);
    }
}
