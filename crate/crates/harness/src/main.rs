use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use choice_core::axioms::{check_profile, CondSet, Condition, MoveScope, TABLE2};
use choice_core::profile::{all_orders, default_label};
use choice_core::rules::{Level, RuleParams};
use choice_core::{AltSet, Profile, Rule, Tally};
use choice_harness::format::{parse_profile, parse_relation, write_profile};
use choice_harness::report::{self, VerdictView};
use choice_harness::search::{run_budget, Mode, SearchBudget};
use choice_harness::{fixtures, table2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "choice", version, about = "Evaluate choice procedures and check the conditions they satisfy")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a rule on a profile (or relation) file.
    Eval {
        file: PathBuf,
        rule: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Presented set as labels without separators, e.g. `abd`.
        #[arg(long)]
        subset: Option<String>,
        /// Print the rounds of iterative rules.
        #[arg(long)]
        trace: bool,
    },
    /// Check one rule against conditions, by search or on a given profile.
    Check {
        rule: String,
        /// Condition codes: H, C, O, ACA, M1, M2, SM, NC.
        #[arg(value_delimiter = ',', default_value = "H,C,O,ACA,M1,M2,SM,NC")]
        conditions: Vec<String>,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Check this profile only instead of searching.
        #[arg(long)]
        profile: Option<PathBuf>,
    },
    /// Reproduce the satisfaction matrix.
    Table2 {
        /// Row labels or rule ids to run (default: all rows).
        #[arg(long, value_delimiter = ',')]
        rules: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        conditions: Vec<String>,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Do not fall back to worked examples for unwitnessed "−" cells.
        #[arg(long)]
        no_fallback: bool,
        /// Write each witness as `<row>-<condition>.json` into this directory.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Replay the worked-example corpus.
    Fixtures {
        /// Only fixtures whose name contains this text.
        filter: Option<String>,
    },
    /// Print a random profile.
    Gen {
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 2015)]
        seed: u64,
    },
}

#[derive(Args)]
struct ParamArgs {
    /// q for q-approval.
    #[arg(long)]
    q: Option<usize>,
    /// k for k-stable.
    #[arg(long)]
    k: Option<usize>,
    /// Designated criterion for super-threshold (1-based).
    #[arg(long)]
    criterion: Option<usize>,
    /// Fixed threshold level for super-threshold.
    #[arg(long)]
    level: Option<f64>,
    #[arg(long, value_enum)]
    policy: Option<Policy>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Fixed,
    Mean,
}

#[derive(Args)]
struct BudgetArgs {
    /// Numbers of alternatives.
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    /// Numbers of criteria.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

impl BudgetArgs {
    fn budget(&self, default: SearchBudget) -> SearchBudget {
        SearchBudget {
            ms: if self.m.is_empty() { default.ms } else { self.m.clone() },
            ns: if self.n.is_empty() { default.ns } else { self.n.clone() },
            mode: self.mode.map(|m| match m {
                ModeArg::Exhaustive => Mode::Exhaustive,
                ModeArg::Sampled => Mode::Sampled,
            }),
            samples: self.samples.unwrap_or(default.samples),
            seed: self.seed.unwrap_or(default.seed),
        }
    }
}

/// Errors that map to exit status 2.
#[derive(Debug)]
struct Usage(anyhow::Error);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(r: Result<T>) -> Result<T> {
    r.map_err(|e| Usage(e).into())
}

fn rule_of(id: &str, a: &ParamArgs) -> Result<Rule> {
    let level = match (a.policy, a.level) {
        (Some(Policy::Mean), Some(_)) => bail!("--level applies to the fixed policy only"),
        (Some(Policy::Mean), None) => Some(Level::Mean),
        (Some(Policy::Fixed), l) => Some(Level::Fixed(l)),
        (None, Some(l)) => Some(Level::Fixed(Some(l))),
        (None, None) => None,
    };
    let criterion = match a.criterion {
        Some(0) => bail!("--criterion is 1-based"),
        c => c.map(|c| c - 1),
    };
    Rule::from_id(id, RuleParams { q: a.q, k: a.k, criterion, level }).map_err(|e| anyhow!("{e}"))
}

fn conditions_of(list: &[String]) -> Result<CondSet> {
    if list.is_empty() {
        return Ok(CondSet::ALL);
    }
    list.iter()
        .map(|s| Condition::parse(s.trim()).ok_or_else(|| anyhow!("unknown condition `{s}` (use H, C, O, ACA, M1, M2, SM, NC)")))
        .collect()
}

fn read_profile(path: &PathBuf) -> Result<Profile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_profile(&text).with_context(|| format!("{}", path.display()))
}

/// Writes to stdout; a closed pipe (e.g. `| head`) ends the process quietly.
fn emit(args: std::fmt::Arguments) {
    use std::io::Write;
    if let Err(e) = std::io::stdout().lock().write_fmt(args) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

macro_rules! out {
    ($($t:tt)*) => { emit(format_args!($($t)*)) };
}

macro_rules! outln {
    ($($t:tt)*) => { emit(format_args!("{}\n", format_args!($($t)*))) };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let machine = cli.format == Format::Machine;
    match &cli.cmd {
        Cmd::Eval { file, rule, params, subset, trace } => {
            let rule = usage(rule_of(rule, params))?;
            let text = usage(std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display())))?;
            // Relation files carry a `mu:` block; rules that need the profile
            // itself are evaluated on a realizing profile.
            let (p, rel) = if text.lines().any(|l| l.trim_start().starts_with("mu:")) {
                let r = usage(parse_relation(&text).map_err(anyhow::Error::from))?;
                let mut p = choice_core::mcgarvey::realize(&r.relation);
                p = Profile::new(r.labels.clone(), p.orders().to_vec()).expect("same size");
                (p, Some(r.relation))
            } else {
                (usage(parse_profile(&text).map_err(anyhow::Error::from))?, None)
            };
            usage(rule.validate(p.m(), p.n()).map_err(|e| anyhow!("{e}")))?;
            let x = match subset {
                None => p.universe(),
                Some(s) => usage(p.set_of(s).ok_or_else(|| anyhow!("`{s}` is not a set of known labels")))?,
            };
            let t = Tally::new(&p);
            let (mut c, tr) = rule.choose_traced(&t, x);
            if let Some(c2) = rel.as_ref().and_then(|r| rule.choose_on_relation(r, x)) {
                c = c2;
            }
            if machine {
                let v = serde_json::json!({
                    "rule": rule.describe(),
                    "presented": report::fmt_set(&p, x),
                    "choice": c.iter().map(|a| p.label(a)).collect::<Vec<_>>(),
                    "rounds": tr.as_ref().map(|tr| tr.rounds.iter().map(|r| serde_json::json!({
                        "scores": r.survivors.iter().map(|a| (p.label(a).to_string(), r.scores[a])).collect::<std::collections::BTreeMap<_, _>>(),
                        "eliminated": r.eliminated.iter().map(|a| p.label(a)).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>()),
                });
                outln!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                if *trace {
                    match &tr {
                        Some(tr) => out!("{}", report::trace_text(&p, tr)),
                        None => eprintln!("note: {} is not an iterative rule; no trace", rule.describe()),
                    }
                }
                outln!("{}", report::fmt_set(&p, c));
                if c == AltSet::EMPTY {
                    eprintln!("note: empty choice");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Check { rule, conditions, params, budget, profile } => {
            let rule = usage(rule_of(rule, params))?;
            let conds = usage(conditions_of(conditions))?;
            let verdicts = match profile {
                Some(path) => {
                    let p = usage(read_profile(path))?;
                    check_profile(rule, conds, &p, MoveScope::Exhaustive)
                }
                None => {
                    let b = budget.budget(SearchBudget::standard());
                    usage(b.validate().map_err(anyhow::Error::from))?;
                    run_budget(rule, conds, &b)?.0
                }
            };
            let expected = TABLE2.iter().find(|r| r.rule == rule);
            let mut code = ExitCode::SUCCESS;
            let views: Vec<VerdictView> = verdicts.iter().map(VerdictView::new).collect();
            for v in &verdicts {
                if v.violated() && expected.is_some_and(|r| r.expects(v.condition)) {
                    code = ExitCode::from(1);
                }
            }
            if machine {
                outln!("{}", serde_json::to_string_pretty(&serde_json::json!({ "rule": rule.describe(), "verdicts": views }))?);
            } else {
                for v in &views {
                    out!("{}", report::verdict_text(&rule.describe(), v));
                }
            }
            Ok(code)
        }
        Cmd::Table2 { rules, conditions, budget, no_fallback, witness_dir } => {
            let conds = usage(conditions_of(conditions))?;
            let rows = table2::select_rows(rules);
            if rows.is_empty() {
                return Err(Usage(anyhow!("no row matches {rules:?}")).into());
            }
            let b = budget.budget(table2::default_budget());
            usage(b.validate().map_err(anyhow::Error::from))?;
            let r = table2::run(&rows, conds, &b, !no_fallback)?;
            if let Some(dir) = witness_dir {
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for w in report::cell_witnesses(&r) {
                    let path = dir.join(format!("{}-{}.json", w.row, w.condition));
                    std::fs::write(&path, serde_json::to_string_pretty(&w)?)?;
                    eprintln!("witness: {}", path.display());
                }
            }
            if machine {
                outln!("{}", report::table2_json(&r));
            } else {
                out!("{}", report::table2_text(&r));
            }
            Ok(if r.disagreements().next().is_some() { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Cmd::Fixtures { filter } => {
            let results: Vec<_> = fixtures::corpus()
                .iter()
                .filter(|f| filter.as_ref().is_none_or(|s| f.name.contains(s.as_str())))
                .map(fixtures::replay)
                .collect();
            if machine {
                outln!("{}", serde_json::to_string_pretty(&results)?);
            } else {
                out!("{}", report::fixtures_text(&results));
            }
            let failed = results.iter().any(|r| r.excluded.is_none() && !r.pass());
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Cmd::Gen { m, n, seed } => {
            if !(1..=choice_core::MAX_ALTS).contains(m) || !(1..=choice_core::MAX_CRITERIA).contains(n) {
                return Err(Usage(anyhow!("need 1 <= m <= {} and 1 <= n <= {}", choice_core::MAX_ALTS, choice_core::MAX_CRITERIA)).into());
            }
            if *m > 8 {
                return Err(Usage(anyhow!("gen supports m <= 8")).into());
            }
            let orders = all_orders(*m);
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let picked = (0..*n).map(|_| orders[rng.gen_range(0..orders.len())]).collect();
            let p = Profile::new((0..*m).map(default_label).collect(), picked).expect("valid profile");
            out!("{}", write_profile(&p));
            Ok(ExitCode::SUCCESS)
        }
    }
}
