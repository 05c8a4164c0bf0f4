use choice_core::axioms::literal_choice;
use choice_core::rules::{Level, ThresholdPolicy, RULE_IDS};
use choice_core::{AltSet, LinearOrder, Profile, Rule, RuleParams, Tally};
use proptest::prelude::*;

fn all_rules() -> Vec<Rule> {
    let mut rules: Vec<Rule> = RULE_IDS.iter().map(|id| Rule::from_id(id, RuleParams::default()).unwrap()).collect();
    rules.extend([Rule::QApproval(1), Rule::QApproval(3), Rule::KStable(1), Rule::KStable(3)]);
    rules.push(Rule::SuperThreshold(ThresholdPolicy { criterion: 0, level: Level::Mean }));
    rules
}

fn order(m: usize) -> impl Strategy<Value = LinearOrder> {
    Just((0..m).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| LinearOrder::new(&v).unwrap())
}

/// A profile, a non-empty presented set, and permutations of criteria and
/// alternatives.
fn case() -> impl Strategy<Value = (Profile, AltSet, Vec<usize>, Vec<usize>)> {
    (2usize..=5, 1usize..=7).prop_flat_map(|(m, n)| {
        (
            prop::collection::vec(order(m), n),
            1u16..(1 << m),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            Just((0..m).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(orders, mask, pc, pa)| (Profile::from_orders(m, orders).unwrap(), AltSet(mask), pc, pa))
    })
}

fn image(s: AltSet, perm: &[usize]) -> AltSet {
    AltSet::from_ids(s.iter().map(|x| perm[x]))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn anonymity((p, x, pc, _) in case()) {
        let (t, tq) = (Tally::new(&p), Tally::new(&p.permute_criteria(&pc)));
        for r in all_rules().into_iter().filter(Rule::is_anonymous) {
            prop_assert_eq!(r.choose(&t, x), r.choose(&tq, x), "{}", r);
        }
    }

    #[test]
    fn neutrality((p, x, _, pa) in case()) {
        let (t, tq) = (Tally::new(&p), Tally::new(&p.relabel(&pa)));
        for r in all_rules() {
            prop_assert_eq!(image(r.choose(&t, x), &pa), r.choose(&tq, image(x, &pa)), "{}", r);
        }
    }

    #[test]
    fn choices_stay_inside_the_presented_set((p, x, _, _) in case()) {
        let t = Tally::new(&p);
        for r in all_rules() {
            let c = r.choose(&t, x);
            prop_assert!(c.is_subset(x), "{}", r);
            let may_be_empty = matches!(r, Rule::SimpleMajority | Rule::Condorcet | Rule::RunOff | Rule::Hare | Rule::Coombs | Rule::Core)
                || r == Rule::SuperThreshold(ThresholdPolicy::default());
            prop_assert!(may_be_empty || !c.is_empty(), "{} chose nothing", r);
        }
    }

    /// Evaluating on the tally with a presented set is the same as evaluating
    /// on the materialized contraction.
    #[test]
    fn contraction_is_context_free((p, x, _, _) in case()) {
        let t = Tally::new(&p);
        for r in all_rules().into_iter().filter(|r| !matches!(r, Rule::SuperThreshold(_))) {
            prop_assert_eq!(r.choose(&t, x), literal_choice(r, &p, x), "{}", r);
        }
    }

    #[test]
    fn contraction_composes((p, x, _, _) in case(), inner in 1u16..u16::MAX) {
        let y = AltSet(inner).inter(x);
        prop_assume!(!y.is_empty());
        let direct = p.contract(y).unwrap();
        let ids: Vec<usize> = x.iter().collect();
        let y_in_x = AltSet::from_ids(ids.iter().enumerate().filter(|(_, &a)| y.contains(a)).map(|(i, _)| i));
        let twice = p.contract(x).unwrap().contract(y_in_x).unwrap();
        prop_assert_eq!(direct, twice);
    }

    #[test]
    fn borda_total((p, x, _, _) in case()) {
        let t = Tally::new(&p);
        let k = x.len();
        prop_assert_eq!(x.iter().map(|a| t.borda(a, x)).sum::<usize>(), p.n() * k * (k - 1) / 2);
    }

    #[test]
    fn position_counts_are_doubly_stochastic((p, x, _, _) in case()) {
        let t = Tally::new(&p);
        let k = x.len();
        let v: Vec<_> = x.iter().map(|a| t.position_counts(a, x)).collect();
        for row in &v {
            prop_assert_eq!(row[..k].iter().map(|&c| c as usize).sum::<usize>(), p.n());
        }
        for j in 0..k {
            prop_assert_eq!(v.iter().map(|r| r[j] as usize).sum::<usize>(), p.n());
        }
    }

    #[test]
    fn pairwise_counts_sum_to_n((p, _x, _, _) in case()) {
        let t = Tally::new(&p);
        for a in 0..p.m() {
            for b in 0..p.m() {
                if a != b {
                    prop_assert_eq!(t.count(a, b) + t.count(b, a), p.n());
                }
            }
        }
    }

    #[test]
    fn black_is_condorcet_else_borda((p, x, _, _) in case()) {
        let t = Tally::new(&p);
        let w = Rule::Condorcet.choose(&t, x);
        let expect = if w.is_empty() { Rule::Borda.choose(&t, x) } else { w };
        prop_assert_eq!(Rule::Black.choose(&t, x), expect);
    }

    #[test]
    fn elimination_survivors_shrink((p, x, _, _) in case()) {
        let t = Tally::new(&p);
        for r in [Rule::RunOff, Rule::Hare, Rule::Coombs, Rule::InverseBorda, Rule::Nanson] {
            let (c, trace) = r.choose_traced(&t, x);
            let trace = trace.expect("iterative rule");
            for w in trace.rounds.windows(2) {
                prop_assert!(w[1].survivors.is_proper_subset(w[0].survivors), "{}", r);
            }
            if let Some(last) = trace.rounds.last() {
                prop_assert_eq!(last.survivors.minus(last.eliminated), c, "{}", r);
            }
        }
    }

    /// A chosen alternative stays chosen on every subset that contains it.
    #[test]
    fn fixed_super_threshold_is_contraction_invariant((p, x, _, _) in case(), inner in 1u16..u16::MAX) {
        let r = Rule::SuperThreshold(ThresholdPolicy::default());
        let t = Tally::new(&p);
        let y = AltSet(inner).inter(x);
        prop_assert!(r.choose(&t, x).inter(y).is_subset(r.choose(&t, y)));
    }

    #[test]
    fn minimal_families_are_antichains((p, x, _, _) in case()) {
        let t = Tally::new(&p);
        for r in [Rule::MinimalDominant, Rule::MinimalUndominated, Rule::MinimalWeaklyStable, Rule::KStable(2)] {
            let f = r.set_family(t.relation(), x).unwrap();
            for (i, a) in f.minimal_sets.iter().enumerate() {
                for b in &f.minimal_sets[i + 1..] {
                    prop_assert!(!a.is_subset(*b) && !b.is_subset(*a), "{}", r);
                }
            }
            prop_assert_eq!(f.union, r.choose(&t, x));
        }
    }
}
