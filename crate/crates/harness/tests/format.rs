use choice_core::{LinearOrder, MajorityRelation, Profile};
use choice_harness::format::{parse_profile, parse_relation, write_profile, write_relation};
use proptest::prelude::*;

fn profile() -> impl Strategy<Value = Profile> {
    (1usize..=8, 1usize..=9).prop_flat_map(|(m, n)| {
        let order = Just((0..m).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| LinearOrder::new(&v).unwrap());
        prop::collection::vec(order, n).prop_map(move |o| Profile::from_orders(m, o).unwrap())
    })
}

fn relation() -> impl Strategy<Value = (usize, Vec<Vec<bool>>)> {
    (1usize..=8).prop_flat_map(|m| {
        prop::collection::vec(0u8..3, m * m).prop_map(move |cells| {
            let mut rows = vec![vec![false; m]; m];
            for a in 0..m {
                for b in a + 1..m {
                    match cells[a * m + b] {
                        1 => rows[a][b] = true,
                        2 => rows[b][a] = true,
                        _ => {}
                    }
                }
            }
            (m, rows)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn profiles_round_trip(p in profile()) {
        let text = write_profile(&p);
        prop_assert_eq!(parse_profile(&text).unwrap(), p);
    }

    #[test]
    fn relations_round_trip((m, rows) in relation()) {
        let rel = MajorityRelation::from_matrix(&rows).unwrap();
        let labels: Vec<String> = (0..m).map(choice_core::profile::default_label).collect();
        let back = parse_relation(&write_relation(&labels, &rel)).unwrap();
        prop_assert_eq!(back.labels, labels);
        prop_assert_eq!(back.relation, rel);
    }
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let p = parse_profile("# header\n\nalternatives: x y   # two\norder: y x\n\norder: x y # tail\n").unwrap();
    assert_eq!((p.m(), p.n()), (2, 2));
    assert_eq!(p.labels(), ["x", "y"]);
}

#[test]
fn re8_data_file_parses() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/re8.txt")).unwrap();
    let p = parse_profile(&text).unwrap();
    assert_eq!((p.m(), p.n()), (4, 8));
}
