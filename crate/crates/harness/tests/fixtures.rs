use choice_harness::fixtures::replay_all;

#[test]
fn included_fixtures_pass() {
    let mut failed = Vec::new();
    for r in replay_all() {
        for c in &r.checks {
            let tag = if r.excluded.is_some() { "excluded" } else { "" };
            if !c.pass {
                println!("{} {tag}: {} expected `{}` got `{}`", r.name, c.what, c.expected, c.actual);
                if r.excluded.is_none() {
                    failed.push(r.name.clone());
                }
            }
        }
    }
    assert!(failed.is_empty(), "failing fixtures: {failed:?}");
}
