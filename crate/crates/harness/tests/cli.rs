use std::process::{Command, Output};

const RE8: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/re8.txt");

fn choice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_choice")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_prints_the_choice() {
    for (rule, extra, expected) in [
        ("borda", vec![], "{b}"),
        ("plurality", vec![], "{a,d}"),
        ("q-approval", vec!["--q", "3"], "{c}"),
        ("copeland-1", vec![], "{b}"),
        ("nanson", vec![], "{b}"),
    ] {
        let mut args = vec!["eval", RE8, rule];
        args.extend(extra);
        let o = choice(&args);
        assert_eq!(o.status.code(), Some(0), "{rule}");
        assert_eq!(stdout(&o).trim(), expected, "{rule}");
    }
}

#[test]
fn empty_choice_is_not_an_error() {
    let o = choice(&["eval", RE8, "simple-majority"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "{}");
    assert!(String::from_utf8_lossy(&o.stderr).contains("empty choice"));
}

#[test]
fn subsets_and_traces() {
    let o = choice(&["eval", RE8, "borda", "--subset", "acd"]);
    assert_eq!(stdout(&o).trim(), "{c}");
    let o = choice(&["eval", RE8, "coombs", "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().count() > 1);
}

#[test]
fn machine_output_is_json() {
    let o = choice(&["--format", "machine", "eval", RE8, "borda"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["choice"], serde_json::json!(["b"]));
    assert_eq!(v["rule"], "borda");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(choice(&["eval", RE8, "borda", "--q", "2"]).status.code(), Some(2));
    assert_eq!(choice(&["eval", RE8, "no-such-rule"]).status.code(), Some(2));
    assert_eq!(choice(&["eval", "/nonexistent/profile.txt", "borda"]).status.code(), Some(2));
    assert_eq!(choice(&["check", "borda", "XX"]).status.code(), Some(2));
}

#[test]
fn check_exit_code_follows_the_matrix() {
    // A violation the matrix predicts is not a failure.
    let o = choice(&["check", "borda", "SM", "--m", "3", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violated"));
    let o = choice(&["check", "borda", "M1", "--m", "3", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("satisfied"));
    // One it does not predict is.
    assert_eq!(choice(&["check", "simple-majority", "O", "--m", "3", "--n", "3"]).status.code(), Some(1));
}

#[test]
fn table2_single_cells() {
    let o = choice(&["table2", "--rules", "borda", "--conditions", "M1", "--m", "3", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("+/+"));
    let o = choice(&["table2", "--rules", "condorcet", "--conditions", "O", "--m", "3", "--n", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("-/-"));
    let o = choice(&["table2", "--rules", "1", "--conditions", "O", "--m", "3", "--n", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn table2_machine_output_is_deterministic() {
    let args = ["--format", "machine", "table2", "--rules", "hare,coombs", "--m", "4", "--n", "5", "--samples", "2000", "--seed", "3"];
    let a = choice(&args);
    let b = choice(&args);
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn gen_is_seeded() {
    let a = choice(&["gen", "--m", "5", "--n", "4", "--seed", "11"]);
    assert_eq!(stdout(&a), stdout(&choice(&["gen", "--m", "5", "--n", "4", "--seed", "11"])));
    assert_ne!(stdout(&a), stdout(&choice(&["gen", "--m", "5", "--n", "4", "--seed", "12"])));
    let p = choice_harness::format::parse_profile(&stdout(&a)).unwrap();
    assert_eq!((p.m(), p.n()), (5, 4));
}

#[test]
fn fixtures_pass() {
    let o = choice(&["fixtures"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
