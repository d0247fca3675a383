use std::process::{Command, Output};

use serde_json::Value;

fn arcalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcalg"))
        .args(args)
        .env_remove("ARCALG_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = arcalg(&all);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn sl2_product() {
    let o = arcalg(&["mult", "--n", "1", "--left", "a|b|1", "--right", "b|a|1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "a|a|X⊗1");
    let v = json(&["mult", "--n", "1", "--left", "a|b|1", "--right", "b|a|1"]);
    assert_eq!(v["product"]["a|a|X⊗1"], "1/1");
    let o = arcalg(&["mult", "--n", "1", "--left", "a|b|1", "--right", "a|b|1"]);
    assert_eq!(stdout(&o).trim(), "0");
    // sequences may be given as sign words
    let o = arcalg(&[
        "mult", "--n", "1", "--left", "-+|+-|1", "--right", "+-|-+|1",
    ]);
    assert_eq!(stdout(&o).trim(), "a|a|X⊗1");
}

#[test]
fn enumeration() {
    let v = json(&["enum", "--n", "2"]);
    let seqs = v["sequences"].as_array().unwrap();
    assert_eq!(seqs.len(), 6);
    assert_eq!(seqs.iter().filter(|s| s["cup"] == true).count(), 2);
    assert_eq!(seqs[0]["sequence"], "--++");
    assert_eq!(seqs[5]["partition"], serde_json::json!([2, 2]));
    assert!(seqs[2]["tableau"].is_null());
}

#[test]
fn relations_and_checks_exit_zero() {
    let o = arcalg(&["check-relations", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all relations hold"));
    let v = json(&["check-relations", "--n", "2"]);
    let families = v["families"].as_object().unwrap();
    assert!(families
        .values()
        .all(|f| f["failures"].as_array().unwrap().is_empty()));
    assert!(families["diamond_commutes"]["instances"].as_u64().unwrap() > 0);
    assert_eq!(arcalg(&["corner-check", "--n", "2"]).status.code(), Some(0));
    assert_eq!(arcalg(&["dims", "--n", "2"]).status.code(), Some(0));
}

#[test]
fn centers() {
    let v = json(&["center", "--n", "2"]);
    assert_eq!(v["dim"], 6);
    assert_eq!(v["top"], serde_json::json!([4, 2]));
    let v = json(&["center", "--n", "2", "--algebra", "arc"]);
    assert_eq!(v["commutator_quotient"], 6);
}

#[test]
fn tanisaki_report() {
    let v = json(&["tanisaki", "--mu", "2,2"]);
    assert_eq!(v["total"], 6);
    assert_eq!(v["top"], 2);
    assert_eq!(v["hilbert"], serde_json::json!([1, 3, 2]));
    assert_eq!(v["generators"].as_array().unwrap().len(), 12);
    assert!(v["interpolants"]
        .as_array()
        .unwrap()
        .iter()
        .all(|f| f["vanishing_failures"] == 0));
}

#[test]
fn dims_table() {
    let v = json(&["dims", "--n", "1"]);
    assert_eq!(v["table"], serde_json::json!([[2, 1], [1, 1]]));
    assert_eq!(v["total"], 5);
    let text = stdout(&arcalg(&["dims", "--n", "1"]));
    assert!(text.starts_with("   -+ +-\n-+  2  1\n"), "{text}");
}

#[test]
fn renders_are_stable() {
    let o = arcalg(&["render", "--n", "2", "--seq", "++--", "--top", "-++-"]);
    assert_eq!(stdout(&o), include_str!("golden/render_red_n2.txt"));
    assert!(stdout(&o).contains('R'));
    let o = arcalg(&["render", "--n", "1", "--seq", "a"]);
    assert_eq!(stdout(&o), include_str!("golden/render_cups_n1.txt"));
    let again = arcalg(&["render", "--n", "1", "--seq", "a"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn argument_errors_exit_one() {
    assert_eq!(arcalg(&["bogus"]).status.code(), Some(1));
    assert_eq!(
        arcalg(&["dims", "--n", "2", "--nope"]).status.code(),
        Some(1)
    );
    assert_eq!(arcalg(&["dims", "--n", "5"]).status.code(), Some(1));
    assert_eq!(arcalg(&["dims", "--n", "0"]).status.code(), Some(1));
    assert_eq!(
        arcalg(&["mult", "--n", "1", "--left", "a|b", "--right", "b|a|1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(arcalg(&["tanisaki", "--mu", "2,0"]).status.code(), Some(1));
    let o = arcalg(&["tanisaki", "--mu", "2,2", "--cutoff", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nonzero tail"));
}

#[test]
fn ascii_mode_keeps_exit_codes() {
    for args in [
        &["center", "--n", "1"][..],
        &["corner-check", "--n", "1"],
        &["tanisaki", "--mu", "1,1"],
    ] {
        let plain = arcalg(args);
        let mut with_json = args.to_vec();
        with_json.push("--json");
        assert_eq!(plain.status.code(), arcalg(&with_json).status.code());
    }
}

#[test]
fn threads_flag_is_accepted() {
    let o = Command::new(env!("CARGO_BIN_EXE_arcalg"))
        .args(["center", "--n", "2", "--json"])
        .env("ARCALG_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        arcalg(&["--threads", "3", "center", "--n", "1"])
            .status
            .code(),
        Some(0)
    );
}
