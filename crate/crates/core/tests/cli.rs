use std::process::{Command, Output};

use epicomp::kripke::load_model_with_witness;
use epicomp::semantics::satisfies;

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}.km", env!("CARGO_MANIFEST_DIR"))
}

fn epicomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epicomp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_prints_truth_value() {
    let o = epicomp(&[
        "eval",
        "-m",
        &fixture("fig3"),
        "-w",
        "u",
        "-f",
        "[{a} < {b}]",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true\n");
    let o = epicomp(&[
        "eval",
        "-m",
        &fixture("fig3"),
        "-w",
        "t",
        "-f",
        "[{a} < {b}]",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "false\n");
}

#[test]
fn unknown_world_is_exit_2() {
    let o = epicomp(&["eval", "-m", &fixture("fig3"), "-w", "x", "-f", "p"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown world 'x'"), "{}", stderr(&o));
}

#[test]
fn strict_atoms_flag() {
    let args = ["eval", "-m", &fixture("fig3"), "-w", "u", "-f", "p | T1"];
    assert_eq!(epicomp(&args).status.code(), Some(0));
    let mut strict = args.to_vec();
    strict.push("--strict-atoms");
    assert_eq!(epicomp(&strict).status.code(), Some(2));
}

#[test]
fn valid_with_extension() {
    let o = epicomp(&[
        "valid",
        "-m",
        &fixture("fig3"),
        "-f",
        "[{b} < {a}]",
        "--show-extension",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "false\nextension: {s}\n");
    let o = epicomp(&[
        "valid",
        "-m",
        &fixture("fig1"),
        "-f",
        "C{a,b,c} [{a,b} < {c}]",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn classify_reports_class() {
    let o = epicomp(&["classify", "-m", &fixture("fig2")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("class: S4\n"));
    let o = epicomp(&["classify", "-m", &fixture("fig1")]);
    assert!(stdout(&o).ends_with("class: S5\n"));
}

#[test]
fn search_without_countermodel() {
    let o = epicomp(&[
        "search",
        "--frame",
        "s5",
        "--agents",
        "2",
        "--max-worlds",
        "4",
        "-f",
        "[{a} <= {b}] -> D{a}[{a} <= {b}]",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("NO COUNTERMODEL up to bound ("));
}

#[test]
fn search_countermodel_reparses_and_refutes() {
    let text = "[{a} <= {b}] -> D{a}[{a} <= {b}]";
    let o = epicomp(&[
        "search",
        "--frame",
        "s4",
        "--agents",
        "2",
        "--max-worlds",
        "3",
        "-f",
        text,
    ]);
    assert_eq!(o.status.code(), Some(1));
    let (m, w) = load_model_with_witness(&stdout(&o)).unwrap();
    assert_eq!(m.worlds().len(), 2);
    assert!(!satisfies(&m, &w.unwrap(), &text.parse().unwrap()).unwrap());
}

#[test]
fn search_bound_errors_are_exit_2() {
    for args in [
        vec!["search", "--frame", "s5", "--max-worlds", "9", "-f", "p"],
        vec!["search", "--frame", "s5", "--agents", "1", "-f", "D{b} p"],
        vec!["search", "--frame", "s5", "--jobs", "0", "-f", "p"],
        vec!["search", "--frame", "none", "-f", "p"],
        vec!["search", "--frame", "s5"],
    ] {
        let o = epicomp(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn model_errors_name_the_line() {
    let dir = std::env::temp_dir().join(format!("epicomp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.km");
    std::fs::write(&path, "agents: a\nworlds: x y\nrel a: (x,z)\n").unwrap();
    let o = epicomp(&["classify", "-m", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn close_emits_a_closed_model() {
    let dir = std::env::temp_dir().join(format!("epicomp-close-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("open.km");
    std::fs::write(&path, "agents: a\nworlds: x y z\nrel a: (x,y) (y,z)\n").unwrap();
    let o = epicomp(&[
        "close",
        "-m",
        path.to_str().unwrap(),
        "--props",
        "reflexive,transitive",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let closed = dir.join("closed.km");
    std::fs::write(&closed, stdout(&o)).unwrap();
    let o = epicomp(&["classify", "-m", closed.to_str().unwrap()]);
    assert!(stdout(&o).ends_with("class: S4\n"), "{}", stdout(&o));
    let o = epicomp(&["close", "-m", path.to_str().unwrap(), "--props", "shiny"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn corpus_table_and_list() {
    let o = epicomp(&["corpus", "--id", "FIX-"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out
        .lines()
        .skip(1)
        .take_while(|l| l.starts_with("FIX-"))
        .all(|l| l.contains(" PASS ")));
    assert!(out.ends_with("16/16 claims passed\n"), "{out}");

    let o = epicomp(&["corpus", "--list", "--frame", "s4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("S4-KS-FAIL")));
    assert!(!out.lines().any(|l| l.starts_with("S5-")));
}
