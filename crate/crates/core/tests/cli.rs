mod support;

use std::path::Path;
use std::process::{Command, Output};

use support::corpus_path;
use twistlab::io::load_file;
use twistlab::residuated::check_residuated;

fn twistlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistlab")).args(args).output().unwrap()
}

fn on(file: &str, args: &[&str]) -> Output {
    let path = corpus_path(file);
    let mut all = vec![args[0], path.to_str().unwrap()];
    all.extend(&args[1..]);
    twistlab(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("twistlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn n5_sublattice_failure() {
    let o = on("n5.alg", &["pa", "--focal", "a", "--what", "sublattice"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("(a,b) ⊔ (c,b) = (1,b) ∉ P_a"), "{}", stdout(&o));
    let o = on("n5.alg", &["pa", "--focal", "a", "--what", "sublattice", "--all-witnesses"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("(a,1) ⊔ (c,b) = (1,b) ∉ P_a"), "{}", stdout(&o));
}

#[test]
fn l6_bc_closure_failure() {
    let o = on("l6.alg", &["pa", "--focal", "d", "--what", "closure-bc", "--all-witnesses"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("(c,d) ⊙ (d,b) = (a,c) ∉ P_d"), "{}", stdout(&o));
}

#[test]
fn chain4_twist_summary() {
    let o = on("chain4.alg", &["twist", "--flavor", "bc"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).starts_with("commutative residuated: pass; integral: fail (unit (1,1) ≠ top (1,0))"), "{}", stdout(&o));
}

#[test]
fn twist_out_round_trips() {
    let out = scratch("l6-dn.alg");
    let o = on("l6.alg", &["twist", "--flavor", "dn", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let t = load_file(&out).unwrap();
    assert_eq!(t.lattice.size(), 36);
    let r = t.structure.unwrap();
    assert!(check_residuated(&r).passed());
    assert!(r.is_integral());
    let o = twistlab(&["check", out.to_str().unwrap(), "--what", "dnl"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn check_subcommands() {
    assert_eq!(code(&on("l6.alg", &["check", "--what", "mv"])), 0);
    assert_eq!(code(&on("l6.alg", &["check"])), 0);
    assert_eq!(code(&on("chain4.alg", &["check", "--what", "prop1"])), 0);
    let o = on("chain4.alg", &["check", "--what", "dnl"]);
    assert_eq!(code(&o), 1);
    assert_eq!(code(&on("n5.alg", &["check", "--what", "distributive"])), 1);
    assert_eq!(code(&on("chain4.alg", &["check", "--what", "distributive"])), 0);
}

#[test]
fn pa_subcommands() {
    assert_eq!(code(&on("l6.alg", &["pa", "--focal", "a", "--what", "cor2"])), 0);
    assert_eq!(code(&on("chain4.alg", &["pa", "--focal", "a", "--what", "th4"])), 0);
    assert_eq!(code(&on("chain4.alg", &["pa", "--focal", "a", "--what", "kleene"])), 0);
    assert_eq!(code(&on("l6.alg", &["pa", "--focal", "a", "--what", "th3"])), 0);
    assert_eq!(code(&on("l6.alg", &["pa", "--focal", "a", "--what", "triviality"])), 0);
    assert_eq!(code(&on("trivial.alg", &["pa", "--focal", "0", "--what", "triviality"])), 0);
}

#[test]
fn usage_and_validation_errors_exit_2() {
    assert_eq!(code(&twistlab(&["bogus"])), 2);
    assert_eq!(code(&on("chain4.alg", &["pa", "--focal", "zz"])), 2);
    assert_eq!(code(&on("n5.alg", &["twist", "--flavor", "bc"])), 2);
    assert_eq!(code(&on("chain4.alg", &["pa", "--focal", "a", "--what", "triviality"])), 2);
    assert_eq!(code(&on("chain4.alg", &["pa", "--focal", "a", "--what", "th4", "--all-witnesses"])), 2);
    assert_eq!(code(&twistlab(&["search", "--max-size", "9", "--target", "th3"])), 2);
    assert_eq!(code(&twistlab(&["search", "--max-size", "3", "--target", "th9"])), 2);
    assert_eq!(code(&twistlab(&["check", "/nonexistent.alg"])), 2);
}

#[test]
fn syntax_error_reports_position() {
    let bad = scratch("bad.alg");
    std::fs::write(&bad, "name = \"x\"\nelements = [\"0\", \"1\"]\ncovers = [[\"0\" \"1\"]]\n").unwrap();
    let o = twistlab(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn imp_mismatch_is_rejected() {
    let text = std::fs::read_to_string(corpus_path("chain4.alg")).unwrap();
    // chain4 is Gödel, so a→0 = 0; claim it is 1
    let row = "[\"a\", \"0\", \"0\"],\n  [\"a\", \"a\", \"1\"]";
    let tampered = text.replacen(row, &row.replacen("\"0\"]", "\"1\"]", 1), 1);
    assert_ne!(tampered, text, "chain4.alg layout changed");
    let path = scratch("mismatch.alg");
    std::fs::write(&path, tampered).unwrap();
    let o = twistlab(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("imp"));
}

#[test]
fn render_dot() {
    let o = on("chain4.alg", &["render", "--format", "dot", "--highlight", "a"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "digraph hasse {\n  rankdir=BT;\n  n0 [label=\"0\"];\n  n1 [label=\"a\", style=filled, fillcolor=lightgrey];\n  n2 [label=\"b\"];\n  n3 [label=\"1\"];\n  n0 -> n1;\n  n1 -> n2;\n  n2 -> n3;\n}\n"
    );
    let o = on("chain4.alg", &["render", "--pa", "a", "--highlight", "(a,a),(0,1)"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.matches("[label=").count(), 11);
    assert_eq!(text.matches(" -> ").count(), 14);
    assert_eq!(text.matches("fillcolor").count(), 2);
}

#[test]
fn search_verify_and_falsify() {
    let o = twistlab(&["search", "--max-size", "4", "--target", "th3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = twistlab(&["search", "--max-size", "4", "--target", "th4", "--without", "comparable_with_all"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

fn strip_comments(text: &str) -> String {
    text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect()
}

#[test]
fn fixtures_are_reproduced_by_search() {
    for (target, flag) in [("dnclosure", "idempotent"), ("th4", "meet_irreducible"), ("cor2", "atom")] {
        let fixture = corpus_path(&format!("fixtures/{target}-without-{}.alg", flag.replace('_', "-")));
        let out = scratch(&format!("{target}.alg"));
        let o = twistlab(&["search", "--max-size", "6", "--target", target, "--without", flag, "--out", out.to_str().unwrap()]);
        assert_eq!(code(&o), 1, "{}", stdout(&o));
        let expected = strip_comments(&std::fs::read_to_string(Path::new(&fixture)).unwrap());
        assert_eq!(std::fs::read_to_string(&out).unwrap(), expected, "{target}");
    }
}
