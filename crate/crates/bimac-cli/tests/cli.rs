use std::process::Command;

use bimac::coeffs::{rf, RatFunc};
use bimac_cli::args::Format;
use bimac_cli::document::Document;
use bimac_cli::{execute, render, Cli};
use clap::Parser;

fn bimac(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bimac")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn document(args: &[&str]) -> Document {
    let cli = Cli::try_parse_from(std::iter::once("bimac").chain(args.iter().copied())).expect("arguments parse");
    execute(&cli).expect("command succeeds")
}

fn coeff_of(doc: &Document, label: &str) -> RatFunc {
    let Document::Expansion(e) = doc else { panic!("not an expansion: {doc:?}") };
    let term = e.terms.iter().find(|t| t.label == label).expect("label present");
    RatFunc::parse(&term.coeff).expect("coefficient parses")
}

#[test]
fn expansions_of_the_two_degree_two_displays() {
    let stable = document(&["expand", "∅|2", "P", "SM"]);
    assert_eq!(coeff_of(&stable, "∅|2"), rf("1"));
    assert_eq!(coeff_of(&stable, "∅|1,1"), rf("(1-t)*(1+q*t)/(1-q*t^2)"));
    let first = document(&["expand", "0;2", "P", "SM"]);
    assert_eq!(coeff_of(&first, "∅|1,1"), rf("(1-t)*(1+q)/(1-q*t)"));
    assert_eq!(coeff_of(&first, "1|1"), rf("(1-t)/(1-q*t)"));
    let trivial = document(&["expand", "∅|∅", "P"]);
    let Document::Expansion(e) = trivial else { panic!() };
    assert_eq!(e.terms.len(), 1);
    assert_eq!((e.terms[0].label.as_str(), e.terms[0].coeff.as_str()), ("∅|∅", "1"));
}

#[test]
fn kostka_tables_follow_the_reference_layout() {
    let Document::Table(one) = document(&["kostka", "1"]) else { panic!() };
    assert_eq!(one.entries, [["1", "q"], ["t", "1"]]);
    let Document::Table(two) = document(&["kostka", "2"]) else { panic!() };
    let row: Vec<RatFunc> = two.entries[0].iter().map(|s| rf(s)).collect();
    assert_eq!(two.rows[0], "2|∅");
    assert_eq!(row, ["1", "q", "q+q^2", "q^2", "q^3"].map(rf));
    let Document::Table(three) = document(&["kostka", "3"]) else { panic!() };
    assert_eq!(rf(three.entry("3|∅", "∅|1,1,1").unwrap()), rf("q^6"));
    let Document::Table(sup) = document(&["kostka", "4", "super", "--m", "2"]) else { panic!() };
    assert_eq!(rf(sup.entry("2,0;2", "3,1;").unwrap()), rf("t+q*t^2"));
}

#[test]
fn nabla_reports_exact_and_integer_pairings() {
    let Document::Nabla(n) = document(&["nabla", "2"]) else { panic!() };
    assert_eq!((n.catalan_at_one.as_str(), n.dimension_at_one.as_str(), n.sign_row.as_str()), ("6", "25", "1"));
    let Document::Nabla(n) = document(&["nabla", "3"]) else { panic!() };
    assert_eq!(n.dimension_at_one, "343");
}

#[test]
fn named_suites_pass() {
    for args in [
        &["verify", "factorization", "--max-n", "3"][..],
        &["verify", "appendixD"],
        &["verify", "kos1", "--max-n", "3"],
        &["verify", "kdiffm"],
    ] {
        let doc = document(args);
        let Document::Report(r) = &doc else { panic!() };
        assert!(r.passed, "{args:?}: {:?}", r.results.iter().filter(|c| !c.holds()).collect::<Vec<_>>());
        assert!(r.checked > 0);
    }
    let Document::Report(r) = document(&["verify", "appendixD"]) else { panic!() };
    assert_eq!(r.checked, 4 + 25 + 100);
}

#[test]
fn every_document_kind_round_trips_through_json() {
    let docs = [
        document(&["expand", "2,1|1", "H", "SS"]),
        document(&["expand", "1,0;1", "J", "SSCHUR"]),
        document(&["kostka", "2"]),
        document(&["nabla", "2", "sqrtB"]),
        document(&["evaluate", "1,0;1", "--N", "4"]),
        document(&["verify", "stability"]),
        document(&["sweep", "|2", "--max-n", "3"]),
    ];
    for doc in docs {
        let json = doc.to_json();
        assert_eq!(Document::from_json(&json).expect("re-parses"), doc);
        let again = render::render(&doc, Format::Json).unwrap();
        assert_eq!(again, json);
    }
}

#[test]
fn output_is_deterministic_for_a_fixed_seed() {
    let run = |seed: &str| bimac(&["verify", "psi", "--seed", seed, "--format", "json"]);
    let (a, b) = (run("7"), run("7"));
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    assert_ne!(run("8").1, a.1);
    for format in ["text", "csv", "latex", "json"] {
        let args = ["kostka", "2", "--format", format];
        assert_eq!(bimac(&args).1, bimac(&args).1, "{format}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(bimac(&["verify", "lemdo", "--max-n", "2"]).0, 0);
    assert_eq!(bimac(&["verify", "unknown"]).0, 2);
    assert_eq!(bimac(&["expand", "not-a-label"]).0, 2);
    assert_eq!(bimac(&["expand", "0;2", "Q"]).0, 2);
    assert_eq!(bimac(&["expand", "1|1", "P", "SSCHUR"]).0, 2);
    assert_eq!(bimac(&["evaluate", "1|1"]).0, 2);
    assert_eq!(bimac(&["evaluate", "2,1,0;", "--N", "1"]).0, 2);
    assert_eq!(bimac(&["kostka", "3", "super"]).0, 2);
    let (code, _, err) = bimac(&["expand", "1|1", "P", "XX"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn report_is_written_to_the_requested_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, stdout, _) = bimac(&["verify", "kernel", "--max-n", "2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let Document::Report(r) = Document::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap() else {
        panic!()
    };
    assert_eq!(r.suite, "kernel");
    assert!(r.results.iter().all(|c| c.witness.is_none()));
}

#[test]
fn csv_tables_have_a_header_and_one_line_per_row() {
    let (code, stdout, _) = bimac(&["kostka", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut reader = csv::Reader::from_reader(stdout.as_bytes());
    assert_eq!(reader.headers().unwrap().len(), 6);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(&rows[0][0], "2|∅");
}

#[test]
fn latex_tables_mirror_the_reference_convention() {
    let (_, stdout, _) = bimac(&["kostka", "3", "--format", "latex"]);
    assert!(stdout.contains(r"$(1^3),\emptyset$"));
    assert!(stdout.contains(r"$\emptyset,(2,1)$ & $t^{4}$"));
}
