//! Acceptance run: evaluates the fifteen acceptance criteria with exact
//! equality and prints one PASS/FAIL line for each.
//!
//! Criteria listed in `DOCUMENTED_FAILURES` are known to be unattainable as
//! stated. They still print FAIL with the reason. The run exits non-zero on
//! any other failure, or on every failure when `BIMAC_ACCEPTANCE_STRICT=1`.

use std::process::ExitCode;
use std::time::Instant;

use bimac::bisym::*;
use bimac::coeffs::{RatFunc, Var};
use bimac::macdonald::{b_norm, McParams};
use bimac::nabla::{catalan_b, dim_pairing, nabla_on_s_empty_n, nabla_on_s_empty_n_operator, nabla_pairings};
use bimac::partitions::{PairLabel, Partition, SuperPartition};
use bimac::superspace::*;
use bimac_cli::args::Variant;
use bimac_cli::commands;
use bimac_cli::document::Document;
use bimac_cli::golden::kostka_tables;
use num_bigint::BigInt;

/// Criteria whose stated targets contradict the exact values, with the reason.
const DOCUMENTED_FAILURES: &[(usize, &str)] =
    &[(10, "dim_pairing(1) at q=t=1 is (2n+1)^n = 3; the criterion lists 9")];

type Outcome = Result<Option<String>, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rf(s: &str) -> RatFunc {
    RatFunc::parse(s).expect("literal parses")
}

fn sp(s: &str) -> SuperPartition {
    s.parse().expect("literal parses")
}

fn pairs_up_to(n: usize) -> impl Iterator<Item = PairLabel> {
    (0..=n).flat_map(PairLabel::all)
}

/// Collects the messages of failed checks.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn require_ok<T>(&mut self, r: Result<T, impl std::fmt::Display>, what: &str) -> Option<T> {
        r.map_err(|e| self.0.push(format!("{what}: {e}"))).ok()
    }

    fn finish(self, note: Option<String>) -> Outcome {
        match self.0.len() {
            0 => Ok(note),
            n => {
                let mut shown: Vec<String> = self.0.into_iter().take(3).collect();
                if n > 3 {
                    shown.push(format!("{} more", n - 3));
                }
                Err(shown.join("; "))
            }
        }
    }
}

fn appendix_tables() -> Outcome {
    let mut f = Failures::default();
    let mut counts = Vec::new();
    for table in kostka_tables() {
        match f.require_ok(commands::kostka(table.degree, Variant::Double, None), "kostka") {
            Some(Document::Table(t)) => {
                let results = table.compare(&t);
                counts.push(results.iter().filter(|r| r.holds()).count());
                for r in results.into_iter().filter(|r| !r.holds()) {
                    f.0.push(format!("{}: {}", r.instance, r.witness.unwrap_or_default()));
                }
            }
            _ => f.0.push(format!("degree {} produced no table", table.degree)),
        }
    }
    f.require(counts == [4, 25, 100], || format!("matching entries per table {counts:?}"));
    f.finish(None)
}

fn factorization() -> Outcome {
    let mut f = Failures::default();
    let mut count = 0;
    for l in pairs_up_to(4) {
        count += 1;
        if let Some(oracle) = f.require_ok(double_p_oracle(&l), "oracle") {
            f.require(double_p_factorized(&l) == oracle, || format!("{l}"));
        }
    }
    f.finish(Some(format!("{count} pairs")))
}

fn intro_displays() -> Outcome {
    let mut f = Failures::default();
    let first = BiSymPoly::from_terms(
        BiBasis::SM,
        [
            (PairLabel::of(&[], &[2]), RatFunc::one()),
            (PairLabel::of(&[], &[1, 1]), rf("(1-t)*(1+q)/(1-q*t)")),
            (PairLabel::of(&[1], &[1]), rf("(1-t)/(1-q*t)")),
        ],
    );
    let stable = BiSymPoly::from_terms(
        BiBasis::SM,
        [
            (PairLabel::of(&[], &[2]), RatFunc::one()),
            (PairLabel::of(&[], &[1, 1]), rf("(1-t)*(1+q*t)/(1-q*t^2)")),
        ],
    );
    if let Some(p) = f.require_ok(super_p(&sp("0;2")), "m = 1") {
        f.require(p == first, || format!("m = 1: {p}"));
        f.require(p != stable, || "m = 1 agrees with the stable expansion".into());
    }
    for label in ["1,0;2", "2,1,0;2", "3,2,1,0;2"] {
        if let Some(p) = f.require_ok(super_p(&sp(label)), label) {
            f.require(p == stable, || format!("{label}: {p}"));
        }
    }
    f.finish(None)
}

fn scalar_equivalence() -> Outcome {
    let mut f = Failures::default();
    for n in 0..=3 {
        let labels = PairLabel::all(n);
        for a in &labels {
            let fa = BiSymPoly::basis_element(BiBasis::SM, a.clone());
            for b in &labels {
                let fb = BiSymPoly::basis_element(BiBasis::SM, b.clone());
                f.require(biscalar_qt(&fa, &fb) == biscalar_primed(&fa, &fb), || format!("<m[{a}], m[{b}]>"));
            }
        }
    }
    f.finish(None)
}

fn norms() -> Outcome {
    let mut f = Failures::default();
    for l in pairs_up_to(3) {
        let p = double_p(&l);
        let b = RatFunc::q()
            .pow(l.lam.size() as u32)
            .inv()
            .expect("q ≠ 0")
            .mul(&b_norm(&l.lam, &McParams::x_factor()))
            .mul(&b_norm(&l.mu, &McParams::y_factor()));
        f.require(biscalar_qt(&p, &p).mul(&b).is_one(), || format!("{l}"));
    }
    f.finish(None)
}

fn duality() -> Outcome {
    let mut f = Failures::default();
    let (qi, ti) = (RatFunc::q().inv().expect("q ≠ 0"), RatFunc::t().inv().expect("t ≠ 0"));
    let swap = [(Var::Q, ti), (Var::T, qi)];
    for l in pairs_up_to(3) {
        let lhs = omega_b(&double_p(&l), &RatFunc::q(), &RatFunc::t()).to_basis(BiBasis::SM);
        if let Some(rhs) = f.require_ok(double_q(&l.dual()).substitute(&swap), "substitution") {
            f.require(lhs == rhs.to_basis(BiBasis::SM), || format!("{l}"));
        }
    }
    f.finish(None)
}

fn lr_identity() -> Outcome {
    let mut f = Failures::default();
    let parts: Vec<Partition> = (0..=3).flat_map(Partition::all).collect();
    let mut count = 0;
    for lam in &parts {
        for mu in &parts {
            for nu in &parts {
                for om in parts.iter().filter(|om| lam.size() + mu.size() == nu.size() + om.size()) {
                    count += 1;
                    let expected = BigInt::from(i32::from(lam == nu && mu == om));
                    f.require(lr4_identity(lam, mu, nu, om) == expected, || format!("({lam};{mu};{nu};{om})"));
                }
            }
        }
    }
    f.finish(Some(format!("{count} quadruples")))
}

fn evaluation() -> Outcome {
    let mut f = Failures::default();
    for l in pairs_up_to(2) {
        for (m, n_vars) in [(2, 5), (3, 7)] {
            let what = format!("{l} m={m} N={n_vars}");
            let closed = f.require_ok(evaluate_closed(&l, n_vars, m), &what);
            let explicit = f.require_ok(evaluate_explicit(&l, n_vars, m), &what);
            f.require(closed.is_some() && closed == explicit, || what);
        }
    }
    f.finish(None)
}

fn kostka_structure() -> Outcome {
    let mut f = Failures::default();
    for n in 0..=3 {
        let mat = kostka_matrix(n);
        f.require(mat.entries.iter().flatten().all(RatFunc::is_nonneg_polynomial), || format!("positivity n={n}"));
        f.require(kostka_symmetries_check(n).holds(), || format!("symmetries n={n}"));
        let schur = KostkaSpecials::schur_labels(n);
        for l in PairLabel::all(n) {
            let specials = kostka_specials(&l);
            for (s, v) in schur.iter().zip(specials.values()) {
                let k = f.require_ok(double_kostka(s, &l), "kostka");
                f.require(k.as_ref() == Some(v), || format!("special K[{s}; {l}]"));
            }
            let sum = f.require_ok(dimension_square_sum(&l), "squares");
            f.require(sum == Some(hyperoctahedral_order(n)), || format!("Σ K(1,1)² at {l}"));
        }
    }
    let schur = PairLabel::of(&[2, 1], &[1]);
    for l in PairLabel::all(4) {
        let v = double_kostka(&schur, &l).and_then(|k| Ok(k.at_one()?));
        f.require(v == Ok(RatFunc::from_int(8)), || format!("K[{schur}; {l}](1,1) = {v:?}"));
    }
    f.finish(None)
}

fn nabla_closed_forms() -> Outcome {
    let mut f = Failures::default();
    for n in 1..=3 {
        let image = nabla_on_s_empty_n(n);
        f.require(image == nabla_on_s_empty_n_operator(n), || format!("operator route n={n}"));
        f.require(nabla_pairings(&image, n).catalan == catalan_b(n), || format!("catalan pairing n={n}"));
    }
    f.require(catalan_b(2).at_one() == Ok(rf("6")), || "catalan_B(2) at q=t=1".into());
    for (n, listed) in [(1, 9), (2, 25), (3, 343)] {
        let v = dim_pairing(n).at_one();
        f.require(v == Ok(RatFunc::from_int(listed)), || {
            format!("dim_pairing({n}) at q=t=1 is {}, listed {listed}", v.map_or_else(|e| e.to_string(), |x| x.to_string()))
        });
    }
    for n in 1..=4 {
        f.require(nabla_pairings(&nabla_on_s_empty_n(n), n).sign_row.is_one(), || format!("coro1 n={n}"));
    }
    f.finish(None)
}

fn kernel() -> Outcome {
    let mut f = Failures::default();
    let reports = kernel_check(3);
    f.require(reports.len() == 4, || format!("{} degrees checked", reports.len()));
    for r in reports {
        f.require(r.holds, || format!("degree {}", r.degree));
    }
    f.finish(None)
}

fn ordering() -> Outcome {
    let mut f = Failures::default();
    for n in 0..=4 {
        for m in [n, n + 1] {
            if let Some(r) = f.require_ok(ordering_equivalence(n, m), "ordering") {
                f.require(r.holds(), || format!("n={n} m={m}: {:?}", r.failures));
            }
        }
    }
    f.finish(None)
}

fn superspace_conjectures() -> Outcome {
    let mut f = Failures::default();
    for (name, report) in
        [("con1", norm_check(4)), ("con2", integrality_check(4)), ("con3", positivity_check(4))]
    {
        if let Some(r) = f.require_ok(report, name) {
            f.require(r.holds() && r.checked > 0, || format!("{name}: {:?}", r.failures));
        }
    }
    for n in 1..=4 {
        for lam in Partition::all(n) {
            let ok = f.require_ok(relate_kostka_check(&lam), "kos1");
            f.require(ok == Some(true), || format!("kos1 at {lam}"));
        }
    }
    let base = super_kostka(&sp("3,1;"), &sp("2,0;2"));
    f.require(base == Ok(rf("t+q*t^2")), || format!("K[(3,1;); (2,0;2)] = {base:?}"));
    let relation_lhs = rf("-(1-q^2*t^2)*(t+q*t^2)");
    if let Some(r) = f.require_ok(kdiffm_check(&sp("2,0;2"), &sp("3;2")), "first example") {
        f.require(r.holds() && r.lhs == relation_lhs, || format!("first example: {} vs {}", r.lhs, r.rhs));
    }
    let upper = super_kostka(&sp("3;2"), &sp("0;3,2"));
    let lower = super_kostka(&sp("3;2"), &sp("2;2,1"));
    if let (Ok(upper), Ok(lower)) = (&upper, &lower) {
        f.require(upper.sub(lower) == relation_lhs, || "first example difference".into());
        let mut got = [upper.to_string(), lower.to_string()];
        let mut displayed =
            [rf("t^2*(1+q*t+q^2*t+q^2*t^2+q^3*t^2)").to_string(), rf("t+t^2+q*t^2+q*t^3+q^2*t^4").to_string()];
        got.sort();
        displayed.sort();
        f.require(got == displayed, || format!("first example values {got:?}"));
    } else {
        f.0.push(format!("first example values: {upper:?} {lower:?}"));
    }
    if let Some(r) = f.require_ok(kdiffm_check(&sp("3,1,0;"), &sp("3,2;")), "second example") {
        f.require(r.holds() && r.rhs.is_zero(), || format!("second example: {} vs {}", r.lhs, r.rhs));
    }
    for (label, value) in [("1,0;4", "q^2*t^2*(1+q^2*t)"), ("3,0;2", "t*(1+q^2*t)"), ("3,1;1", "t*(1+q^2*t)")] {
        let k = super_kostka(&sp("3,2;"), &sp(label));
        f.require(k == Ok(rf(value)), || format!("K[(3,2;); ({label})] = {k:?}"));
    }
    let mut evaluations = 0;
    for (n, m) in bidegrees(4) {
        for l in SuperPartition::sector(n, m) {
            for n_vars in l.circ().len().max(1)..=6 {
                evaluations += 1;
                let closed = super_evaluation_closed(&l, n_vars);
                f.require(closed.is_ok() && closed == super_evaluation_explicit(&l, n_vars), || {
                    format!("genEval {l} N={n_vars}")
                });
            }
        }
    }
    f.finish(Some(format!(
        "{evaluations} evaluations; the first example's two K values match the display with their labels exchanged"
    )))
}

fn jack() -> Outcome {
    let mut f = Failures::default();
    for l in pairs_up_to(3) {
        if let Some(oracle) = f.require_ok(double_jack_oracle(&l), "oracle") {
            f.require(double_jack_factorized(&l) == oracle, || format!("{l}"));
        }
    }
    f.finish(None)
}

fn cross_sector() -> Outcome {
    let mut f = Failures::default();
    for n in 0..=3 {
        for m in [n, n + 1] {
            if let Some(r) = f.require_ok(stable_kostka_check(n, m), "stable kostka") {
                f.require(r.holds(), || format!("n={n} m={m}: {:?}", r.failures));
            }
        }
    }
    let h = h_down_stable_check(4);
    f.require(h.holds(), || format!("h_down: {:?}", h.failures));
    let d = stable_degree_check(4);
    f.require(d.holds(), || format!("statistic: {:?}", d.failures));
    f.finish(None)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 15] = [
        ("reference Kostka tables for degrees 1-3", appendix_tables),
        ("factorized P equals Gram-Schmidt P, degree <= 4", factorization),
        ("stability displays for P_(0;2) .. P_(3,2,1,0;2)", intro_displays),
        ("scalar products agree on SM, degree <= 3", scalar_equivalence),
        ("norm times b equals 1, degree <= 3", norms),
        ("omega duality, degree <= 3", duality),
        ("four-coefficient LR identity, sizes <= 3", lr_identity),
        ("principal evaluation, degree <= 2", evaluation),
        ("Kostka positivity, symmetries, closed forms, dimensions", kostka_structure),
        ("nabla closed forms and pairings", nabla_closed_forms),
        ("kernel identity through degree 3", kernel),
        ("pair and super dominance agree, n <= 4", ordering),
        ("superspace conjectures at |L*| <= 4", superspace_conjectures),
        ("Jack factorization, degree <= 3", jack),
        ("stable-sector consistency", cross_sector),
    ];
    let strict = std::env::var("BIMAC_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    let mut unexpected = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let number = i + 1;
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        let documented = DOCUMENTED_FAILURES.iter().find(|(n, _)| *n == number).map(|(_, why)| *why);
        match (&outcome, documented) {
            (Ok(note), None) => {
                let note = note.as_ref().map(|n| format!(" [{n}]")).unwrap_or_default();
                println!("criterion {number:>2}: PASS  {title} ({secs:.2} s){note}");
            }
            (Ok(_), Some(_)) => {
                println!("criterion {number:>2}: PASS  {title} ({secs:.2} s) [listed as a documented failure]");
                unexpected += 1;
            }
            (Err(why), Some(reason)) => {
                println!("criterion {number:>2}: FAIL  {title} ({secs:.2} s): {why} [documented: {reason}]");
                if strict {
                    unexpected += 1;
                }
            }
            (Err(why), None) => {
                println!("criterion {number:>2}: FAIL  {title} ({secs:.2} s): {why}");
                unexpected += 1;
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria disagree with the documented expectations");
        ExitCode::FAILURE
    }
}
