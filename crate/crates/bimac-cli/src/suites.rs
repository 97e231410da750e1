//! Named verification suites. Each returns one result per checked instance.

use bimac::bisym::{
    biscalar_primed, biscalar_qt, double_jack_factorized, double_jack_oracle, double_kostka, double_kostka_sum,
    double_norm, double_p, double_p_factorized, double_p_oracle, double_q, dimension_square_sum, evaluate_closed,
    evaluate_explicit, hyperoctahedral_order, kernel_check, kostka_matrix, kostka_specials, kostka_symmetries_check,
    lr4_identity, omega_b, specialize, specialize_expected, BiBasis, BiSymPoly, KostkaSpecials, Specialization,
};
use bimac::coeffs::{RatFunc, Var};
use bimac::macdonald::{b_norm, McParams};
use bimac::nabla::{
    catalan_b, dim_pairing, nabla_on_s_empty_n, nabla_on_s_empty_n_operator, nabla_pairings, schur_sign_report,
    NablaKind,
};
use bimac::partitions::{PairLabel, Partition, SuperPartition};
use bimac::superspace::{
    bidegrees, h_down_stable_check, integrality_check, kdiffm_check, norm_check, ordering_equivalence,
    positivity_check, psi, relate_kostka_check, stability_sweep, stable_degree_check, stable_kostka_check,
    super_basis_image, super_evaluation_closed, super_evaluation_explicit, super_kostka, super_p,
    super_symmetry_check, CheckReport, SuperBasis, SuperExpansion,
};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::Suite;
use crate::commands;
use crate::document::{CheckResult, Document, Report};
use crate::golden::kostka_tables;
use crate::CliError;

type Results = Result<Vec<CheckResult>, CliError>;

/// Number of random expansions drawn by the `psi` suite.
const PSI_SAMPLES: usize = 32;

/// Degree bound used when `--max-n` is absent.
pub fn default_max_n(suite: Suite) -> usize {
    match suite {
        Suite::AppendixD => 3,
        Suite::Factorization | Suite::Lemdo | Suite::Kos1 | Suite::Stable => 4,
        Suite::Con1 | Suite::Con2 | Suite::Con3 | Suite::Sym1 | Suite::GenEval => 4,
        Suite::Evaluation => 2,
        _ => 3,
    }
}

pub fn run_suite(suite: Suite, max_n: Option<usize>, seed: u64) -> Result<Document, CliError> {
    let results = if suite == Suite::All {
        let mut all = Vec::new();
        for s in Suite::value_variants_without_all() {
            all.extend(results_for(s, max_n.unwrap_or_else(|| default_max_n(s)), seed)?);
        }
        all
    } else {
        results_for(suite, max_n.unwrap_or_else(|| default_max_n(suite)), seed)?
    };
    Ok(Document::Report(Report::new(&suite.name(), results)))
}

impl Suite {
    fn value_variants_without_all() -> Vec<Suite> {
        use clap::ValueEnum;
        Suite::value_variants().iter().copied().filter(|s| *s != Suite::All).collect()
    }
}

fn results_for(suite: Suite, max_n: usize, seed: u64) -> Results {
    match suite {
        Suite::AppendixD => appendix_d(max_n),
        Suite::Factorization => Ok(factorization(max_n)),
        Suite::Scalar => Ok(scalar(max_n)),
        Suite::Norm => Ok(norm(max_n)),
        Suite::Duality => Ok(duality(max_n)),
        Suite::Lr4 => Ok(lr4(max_n)),
        Suite::Evaluation => evaluation(max_n),
        Suite::Kostka => kostka(max_n),
        Suite::Nabla => nabla(max_n),
        Suite::Kernel => Ok(kernel(max_n)),
        Suite::Lemdo => lemdo(max_n),
        Suite::Stability => stability(),
        Suite::Con1 => Ok(from_report("con1", format!("|Λ*| ≤ {max_n}"), norm_check(max_n)?)),
        Suite::Con2 => Ok(from_report("con2", format!("|Λ*| ≤ {max_n}"), integrality_check(max_n)?)),
        Suite::Con3 => Ok(from_report("con3", format!("|Λ*| ≤ {max_n}"), positivity_check(max_n)?)),
        Suite::Sym1 => Ok(from_report("sym1", format!("|Λ*| ≤ {max_n}"), super_symmetry_check(max_n)?)),
        Suite::Kos1 => kos1(max_n),
        Suite::Kdiffm => kdiffm(),
        Suite::GenEval => gen_eval(max_n),
        Suite::Psi => Ok(psi_samples(seed)),
        Suite::Jack => Ok(jack(max_n)),
        Suite::Limits => limits(max_n),
        Suite::Stable => stable(max_n),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

fn pairs_up_to(n: usize) -> impl Iterator<Item = PairLabel> {
    (0..=n).flat_map(PairLabel::all)
}

fn from_report(conjecture: &str, scope: String, report: CheckReport) -> Vec<CheckResult> {
    if report.holds() {
        vec![CheckResult::verified(conjecture, format!("{scope}, {} instances", report.checked))]
    } else {
        report
            .failures
            .into_iter()
            .map(|w| CheckResult::counterexample(conjecture, &scope, w))
            .collect()
    }
}

fn appendix_d(max_n: usize) -> Results {
    let mut out = Vec::new();
    for table in kostka_tables().into_iter().filter(|t| t.degree <= max_n) {
        match commands::kostka(table.degree, crate::args::Variant::Double, None)? {
            Document::Table(t) => out.extend(table.compare(&t)),
            _ => unreachable!("kostka emits a table"),
        }
    }
    Ok(out)
}

fn factorization(max_n: usize) -> Vec<CheckResult> {
    pairs_up_to(max_n)
        .map(|l| match double_p_oracle(&l) {
            Ok(oracle) => CheckResult::equal("factorization", &l, &double_p_factorized(&l), &oracle),
            Err(e) => CheckResult::counterexample("factorization", &l, e.to_string()),
        })
        .collect()
}

fn scalar(max_n: usize) -> Vec<CheckResult> {
    (0..=max_n)
        .map(|n| {
            let labels = PairLabel::all(n);
            let mismatch = labels.iter().find_map(|a| {
                let fa = BiSymPoly::basis_element(BiBasis::SM, a.clone());
                labels.iter().find_map(|b| {
                    let fb = BiSymPoly::basis_element(BiBasis::SM, b.clone());
                    let (x, y) = (biscalar_qt(&fa, &fb), biscalar_primed(&fa, &fb));
                    (x != y).then(|| format!("<m[{a}], m[{b}]>: {x} vs {y}"))
                })
            });
            let instance = format!("SM basis, degree {n}");
            match mismatch {
                None => CheckResult::verified("scalar-equivalence", instance),
                Some(w) => CheckResult::counterexample("scalar-equivalence", instance, w),
            }
        })
        .collect()
}

fn norm(max_n: usize) -> Vec<CheckResult> {
    pairs_up_to(max_n)
        .map(|l| {
            let p = double_p(&l);
            let b = RatFunc::q()
                .pow(l.lam.size() as u32)
                .inv()
                .expect("q ≠ 0")
                .mul(&b_norm(&l.lam, &McParams::x_factor()))
                .mul(&b_norm(&l.mu, &McParams::y_factor()));
            let product = biscalar_qt(&p, &p).mul(&b);
            let closed = double_norm(&l);
            let ok = product.is_one() && biscalar_qt(&p, &p) == closed;
            CheckResult::check("norm", &l, ok, || format!("<<P,P>>·b = {product}"))
        })
        .collect()
}

fn duality(max_n: usize) -> Vec<CheckResult> {
    let (qi, ti) = (RatFunc::q().inv().expect("q ≠ 0"), RatFunc::t().inv().expect("t ≠ 0"));
    let swap = [(Var::Q, ti), (Var::T, qi)];
    pairs_up_to(max_n)
        .map(|l| {
            let lhs = omega_b(&double_p(&l), &RatFunc::q(), &RatFunc::t()).to_basis(BiBasis::SM);
            match double_q(&l.dual()).substitute(&swap) {
                Ok(rhs) => CheckResult::equal("duality", &l, &lhs, &rhs.to_basis(BiBasis::SM)),
                Err(e) => CheckResult::counterexample("duality", &l, e.to_string()),
            }
        })
        .collect()
}

fn lr4(max_n: usize) -> Vec<CheckResult> {
    let parts: Vec<Partition> = (0..=max_n).flat_map(Partition::all).collect();
    (0..=2 * max_n)
        .map(|total| {
            let mut failure = None;
            'search: for lam in &parts {
                for mu in parts.iter().filter(|mu| lam.size() + mu.size() == total) {
                    for nu in &parts {
                        for om in parts.iter().filter(|om| nu.size() + om.size() == total) {
                            let expected = BigInt::from(i32::from(lam == nu && mu == om));
                            let got = lr4_identity(lam, mu, nu, om);
                            if got != expected {
                                failure = Some(format!("({lam};{mu};{nu};{om}) = {got}"));
                                break 'search;
                            }
                        }
                    }
                }
            }
            let instance = format!("parts of size ≤ {max_n}, total degree {total}");
            match failure {
                None => CheckResult::verified("lr4", instance),
                Some(w) => CheckResult::counterexample("lr4", instance, w),
            }
        })
        .collect()
}

fn evaluation(max_n: usize) -> Results {
    let mut out = Vec::new();
    for l in pairs_up_to(max_n) {
        for (m, n_vars) in [(2, 5), (3, 7)] {
            let closed = evaluate_closed(&l, n_vars, m)?;
            let explicit = evaluate_explicit(&l, n_vars, m)?;
            out.push(CheckResult::equal("evaluation", format!("{l}, m = {m}, N = {n_vars}"), &closed, &explicit));
        }
    }
    Ok(out)
}

fn kostka(max_n: usize) -> Results {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let mat = kostka_matrix(n);
        let bad = mat.entries.iter().flatten().find(|c| !c.is_nonneg_polynomial());
        out.push(CheckResult::check("kostka-positivity", format!("degree {n}"), bad.is_none(), || {
            bad.map(ToString::to_string).unwrap_or_default()
        }));
        let sym = kostka_symmetries_check(n);
        out.push(CheckResult::check("kostka-symmetries", format!("degree {n}"), sym.holds(), || {
            format!("{:?}", sym.failures)
        }));
        let schur = KostkaSpecials::schur_labels(n);
        for l in PairLabel::all(n) {
            let specials = kostka_specials(&l);
            for (s, v) in schur.iter().zip(specials.values()) {
                let k = double_kostka(s, &l)?;
                out.push(CheckResult::equal("kostka-specials", format!("K[{s}; {l}]"), &k, v));
            }
            let squares = dimension_square_sum(&l)?;
            out.push(CheckResult::equal("kostka-dimensions", &l, &squares, &hyperoctahedral_order(n)));
            for s in PairLabel::all(n) {
                let (a, b) = (double_kostka_sum(&s, &l)?, double_kostka(&s, &l)?);
                out.push(CheckResult::equal("kostka-lr-form", format!("K[{s}; {l}]"), &a, &b));
            }
        }
    }
    let schur = PairLabel::of(&[2, 1], &[1]);
    let eight = RatFunc::from_int(8);
    for l in PairLabel::all(4) {
        let v = double_kostka(&schur, &l)?.at_one()?;
        out.push(CheckResult::equal("kostka-eight", format!("K[{schur}; {l}](1,1)"), &v, &eight));
    }
    Ok(out)
}

/// `[k]_t`.
fn t_integer(k: usize) -> RatFunc {
    (0..k).fold(RatFunc::zero(), |acc, i| acc.add(&RatFunc::qt_power(0, i as i64)))
}

/// `[2n, n]` in the variable `t²`.
fn t_squared_central_binomial(n: usize) -> RatFunc {
    (1..=n).fold(RatFunc::one(), |acc, i| {
        let num = RatFunc::one().sub(&RatFunc::qt_power(0, 2 * (n + i) as i64));
        let den = RatFunc::one().sub(&RatFunc::qt_power(0, 2 * i as i64));
        acc.mul(&num.div(&den).expect("nonzero"))
    })
}

fn nabla(max_n: usize) -> Results {
    let mut out = Vec::new();
    let on_diagonal = [(Var::Q, RatFunc::t().inv().expect("t ≠ 0"))];
    for n in 1..=max_n {
        let image = nabla_on_s_empty_n(n);
        out.push(CheckResult::equal("nabla-closed-form", format!("n = {n}"), &image, &nabla_on_s_empty_n_operator(n)));
        let pairings = nabla_pairings(&image, n);
        out.push(CheckResult::equal("catalan", format!("n = {n}"), &pairings.catalan, &catalan_b(n)));
        out.push(CheckResult::equal("dimension", format!("n = {n}"), &pairings.dimension, &dim_pairing(n)));
        let expected = RatFunc::from_bigint(BigInt::from(2 * n + 1).pow(n as u32));
        out.push(CheckResult::equal("dimension-at-one", format!("n = {n}"), &dim_pairing(n).at_one()?, &expected));
        let tdim = t_integer(2 * n + 1).mul(&RatFunc::qt_power(0, -(n as i64))).pow(n as u32);
        out.push(CheckResult::equal(
            "dimension-q=1/t",
            format!("n = {n}"),
            &dim_pairing(n).substitute(&on_diagonal)?,
            &tdim,
        ));
        let tcat = t_squared_central_binomial(n).mul(&RatFunc::qt_power(0, -((n * n) as i64)));
        out.push(CheckResult::equal("catalan-q=1/t", format!("n = {n}"), &catalan_b(n).substitute(&on_diagonal)?, &tcat));
    }
    out.push(CheckResult::equal("catalan-at-one", "n = 2", &catalan_b(2).at_one()?, &RatFunc::from_int(6)));
    for n in 1..=max_n + 1 {
        let image = nabla_on_s_empty_n(n);
        let positive = image.all_coeffs(RatFunc::is_nonneg_laurent);
        out.push(CheckResult::check("nabla-laurent-positivity", format!("n = {n}"), positive, || image.to_string()));
        let sign_row = nabla_pairings(&image, n).sign_row;
        out.push(CheckResult::equal("coro1", format!("n = {n}"), &sign_row, &RatFunc::one()));
    }
    for power in 1..=2 {
        let report = schur_sign_report(NablaKind::SqrtB, power, max_n)?;
        let scope = format!("power {power}, degree ≤ {max_n}, {} labels", report.checked);
        out.push(CheckResult::check("sqrtB-schur-positivity", scope, report.mixed.is_empty(), || {
            format!("mixed signs at {:?}", report.mixed.iter().map(ToString::to_string).collect::<Vec<_>>())
        }));
    }
    let bar = schur_sign_report(NablaKind::BarB, 1, max_n)?;
    out.push(CheckResult::check(
        "barB-not-schur-positive",
        format!("degree ≤ {max_n}"),
        !bar.mixed.is_empty(),
        || "every image is sign-coherent".to_string(),
    ));
    Ok(out)
}

fn kernel(max_n: usize) -> Vec<CheckResult> {
    kernel_check(max_n)
        .into_iter()
        .map(|r| {
            CheckResult::check("kernel", format!("degree {}, {} pairs", r.degree, r.pairs), r.holds, || {
                "sides differ".to_string()
            })
        })
        .collect()
}

fn lemdo(max_n: usize) -> Results {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for m in [n, n + 1] {
            out.extend(from_report("lemdo", format!("n = {n}, m = {m}"), ordering_equivalence(n, m)?));
        }
    }
    Ok(out)
}

fn stability() -> Results {
    let mut out = Vec::new();
    let first: SuperPartition = "0;2".parse().expect("label");
    let expected_first = BiSymPoly::from_terms(
        BiBasis::SM,
        [
            (PairLabel::of(&[], &[2]), RatFunc::one()),
            (PairLabel::of(&[], &[1, 1]), RatFunc::parse("(1-t)*(1+q)/(1-q*t)")?),
            (PairLabel::of(&[1], &[1]), RatFunc::parse("(1-t)/(1-q*t)")?),
        ],
    );
    out.push(CheckResult::equal("intro-display", &first, &super_p(&first)?, &expected_first));
    let stable = double_p(&PairLabel::of(&[], &[2]));
    for label in ["1,0;2", "2,1,0;2", "3,2,1,0;2"] {
        let l: SuperPartition = label.parse()?;
        out.push(CheckResult::equal("intro-display", &l, &super_p(&l)?, &stable));
    }
    for (pair, ms, from) in [
        (PairLabel::of(&[], &[2]), 1..=4, 2),
        (PairLabel::of(&[], &[1]), 1..=2, 1),
        (PairLabel::of(&[1], &[1]), 2..=3, 2),
    ] {
        let r = stability_sweep(&pair, ms.clone())?;
        let instance = format!("{pair}, m in {}..={}", ms.start(), ms.end());
        out.push(CheckResult::check("stability-sweep", instance, r.stable_from == Some(from), || {
            format!("stable from {:?}", r.stable_from)
        }));
    }
    let l: SuperPartition = "3,1;1".parse()?;
    for (kind, basis) in [(SuperBasis::Monomial, BiBasis::SM), (SuperBasis::PowerSum, BiBasis::SP)] {
        let image = super_basis_image(&l, kind);
        let expected = BiSymPoly::basis_element(basis, l.to_pair());
        out.push(CheckResult::equal("basis-image", format!("{l} {kind:?}"), &image, &expected));
    }
    Ok(out)
}

fn kos1(max_n: usize) -> Results {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for lam in Partition::all(n) {
            let ok = relate_kostka_check(&lam)?;
            out.push(CheckResult::check("kos1", &lam, ok, || format!("ψ(H_Λ) ≠ H_{lam}")));
        }
    }
    Ok(out)
}

fn kdiffm() -> Results {
    let sp = |s: &str| s.parse::<SuperPartition>();
    let rf = RatFunc::parse;
    let mut out = Vec::new();
    let base = super_kostka(&sp("3,1;")?, &sp("2,0;2")?)?;
    out.push(CheckResult::equal("kdiffm", "K[(3,1;); (2,0;2)]", &base, &rf("t+q*t^2")?));
    let first = kdiffm_check(&sp("2,0;2")?, &sp("3;2")?)?;
    out.push(CheckResult::check("kdiffm", "Λ = (2,0;2), Δ = (3;2)", first.holds(), || {
        format!("lhs = {}; rhs = {}", first.lhs, first.rhs)
    }));
    out.push(CheckResult::equal("kdiffm", "Λ = (2,0;2), Δ = (3;2) lhs", &first.lhs, &rf("-(1-q^2*t^2)*(t+q*t^2)")?));
    let upper = super_kostka(&sp("3;2")?, &sp("0;3,2")?)?;
    let lower = super_kostka(&sp("3;2")?, &sp("2;2,1")?)?;
    out.push(CheckResult::equal(
        "kdiffm",
        "K[(3;2); (0;3,2)] − K[(3;2); (2;2,1)]",
        &upper.sub(&lower),
        &rf("-(1-q^2*t^2)*(t+q*t^2)")?,
    ));
    let second = kdiffm_check(&sp("3,1,0;")?, &sp("3,2;")?)?;
    out.push(CheckResult::check("kdiffm", "Λ = (3,1,0;), Δ = (3,2;)", second.holds() && second.rhs.is_zero(), || {
        format!("lhs = {}; rhs = {}", second.lhs, second.rhs)
    }));
    for (schur, label, value) in [
        ("3,2;", "1,0;4", "q^2*t^2*(1+q^2*t)"),
        ("3,2;", "3,0;2", "t*(1+q^2*t)"),
        ("3,2;", "3,1;1", "t*(1+q^2*t)"),
    ] {
        let k = super_kostka(&sp(schur)?, &sp(label)?)?;
        out.push(CheckResult::equal("kdiffm", format!("K[({schur}); ({label})]"), &k, &rf(value)?));
    }
    Ok(out)
}

fn gen_eval(max_n: usize) -> Results {
    const MAX_VARIABLES: usize = 6;
    let mut out = Vec::new();
    for (n, m) in bidegrees(max_n) {
        for l in SuperPartition::sector(n, m) {
            let lowest = l.circ().len().max(1);
            let mismatch = (lowest..=MAX_VARIABLES).try_fold(None, |found, n_vars| {
                if found.is_some() {
                    return Ok::<_, CliError>(found);
                }
                let (a, b) = (super_evaluation_closed(&l, n_vars)?, super_evaluation_explicit(&l, n_vars)?);
                Ok((a != b).then(|| format!("N = {n_vars}: {a} vs {b}")))
            })?;
            let instance = format!("{l}, N = {lowest}..={MAX_VARIABLES}");
            out.push(match mismatch {
                None => CheckResult::verified("genEval", instance),
                Some(w) => CheckResult::counterexample("genEval", instance, w),
            });
        }
    }
    Ok(out)
}

fn random_expansion(rng: &mut ChaCha8Rng, coeffs: &[RatFunc]) -> SuperExpansion {
    let (n, m) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
    let labels = SuperPartition::sector(n, m);
    let mut f = SuperExpansion::new();
    for _ in 0..rng.gen_range(1..=4) {
        let l = labels.choose(rng).expect("sector is nonempty").clone();
        let c = coeffs.choose(rng).expect("coefficients are nonempty");
        let sum = f.get(&l).map_or_else(|| c.clone(), |old| old.add(c));
        if sum.is_zero() {
            f.remove(&l);
        } else {
            f.insert(l, sum);
        }
    }
    f
}

fn psi_samples(seed: u64) -> Vec<CheckResult> {
    let coeffs: Vec<RatFunc> = ["1", "-1", "q", "t/(1-q)", "2+q*t"]
        .iter()
        .map(|s| RatFunc::parse(s).expect("literal"))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..PSI_SAMPLES)
        .map(|_| {
            let f = random_expansion(&mut rng, &coeffs);
            let instance = f.iter().map(|(l, c)| format!("({c})[{l}]")).collect::<Vec<_>>().join(" + ");
            let twice = psi(&psi(&f));
            CheckResult::check("psi-squared", instance, twice.is_empty(), || format!("{twice:?}"))
        })
        .collect()
}

fn jack(max_n: usize) -> Vec<CheckResult> {
    pairs_up_to(max_n)
        .map(|l| match double_jack_oracle(&l) {
            Ok(oracle) => CheckResult::equal("jack", &l, &double_jack_factorized(&l), &oracle),
            Err(e) => CheckResult::counterexample("jack", &l, e.to_string()),
        })
        .collect()
}

fn limits(max_n: usize) -> Results {
    let mut out = Vec::new();
    for l in pairs_up_to(max_n) {
        for which in Specialization::ALL {
            let got = specialize(&l, which)?;
            out.push(CheckResult::equal("limits", format!("{l} {which}"), &got, &specialize_expected(&l, which)));
        }
    }
    Ok(out)
}

fn stable(max_n: usize) -> Results {
    let mut out = Vec::new();
    for n in 0..=max_n.min(3) {
        for m in [n, n + 1] {
            out.extend(from_report("stable-kostka", format!("n = {n}, m = {m}"), stable_kostka_check(n, m)?));
        }
    }
    out.extend(from_report("h-down", format!("n ≤ {max_n}"), h_down_stable_check(max_n)));
    out.extend(from_report("stable-degree", format!("n ≤ {max_n}"), stable_degree_check(max_n)));
    Ok(out)
}
