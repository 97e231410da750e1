use bimac::bisym::*;
use bimac::coeffs::{rf, RatFunc};
use bimac::partitions::PairLabel;
use num_bigint::BigInt;

fn labels(spec: &[&str]) -> Vec<PairLabel> {
    spec.iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn degree_two_table() {
    let order = labels(&["2|", "1,1|", "1|1", "|2", "|1,1"]);
    let expected = [
        ["1", "q", "q+q^2", "q^2", "q^3"],
        ["q*t", "1", "q+q^2*t", "q^3*t", "q^2"],
        ["t", "t", "1+q*t", "q", "q"],
        ["t^2", "q*t^3", "t+q*t^2", "1", "q*t"],
        ["t^3", "t^2", "t+t^2", "t", "1"],
    ];
    let mat = KostkaMatrix::build(order.clone(), order).unwrap();
    for (i, row) in expected.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            assert_eq!(mat.entries[i][j], rf(e), "row {} column {}", mat.rows[i], mat.columns[j]);
        }
    }
}

#[test]
fn entries_are_positive_and_symmetric() {
    for n in 0..=3 {
        let mat = kostka_matrix(n);
        assert!(mat.entries.iter().flatten().all(RatFunc::is_nonneg_polynomial), "n = {n}");
        let report = kostka_symmetries_check(n);
        assert!(report.holds(), "{:?}", report.failures);
    }
}

#[test]
fn closed_forms_for_one_dimensional_labels() {
    for n in 1..=3 {
        let schur = KostkaSpecials::schur_labels(n);
        for l in PairLabel::all(n) {
            let specials = kostka_specials(&l);
            for (s, v) in schur.iter().zip(specials.values()) {
                assert_eq!(&double_kostka(s, &l).unwrap(), v, "{s} in {l}");
            }
        }
    }
}

#[test]
fn sums_of_squared_dimensions() {
    for n in 0..=3 {
        for l in PairLabel::all(n) {
            assert_eq!(dimension_square_sum(&l).unwrap(), hyperoctahedral_order(n), "{l}");
        }
    }
    let eight = rf("8");
    let schur: PairLabel = "2,1|1".parse().unwrap();
    for l in PairLabel::all(4) {
        assert_eq!(double_kostka(&schur, &l).unwrap().at_one().unwrap(), eight, "{l}");
    }
    assert_eq!(hyperoctahedral_order(3), BigInt::from(48));
}

#[test]
fn littlewood_richardson_form() {
    for n in 0..=3 {
        for l in PairLabel::all(n) {
            for s in PairLabel::all(n) {
                assert_eq!(double_kostka_sum(&s, &l).unwrap(), double_kostka(&s, &l).unwrap(), "{s} in {l}");
            }
        }
    }
}

#[test]
fn mismatched_degrees_are_rejected() {
    let a: PairLabel = "1|".parse().unwrap();
    let b: PairLabel = "2|".parse().unwrap();
    assert!(double_kostka(&a, &b).is_err());
}
