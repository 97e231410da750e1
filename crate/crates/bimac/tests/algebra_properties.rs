use bimac::bisym::{BiBasis, BiSymPoly};
use bimac::coeffs::{rf, Mono, Poly, RatFunc, Var};
use bimac::partitions::{PairLabel, Partition};
use bimac::plethysm::{pleth_symfunc, AlphabetExpr};
use bimac::symfunc::{Basis, SymPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..4).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(a, b, c)| (Mono([a, b, 0, 0]), BigInt::from(c))))
    })
}

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (arb_poly(), arb_poly()).prop_map(|(n, d)| {
        let d = if d.is_zero() { Poly::one() } else { d };
        RatFunc::new(n, d).expect("nonzero denominator")
    })
}

fn arb_small_coeff() -> impl Strategy<Value = RatFunc> {
    prop::sample::select(vec![rf("1"), rf("-2"), rf("q"), rf("1-t"), rf("q/(1-q*t)"), rf("t^2+q")])
}

fn arb_sympoly(basis: Basis) -> impl Strategy<Value = SymPoly> {
    (1usize..=4).prop_flat_map(move |n| {
        let labels = Partition::all(n);
        prop::collection::vec((prop::sample::select(labels), arb_small_coeff()), 1..4)
            .prop_map(move |terms| SymPoly::from_terms(basis, terms))
    })
}

fn arb_bisym(basis: BiBasis) -> impl Strategy<Value = BiSymPoly> {
    (1usize..=3).prop_flat_map(move |n| {
        let labels = PairLabel::all(n);
        prop::collection::vec((prop::sample::select(labels), arb_small_coeff()), 1..4)
            .prop_map(move |terms| BiSymPoly::from_terms(basis, terms))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.div(&a).unwrap().is_one());
            prop_assert_eq!(a.mul(&b).div(&a).unwrap(), b.clone());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in arb_ratfunc(), b in arb_ratfunc()) {
        prop_assert_eq!(a.sub(&b).is_zero(), a == b);
        let reparsed = RatFunc::parse(&a.to_string()).unwrap();
        prop_assert_eq!(reparsed, a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in arb_ratfunc(), b in arb_ratfunc(), v in 2i64..5) {
        let bind = [(Var::Q, RatFunc::from_int(v))];
        let sum = a.add(&b).substitute(&bind);
        let prod = a.mul(&b).substitute(&bind);
        if let (Ok(x), Ok(y)) = (a.substitute(&bind), b.substitute(&bind)) {
            prop_assert_eq!(sum.unwrap(), x.add(&y));
            prop_assert_eq!(prod.unwrap(), x.mul(&y));
        }
    }

    #[test]
    fn one_alphabet_bases_round_trip(f in arb_sympoly(Basis::S), target in prop::sample::select(Basis::ALL.to_vec())) {
        prop_assert_eq!(f.to_basis(target).to_basis(Basis::S), f);
    }

    #[test]
    fn two_alphabet_bases_round_trip(f in arb_bisym(BiBasis::SM), target in prop::sample::select(BiBasis::ALL.to_vec())) {
        let g = f.to_basis(target);
        prop_assert_eq!(g.homogeneous_degree(), f.homogeneous_degree());
        prop_assert_eq!(g.to_basis(BiBasis::SM), f);
    }

    #[test]
    fn plethysm_is_multiplicative(f in arb_sympoly(Basis::P), g in arb_sympoly(Basis::S), a in arb_small_coeff(), b in arb_small_coeff()) {
        let alphabet = AlphabetExpr::linear(a, b);
        let lhs = pleth_symfunc(&f.multiply(&g), &alphabet);
        let rhs = pleth_symfunc(&f, &alphabet).multiply(&pleth_symfunc(&g, &alphabet));
        prop_assert_eq!(lhs.to_basis(BiBasis::PP), rhs.to_basis(BiBasis::PP));
    }
}

#[test]
fn worked_coefficient_examples() {
    assert_eq!(rf("q/(1-t)").mul(&rf("1-t")), rf("q"));
    assert_eq!(rf("1-q^2").div(&rf("1-q")).unwrap(), rf("1+q"));
    assert_eq!(
        rf("(1-t)*(1+q)/(1-q*t)").add(&rf("(1-t)/(1-q*t)")),
        rf("(1-t)*(2+q)/(1-q*t)")
    );
    assert_eq!(rf("(1-t)*(1+q)/(1-q*t)").substitute(&[(Var::Q, RatFunc::zero())]).unwrap(), rf("1-t"));
    assert!(rf("1/(1-q)").substitute(&[(Var::Q, RatFunc::one())]).is_err());
    assert!(rf("q").div(&RatFunc::zero()).is_err());
}
