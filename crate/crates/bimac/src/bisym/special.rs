//! Limiting cases of the double Macdonald polynomials and the double Jack
//! polynomials.

use super::double::{double_p, orthogonalize_monomials, strictly_below};
use super::scalar::jack_sp_weight;
use super::{BiBasis, BiSymPoly};
use crate::coeffs::{RatFunc, Var};
use crate::macdonald::{hall_littlewood_p, jack_p, macdonald_p, McParams};
use crate::memo::{memoize, Store};
use crate::partitions::{linear_extension, pair_dominance_leq, PairLabel};
use crate::plethysm::{pleth_symfunc, AlphabetExpr};
use crate::symfunc::{GramSchmidtError, SymPoly};
use crate::Error;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A degeneration of `P_{λ,μ}(q,t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `q → 0`: `s_λ(x) P_μ(y;t)`.
    HallLittlewood,
    /// `q → ∞`: `s_λ[X + (1−1/t)Y] P_μ(y;1/t)`.
    HallLittlewoodInfinity,
    /// `q = t = 0`: `s_λ(x) s_μ(y)`.
    Schur,
    /// `q, t → ∞`: `s_λ[X+Y] s_μ(y)`.
    BarSchur,
    /// `q = 1`: `e_{λ'}[X+Y] s_μ(y)`.
    QOne,
    /// `t = 1`: `s_λ(x) m_μ(y)`.
    TOne,
    /// `q = t`: `P_λ^{(t,t²)}[X + t/(1+t) Y] P_μ^{(t²,t)}[Y]`.
    JackSchur,
}

impl Specialization {
    pub const ALL: [Specialization; 7] = [
        Specialization::HallLittlewood,
        Specialization::HallLittlewoodInfinity,
        Specialization::Schur,
        Specialization::BarSchur,
        Specialization::QOne,
        Specialization::TOne,
        Specialization::JackSchur,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Specialization::HallLittlewood => "hl0",
            Specialization::HallLittlewoodInfinity => "hlinf",
            Specialization::Schur => "schur",
            Specialization::BarSchur => "barschur",
            Specialization::QOne => "q1",
            Specialization::TOne => "t1",
            Specialization::JackSchur => "jackschur",
        }
    }

    /// Successive substitutions realizing the limit.
    fn steps(self) -> Vec<Vec<(Var, RatFunc)>> {
        let zero = RatFunc::zero;
        let inv = |v: RatFunc| v.inv().expect("nonzero variable");
        match self {
            Specialization::HallLittlewood => vec![vec![(Var::Q, zero())]],
            Specialization::HallLittlewoodInfinity => {
                vec![vec![(Var::Q, inv(RatFunc::q()))], vec![(Var::Q, zero())]]
            }
            Specialization::Schur => vec![vec![(Var::Q, zero())], vec![(Var::T, zero())]],
            Specialization::BarSchur => vec![
                vec![(Var::Q, inv(RatFunc::q())), (Var::T, inv(RatFunc::t()))],
                vec![(Var::Q, zero())],
                vec![(Var::T, zero())],
            ],
            Specialization::QOne => vec![vec![(Var::Q, RatFunc::one())]],
            Specialization::TOne => vec![vec![(Var::T, RatFunc::one())]],
            Specialization::JackSchur => vec![vec![(Var::Q, RatFunc::t())]],
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Specialization {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.to_ascii_lowercase();
        Specialization::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown specialization `{s}`"))
    }
}

/// `P_{λ,μ}` with the limit taken coefficientwise, in the `SM` basis.
pub fn specialize(l: &PairLabel, which: Specialization) -> Result<BiSymPoly, Error> {
    which
        .steps()
        .iter()
        .try_fold(double_p(l), |f, step| f.substitute(step).map_err(Error::from))
}

fn product(x: &SymPoly, x_alphabet: AlphabetExpr, y: &SymPoly) -> BiSymPoly {
    pleth_symfunc(x, &x_alphabet)
        .multiply(&pleth_symfunc(y, &AlphabetExpr::y()))
        .to_basis(BiBasis::SM)
}

/// The closed form each limit is expected to produce, in the `SM` basis.
pub fn specialize_expected(l: &PairLabel, which: Specialization) -> BiSymPoly {
    let (lam, mu) = (&l.lam, &l.mu);
    let schur_lam = SymPoly::basis_element(crate::symfunc::Basis::S, lam.clone());
    let schur_mu = SymPoly::basis_element(crate::symfunc::Basis::S, mu.clone());
    let one = RatFunc::one;
    match which {
        Specialization::HallLittlewood => {
            product(&schur_lam, AlphabetExpr::x(), &hall_littlewood_p(mu, &RatFunc::t()))
        }
        Specialization::HallLittlewoodInfinity => {
            let t_inv = RatFunc::t().inv().expect("t ≠ 0");
            product(
                &schur_lam,
                AlphabetExpr::linear(one(), one().sub(&t_inv)),
                &hall_littlewood_p(mu, &t_inv),
            )
        }
        Specialization::Schur => product(&schur_lam, AlphabetExpr::x(), &schur_mu),
        Specialization::BarSchur => product(&schur_lam, AlphabetExpr::linear(one(), one()), &schur_mu),
        Specialization::QOne => {
            let e = SymPoly::basis_element(crate::symfunc::Basis::E, lam.conjugate());
            product(&e, AlphabetExpr::linear(one(), one()), &schur_mu)
        }
        Specialization::TOne => BiSymPoly::basis_element(BiBasis::SM, l.clone()),
        Specialization::JackSchur => {
            let t = RatFunc::t();
            let t2 = t.mul(&t);
            let shift = t.div(&one().add(&t)).expect("1+t ≠ 0");
            product(
                &macdonald_p(lam, &McParams::new(t.clone(), t2.clone())),
                AlphabetExpr::linear(one(), shift),
                &macdonald_p(mu, &McParams::new(t2, t)),
            )
        }
    }
}

/// `P^{(α/(α+1))}_λ[X + Y/(α+1)] · P^{(α+1)}_μ[Y]`, with `α` the parameter `a`.
pub fn double_jack_factorized(l: &PairLabel) -> BiSymPoly {
    let a = RatFunc::alpha();
    let a1 = a.add(&RatFunc::one());
    let x_param = a.div(&a1).expect("α+1 ≠ 0");
    let shift = a1.inv().expect("α+1 ≠ 0");
    product(
        &jack_p(&l.lam, &x_param),
        AlphabetExpr::linear(RatFunc::one(), shift),
        &jack_p(&l.mu, &a1),
    )
}

type Family = BTreeMap<PairLabel, BiSymPoly>;

static JACK_ORACLE: Store<usize, Result<Family, GramSchmidtError>> = Store::new();

fn jack_oracle_family(n: usize) -> Result<Family, GramSchmidtError> {
    let all = PairLabel::all(n);
    let ordered = linear_extension(&all, |a, b| pair_dominance_leq(a, b).unwrap_or(false));
    let alpha = RatFunc::alpha();
    let polys = orthogonalize_monomials(&ordered, &all, strictly_below, |l| jack_sp_weight(l, &alpha), None)?;
    Ok(ordered.into_iter().zip(polys).collect())
}

/// The double Jack polynomial from triangularity along pair dominance and
/// orthogonality for `⟨s_λ p_μ[X+Y], s_λ p_μ[X+Y]⟩ = α^{ℓ(μ)} z_μ`.
pub fn double_jack_oracle(l: &PairLabel) -> Result<BiSymPoly, GramSchmidtError> {
    let n = l.degree();
    match memoize(&JACK_ORACLE, &n, || jack_oracle_family(n)).as_ref() {
        Ok(fam) => Ok(fam[l].clone()),
        Err(e) => Err(e.clone()),
    }
}
