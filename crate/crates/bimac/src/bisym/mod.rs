//! Bisymmetric functions: symmetric functions in two alphabets `X` and `Y`.
//!
//! Elements are finite combinations of basis elements indexed by pairs of
//! partitions. The canonical basis is `p_λ[X] p_μ[Y]`; the others are
//! reached through cached per-degree transition matrices.

pub(crate) mod double;
mod duality;
mod evaluation;
mod kostka;
mod scalar;
mod special;
pub mod tables;

pub use double::{
    double_h, double_h_product, double_j, double_norm, double_p, double_p_factorized, double_p_oracle, double_q,
    kernel_check, KernelReport,
};
pub use duality::{lr4_identity, omega_b, omega_b_inverse};
pub use evaluation::{evaluate_closed, evaluate_explicit, evaluate_monomials, EvaluationPoint};
pub use kostka::{
    dimension_square_sum, double_kostka, double_kostka_sum, hyperoctahedral_order, kostka_matrix, kostka_specials,
    kostka_symmetries_check, KostkaMatrix, KostkaSpecials, SymmetryReport,
};
pub use scalar::{b_hall_scalar, biscalar_primed, biscalar_qt, biscalar_sp_weight, jack_sp_weight};
pub use special::{double_jack_factorized, double_jack_oracle, specialize, specialize_expected, Specialization};

use crate::coeffs::{CoeffError, RatFunc, Var};
use crate::partitions::PairLabel;
use crate::symfunc::Basis;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use tables::{bitables, Alphabet};

/// Two-alphabet bases. Each is a product `f_λ[A] g_μ[B]` of one-alphabet bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BiBasis {
    /// `p_λ[X] p_μ[Y]`.
    PP = 0,
    /// `s_λ[X] m_μ[Y]`, the monomial basis of the bisymmetric algebra.
    SM = 1,
    /// `s_λ[X] p_μ[X+Y]`.
    SP = 2,
    /// `s_λ[X] s_μ[Y]`.
    SS = 3,
    /// `p_λ[X+Y] p_μ[X−Y]`.
    PM = 4,
    /// `m_λ[X] m_μ[Y]`.
    MM = 5,
}

impl BiBasis {
    pub const ALL: [BiBasis; 6] = [BiBasis::PP, BiBasis::SM, BiBasis::SP, BiBasis::SS, BiBasis::PM, BiBasis::MM];

    pub(crate) fn factors(self) -> ((Basis, Alphabet), (Basis, Alphabet)) {
        match self {
            BiBasis::PP => ((Basis::P, Alphabet::X), (Basis::P, Alphabet::Y)),
            BiBasis::SM => ((Basis::S, Alphabet::X), (Basis::M, Alphabet::Y)),
            BiBasis::SP => ((Basis::S, Alphabet::X), (Basis::P, Alphabet::Sum)),
            BiBasis::SS => ((Basis::S, Alphabet::X), (Basis::S, Alphabet::Y)),
            BiBasis::PM => ((Basis::P, Alphabet::Sum), (Basis::P, Alphabet::Diff)),
            BiBasis::MM => ((Basis::M, Alphabet::X), (Basis::M, Alphabet::Y)),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BiBasis::PP => "PP",
            BiBasis::SM => "SM",
            BiBasis::SP => "SP",
            BiBasis::SS => "SS",
            BiBasis::PM => "PM",
            BiBasis::MM => "MM",
        }
    }

    /// True when the first factor is a function of `X` alone, so that
    /// restricting `X` to `m` variables kills exactly the labels with `ℓ(λ) > m`.
    pub fn has_schur_x_factor(self) -> bool {
        matches!(self, BiBasis::SM | BiBasis::SP | BiBasis::SS)
    }
}

impl fmt::Display for BiBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for BiBasis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BiBasis::ALL
            .into_iter()
            .find(|b| b.symbol().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown basis {s:?}"))
    }
}

/// A bisymmetric function expanded in one of the [`BiBasis`] bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSymPoly {
    basis: BiBasis,
    coeffs: BTreeMap<PairLabel, RatFunc>,
}

impl BiSymPoly {
    pub fn zero(basis: BiBasis) -> Self {
        BiSymPoly {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::basis_element(BiBasis::PP, PairLabel::default())
    }

    pub fn basis_element(basis: BiBasis, label: PairLabel) -> Self {
        Self::from_terms(basis, [(label, RatFunc::one())])
    }

    pub fn from_terms(basis: BiBasis, terms: impl IntoIterator<Item = (PairLabel, RatFunc)>) -> Self {
        let mut r = Self::zero(basis);
        for (l, c) in terms {
            r.add_term(l, &c);
        }
        r
    }

    pub fn basis(&self) -> BiBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PairLabel, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, l: &PairLabel) -> RatFunc {
        self.coeffs.get(l).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, l: PairLabel, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&l) {
            Some(e) => {
                *e = e.add(c);
                if e.is_zero() {
                    self.coeffs.remove(&l);
                }
            }
            None => {
                self.coeffs.insert(l, c.clone());
            }
        }
    }

    /// Total degrees present, increasing.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.coeffs.keys().map(|l| l.degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The total degree when homogeneous (`None` for zero or mixed degrees).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn add(&self, o: &BiSymPoly) -> BiSymPoly {
        let o = o.to_basis(self.basis);
        let mut r = self.clone();
        for (l, c) in o.coeffs {
            r.add_term(l, &c);
        }
        r
    }

    pub fn sub(&self, o: &BiSymPoly) -> BiSymPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> BiSymPoly {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &RatFunc) -> BiSymPoly {
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> BiSymPoly {
        Self::from_terms(self.basis, self.coeffs.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    pub fn map_terms(&self, f: impl Fn(&PairLabel, &RatFunc) -> RatFunc) -> BiSymPoly {
        Self::from_terms(self.basis, self.coeffs.iter().map(|(l, c)| (l.clone(), f(l, c))))
    }

    pub fn try_map_coeffs<E>(&self, f: impl Fn(&RatFunc) -> Result<RatFunc, E>) -> Result<BiSymPoly, E> {
        let mut r = Self::zero(self.basis);
        for (l, c) in &self.coeffs {
            r.add_term(l.clone(), &f(c)?);
        }
        Ok(r)
    }

    /// Substitutes parameters in every coefficient.
    pub fn substitute(&self, bindings: &[(Var, RatFunc)]) -> Result<BiSymPoly, CoeffError> {
        self.try_map_coeffs(|c| c.substitute(bindings))
    }

    /// Re-expands in another basis.
    pub fn to_basis(&self, target: BiBasis) -> BiSymPoly {
        if target == self.basis {
            return self.clone();
        }
        let mut out = Self::zero(target);
        for n in self.degrees() {
            let tb = bitables(n);
            let k = tb.labels.len();
            let mut in_pp = vec![RatFunc::zero(); k];
            for (l, c) in self.coeffs.iter().filter(|(l, _)| l.degree() == n) {
                let row = &tb.to_pp(self.basis)[tb.index[l]];
                for (j, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        in_pp[j] = in_pp[j].add(&c.scale_rational(x));
                    }
                }
            }
            let back = tb.from_pp(target);
            for (j, c) in in_pp.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, x) in back[j].iter().enumerate() {
                    if !x.is_zero() {
                        out.add_term(tb.labels[i].clone(), &c.scale_rational(x));
                    }
                }
            }
        }
        out
    }

    /// Product, returned in the basis of `self`.
    pub fn multiply(&self, o: &BiSymPoly) -> BiSymPoly {
        let a = self.to_basis(BiBasis::PP);
        let b = o.to_basis(BiBasis::PP);
        let mut r = Self::zero(BiBasis::PP);
        for (la, ca) in &a.coeffs {
            for (lb, cb) in &b.coeffs {
                let key = PairLabel::new(la.lam.union(&lb.lam), la.mu.union(&lb.mu));
                r.add_term(key, &ca.mul(cb));
            }
        }
        r.to_basis(self.basis)
    }

    /// Image under restriction of `X` to `m` variables: drops `s_λ[X]` with
    /// `ℓ(λ) > m`. The basis must have a Schur factor in `X`.
    pub fn truncate_x(&self, m: usize) -> BiSymPoly {
        assert!(
            self.basis.has_schur_x_factor(),
            "truncation needs an s[X] factor, not {}",
            self.basis
        );
        Self::from_terms(
            self.basis,
            self.coeffs
                .iter()
                .filter(|(l, _)| l.lam.len() <= m)
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    /// Dense coefficients for degree `n` in the order of [`PairLabel::all`].
    pub fn dense(&self, n: usize) -> Vec<RatFunc> {
        bitables(n).labels.iter().map(|l| self.coeff(l)).collect()
    }

    /// Coefficient vector over the given labels.
    pub fn dense_on(&self, labels: &[PairLabel]) -> Vec<RatFunc> {
        labels.iter().map(|l| self.coeff(l)).collect()
    }

    pub fn from_dense_on(basis: BiBasis, labels: &[PairLabel], v: &[RatFunc]) -> BiSymPoly {
        Self::from_terms(basis, labels.iter().cloned().zip(v.iter().cloned()))
    }

    /// True when every coefficient satisfies the predicate.
    pub fn all_coeffs(&self, pred: impl Fn(&RatFunc) -> bool) -> bool {
        self.coeffs.values().all(pred)
    }
}

impl fmt::Display for BiSymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(l, c)| {
                if c.is_one() {
                    format!("{sym}[{l}]")
                } else {
                    format!("({c}){sym}[{l}]")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `(λ, μ)` convenience constructor for labels written as slices.
pub fn pair(lam: &[usize], mu: &[usize]) -> PairLabel {
    PairLabel::of(lam, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rf;

    #[test]
    fn monomial_y_in_sp() {
        let m = BiSymPoly::basis_element(BiBasis::SM, pair(&[], &[1])).to_basis(BiBasis::SP);
        let expected = BiSymPoly::from_terms(
            BiBasis::SP,
            [(pair(&[], &[1]), RatFunc::one()), (pair(&[1], &[]), rf("-1"))],
        );
        assert_eq!(m, expected);
    }

    #[test]
    fn schur_x_is_power_sum() {
        let s = BiSymPoly::basis_element(BiBasis::SS, pair(&[1], &[])).to_basis(BiBasis::PP);
        assert_eq!(s, BiSymPoly::basis_element(BiBasis::PP, pair(&[1], &[])));
    }

    #[test]
    fn sum_power_sum_splits_in_schur() {
        let p = BiSymPoly::basis_element(BiBasis::SP, pair(&[], &[1])).to_basis(BiBasis::SS);
        let expected = BiSymPoly::from_terms(
            BiBasis::SS,
            [(pair(&[1], &[]), RatFunc::one()), (pair(&[], &[1]), RatFunc::one())],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn round_trips_through_every_basis() {
        let f = BiSymPoly::from_terms(
            BiBasis::SM,
            [
                (pair(&[2], &[1]), rf("q")),
                (pair(&[1], &[1, 1]), rf("1-t")),
                (pair(&[], &[3]), rf("2")),
            ],
        );
        for b in BiBasis::ALL {
            assert_eq!(f.to_basis(b).to_basis(BiBasis::SM), f, "via {b}");
        }
    }

    #[test]
    fn product_of_schurs_in_x() {
        let s1 = BiSymPoly::basis_element(BiBasis::SS, pair(&[1], &[]));
        let prod = s1.multiply(&s1);
        let expected = BiSymPoly::from_terms(
            BiBasis::SS,
            [(pair(&[2], &[]), RatFunc::one()), (pair(&[1, 1], &[]), RatFunc::one())],
        );
        assert_eq!(prod, expected);
    }
}
