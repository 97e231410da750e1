//! Symmetric functions in one alphabet.
//!
//! A [`SymPoly`] is a finite combination of basis elements indexed by
//! partitions, with [`RatFunc`] coefficients. Conversions go through power
//! sums using cached per-degree transition matrices.

mod gram_schmidt;
mod scalar;
pub mod tables;

pub use gram_schmidt::{gram_schmidt, GramSchmidtError};
pub use scalar::ScalarProduct;

use crate::coeffs::RatFunc;
use crate::partitions::Partition;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use tables::tables;

/// The classical bases of the ring of symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M = 0,
    E = 1,
    H = 2,
    P = 3,
    S = 4,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.symbol() == s)
    }
}

/// A symmetric function expanded in one of the classical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    basis: Basis,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl SymPoly {
    pub fn zero(basis: Basis) -> Self {
        SymPoly {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element `b_lam`.
    pub fn basis_element(basis: Basis, lam: Partition) -> Self {
        Self::from_terms(basis, [(lam, RatFunc::one())])
    }

    pub fn m(parts: &[usize]) -> Self {
        Self::basis_element(Basis::M, Partition::of(parts))
    }
    pub fn e(parts: &[usize]) -> Self {
        Self::basis_element(Basis::E, Partition::of(parts))
    }
    pub fn h(parts: &[usize]) -> Self {
        Self::basis_element(Basis::H, Partition::of(parts))
    }
    pub fn p(parts: &[usize]) -> Self {
        Self::basis_element(Basis::P, Partition::of(parts))
    }
    pub fn s(parts: &[usize]) -> Self {
        Self::basis_element(Basis::S, Partition::of(parts))
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, RatFunc)>) -> Self {
        let mut f = Self::zero(basis);
        for (l, c) in terms {
            f.add_term(l, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `b_lam` (zero when absent).
    pub fn coeff(&self, lam: &Partition) -> RatFunc {
        self.coeffs.get(lam).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, lam: Partition, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lam) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Degrees that occur.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.coeffs.keys().map(|l| l.size()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn add(&self, o: &SymPoly) -> SymPoly {
        let o = o.to_basis(self.basis);
        let mut r = self.clone();
        for (l, c) in o.coeffs {
            r.add_term(l, &c);
        }
        r
    }

    pub fn sub(&self, o: &SymPoly) -> SymPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> SymPoly {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, c: &RatFunc) -> SymPoly {
        self.map_coeffs(|x| x.mul(c))
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> SymPoly {
        let mut r = Self::zero(self.basis);
        for (l, c) in &self.coeffs {
            r.add_term(l.clone(), &f(c));
        }
        r
    }

    /// Fallible variant of [`SymPoly::map_coeffs`].
    pub fn try_map_coeffs<E>(&self, f: impl Fn(&RatFunc) -> Result<RatFunc, E>) -> Result<SymPoly, E> {
        let mut r = Self::zero(self.basis);
        for (l, c) in &self.coeffs {
            r.add_term(l.clone(), &f(c)?);
        }
        Ok(r)
    }

    /// Re-expands in another basis.
    pub fn to_basis(&self, target: Basis) -> SymPoly {
        if target == self.basis {
            return self.clone();
        }
        let mut out = Self::zero(target);
        for n in self.degrees() {
            let tb = tables(n);
            let k = tb.labels.len();
            let mut in_p = vec![RatFunc::zero(); k];
            for (l, c) in self.coeffs.iter().filter(|(l, _)| l.size() == n) {
                let row = &tb.to_p(self.basis)[tb.index[l]];
                for (j, x) in row.iter().enumerate() {
                    if !num_traits::Zero::is_zero(x) {
                        in_p[j] = in_p[j].add(&c.scale_rational(x));
                    }
                }
            }
            let back = tb.from_p(target);
            for (j, c) in in_p.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, x) in back[j].iter().enumerate() {
                    if !num_traits::Zero::is_zero(x) {
                        out.add_term(tb.labels[i].clone(), &c.scale_rational(x));
                    }
                }
            }
        }
        out
    }

    /// Product, returned in the basis of `self`.
    pub fn multiply(&self, o: &SymPoly) -> SymPoly {
        let a = self.to_basis(Basis::P);
        let b = o.to_basis(Basis::P);
        let mut r = Self::zero(Basis::P);
        for (la, ca) in &a.coeffs {
            for (lb, cb) in &b.coeffs {
                r.add_term(la.union(lb), &ca.mul(cb));
            }
        }
        r.to_basis(self.basis)
    }

    /// Dense coefficient vector in the current basis for degree `n`, ordered
    /// as [`Partition::all`].
    pub fn dense(&self, n: usize) -> Vec<RatFunc> {
        let tb = tables(n);
        tb.labels.iter().map(|l| self.coeff(l)).collect()
    }

    /// Inverse of [`SymPoly::dense`].
    pub fn from_dense(basis: Basis, n: usize, v: &[RatFunc]) -> SymPoly {
        let tb = tables(n);
        Self::from_terms(basis, tb.labels.iter().cloned().zip(v.iter().cloned()))
    }

    /// Substitutes parameters in every coefficient.
    pub fn substitute(
        &self,
        bindings: &[(crate::coeffs::Var, RatFunc)],
    ) -> Result<SymPoly, crate::coeffs::CoeffError> {
        self.try_map_coeffs(|c| c.substitute(bindings))
    }
}

impl fmt::Display for SymPoly {
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

/// Littlewood–Richardson coefficients `c^ν_{a,b}` of `s_a s_b`.
pub fn littlewood_richardson(a: &Partition, b: &Partition) -> BTreeMap<Partition, BigInt> {
    let prod = SymPoly::basis_element(Basis::S, a.clone())
        .multiply(&SymPoly::basis_element(Basis::S, b.clone()));
    prod.terms()
        .map(|(l, c)| {
            let v = c.to_rational().expect("integer structure constants");
            assert!(v.is_integer(), "integer structure constants");
            (l.clone(), v.to_integer())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rf;

    #[test]
    fn schur_in_power_sums() {
        let s2 = SymPoly::s(&[2]).to_basis(Basis::P);
        let expected = SymPoly::p(&[2]).add(&SymPoly::p(&[1, 1])).scale(&rf("1/2"));
        assert_eq!(s2, expected);
    }

    #[test]
    fn elementary_monomial_is_schur_column() {
        assert_eq!(SymPoly::m(&[1, 1]).to_basis(Basis::S), SymPoly::s(&[1, 1]));
    }

    #[test]
    fn complete_in_monomials() {
        let h = SymPoly::h(&[2, 1]).to_basis(Basis::M);
        let expected = SymPoly::from_terms(
            Basis::M,
            [
                (Partition::of(&[3]), rf("1")),
                (Partition::of(&[2, 1]), rf("2")),
                (Partition::of(&[1, 1, 1]), rf("3")),
            ],
        );
        assert_eq!(h, expected);
    }

    #[test]
    fn products() {
        assert_eq!(SymPoly::p(&[1]).multiply(&SymPoly::p(&[1])), SymPoly::p(&[1, 1]));
        let s1 = SymPoly::s(&[1]);
        assert_eq!(s1.multiply(&s1), SymPoly::s(&[2]).add(&SymPoly::s(&[1, 1])));
        let cube = s1.multiply(&s1).multiply(&s1);
        let rest = cube.sub(&SymPoly::s(&[3])).sub(&SymPoly::s(&[1, 1, 1]));
        assert_eq!(rest, SymPoly::s(&[2, 1]).scale(&rf("2")));
    }

    #[test]
    fn lr_examples() {
        let p = Partition::of;
        let c = littlewood_richardson(&p(&[1]), &p(&[1, 1]));
        assert_eq!(c.len(), 2);
        assert_eq!(c[&p(&[2, 1])], BigInt::from(1));
        assert_eq!(c[&p(&[1, 1, 1])], BigInt::from(1));
        let c = littlewood_richardson(&p(&[]), &p(&[3, 1]));
        assert_eq!(c.len(), 1);
        assert_eq!(c[&p(&[3, 1])], BigInt::from(1));
        let c = littlewood_richardson(&p(&[2, 1]), &p(&[2, 1]));
        assert_eq!(c[&p(&[3, 2, 1])], BigInt::from(2));
    }
}
