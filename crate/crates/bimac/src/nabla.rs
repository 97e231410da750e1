//! B-type nabla operators, diagonal on the renormalized modified double
//! Macdonald basis `H̃_{λ,μ}`, and the closed forms of their pairings.

use crate::bisym::{b_hall_scalar, double_h, BiBasis, BiSymPoly};
use crate::coeffs::{Mono, Poly, RatFunc, Var};
use crate::linalg::solve_ratfunc;
use crate::memo::{memoize, Store};
use crate::partitions::{PairLabel, Partition};
use crate::plethysm::pleth_evaluate;
use crate::symfunc::SymPoly;
use crate::Error;
use num_bigint::BigInt;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// `q^{−n(λ')−n(μ')} t^{|μ|+n(μ')} H_{λ,μ}(x,y;q,1/t)`, in the `SS` basis.
/// The coefficient of `s_{(1^n),∅}` is 1.
pub fn h_tilde(l: &PairLabel) -> BiSymPoly {
    let (lam, mu) = (&l.lam, &l.mu);
    let nmc = mu.conjugate().n_stat() as i64;
    let scale = RatFunc::qt_power(-((lam.conjugate().n_stat() as i64) + nmc), mu.size() as i64 + nmc);
    let t_inv = RatFunc::t().inv().expect("t ≠ 0");
    double_h(l)
        .substitute(&[(Var::T, t_inv)])
        .expect("polynomial coefficients")
        .scale(&scale)
}

/// The `H̃` basis in one degree together with the change of basis from `SS`.
#[derive(Clone, Debug)]
pub struct NablaBasis {
    pub degree: usize,
    pub labels: Vec<PairLabel>,
    pub elements: Vec<BiSymPoly>,
    /// `from_schur[i][k]`: coefficient of `H̃_k` in `s_{labels[i]}`.
    from_schur: Vec<Vec<RatFunc>>,
}

impl NablaBasis {
    fn build(n: usize) -> Self {
        let labels = PairLabel::all(n);
        let elements: Vec<BiSymPoly> = labels.iter().map(h_tilde).collect();
        let dense: Vec<Vec<RatFunc>> = elements.iter().map(|h| h.dense_on(&labels)).collect();
        let size = labels.len();
        // Columns of `a` are the H̃ vectors; solving `a X = I` gives X = a^{-1}.
        let a: Vec<Vec<RatFunc>> = (0..size).map(|j| (0..size).map(|k| dense[k][j].clone()).collect()).collect();
        let identity: Vec<Vec<RatFunc>> = (0..size)
            .map(|i| (0..size).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }).collect())
            .collect();
        let inverse = solve_ratfunc(a, identity).expect("H̃ is a basis");
        // inverse[k][i] is the H̃_k coefficient of s_i; store transposed.
        let from_schur = (0..size).map(|i| (0..size).map(|k| inverse[k][i].clone()).collect()).collect();
        NablaBasis {
            degree: n,
            labels,
            elements,
            from_schur,
        }
    }

    /// Coordinates of a degree-`n` element on `H̃`.
    pub fn coordinates(&self, f: &BiSymPoly) -> Vec<RatFunc> {
        let mut out = vec![RatFunc::zero(); self.labels.len()];
        let ss = f.to_basis(BiBasis::SS);
        for (l, c) in ss.terms() {
            let i = self.labels.iter().position(|x| x == l).expect("label of the basis degree");
            for (o, r) in out.iter_mut().zip(&self.from_schur[i]) {
                if !r.is_zero() {
                    *o = o.add(&c.mul(r));
                }
            }
        }
        out
    }

    /// `Σ_k c_k H̃_k` in the `SS` basis.
    pub fn combine(&self, coords: &[RatFunc]) -> BiSymPoly {
        coords
            .iter()
            .zip(&self.elements)
            .filter(|(c, _)| !c.is_zero())
            .fold(BiSymPoly::zero(BiBasis::SS), |acc, (c, h)| acc.add(&h.scale(c)))
    }
}

static BASES: Store<usize, NablaBasis> = Store::new();

/// The cached `H̃` basis of degree `n`.
pub fn nabla_basis(n: usize) -> Arc<NablaBasis> {
    memoize(&BASES, &n, || NablaBasis::build(n))
}

/// The three operators diagonal on `H̃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NablaKind {
    /// `∇^B`.
    B,
    /// `∇̄^B`.
    BarB,
    /// `√(∇^B ∇̄^B)`.
    SqrtB,
}

impl NablaKind {
    pub const ALL: [NablaKind; 3] = [NablaKind::B, NablaKind::BarB, NablaKind::SqrtB];

    pub fn name(self) -> &'static str {
        match self {
            NablaKind::B => "B",
            NablaKind::BarB => "barB",
            NablaKind::SqrtB => "sqrtB",
        }
    }
}

impl fmt::Display for NablaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NablaKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NablaKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown operator `{s}`"))
    }
}

/// `n(μ') − n(λ) − n(μ)`.
fn n_hat(lam: &Partition, mu: &Partition) -> i64 {
    mu.conjugate().n_stat() as i64 - lam.n_stat() as i64 - mu.n_stat() as i64
}

/// Eigenvalue of the operator on `H̃_{λ,μ}`.
pub fn eigenvalue(l: &PairLabel, kind: NablaKind) -> RatFunc {
    let (lam, mu) = (&l.lam, &l.mu);
    let (a, b) = (lam.size() as i64, mu.size() as i64);
    let hq = n_hat(&mu.conjugate(), &lam.conjugate());
    let ht = n_hat(lam, mu);
    match kind {
        NablaKind::B => RatFunc::qt_power(a + hq, b + ht),
        NablaKind::BarB => RatFunc::qt_power(a - hq, b - ht),
        NablaKind::SqrtB => RatFunc::qt_power(a, b),
    }
}

/// Applies a nabla operator to a homogeneous element; the result is in `SS`.
pub fn nabla_apply(f: &BiSymPoly, kind: NablaKind) -> Result<BiSymPoly, Error> {
    if f.is_zero() {
        return Ok(BiSymPoly::zero(BiBasis::SS));
    }
    let n = f.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
    let basis = nabla_basis(n);
    let coords: Vec<RatFunc> = basis
        .coordinates(f)
        .iter()
        .zip(&basis.labels)
        .map(|(c, l)| c.mul(&eigenvalue(l, kind)))
        .collect();
    Ok(basis.combine(&coords))
}

/// `[n]_{q,t} = (q^n − t^n)/(q − t) = Σ q^{n−1−i} t^i`.
pub fn qt_integer(n: usize) -> RatFunc {
    let n = n as u32;
    RatFunc::from_poly(Poly::from_terms(
        (0..n).map(|i| (Mono([n - 1 - i, i, 0, 0]), BigInt::from(1))),
    ))
}

fn qt_factorial(n: usize) -> RatFunc {
    (1..=n).fold(RatFunc::one(), |acc, k| acc.mul(&qt_integer(k)))
}

fn binomial_shift(n: usize) -> RatFunc {
    let c = (n * n.saturating_sub(1) / 2) as i64;
    RatFunc::qt_power(-c, -c)
}

/// `(qt)^{−C(n,2)} Σ s_λ[[n]_{q,t}] s_μ[[n+1]_{q,t}] s_{λ,μ}`, in the `SS` basis.
pub fn nabla_on_s_empty_n(n: usize) -> BiSymPoly {
    let (a, b) = (qt_integer(n), qt_integer(n + 1));
    let shift = binomial_shift(n);
    let terms = PairLabel::all(n).into_iter().filter_map(|l| {
        let x = pleth_evaluate(&SymPoly::basis_element(crate::symfunc::Basis::S, l.lam.clone()), &a);
        let y = pleth_evaluate(&SymPoly::basis_element(crate::symfunc::Basis::S, l.mu.clone()), &b);
        let c = x.mul(&y).mul(&shift);
        (!c.is_zero()).then_some((l, c))
    });
    BiSymPoly::from_terms(BiBasis::SS, terms)
}

/// `s_{∅,(n)}` in the `SS` basis.
fn s_empty_n(n: usize) -> BiSymPoly {
    BiSymPoly::basis_element(BiBasis::SS, PairLabel::new(Partition::empty(), Partition::row(n)))
}

/// `∇^B s_{∅,(n)}` computed through the `H̃` basis.
pub fn nabla_on_s_empty_n_operator(n: usize) -> BiSymPoly {
    nabla_apply(&s_empty_n(n), NablaKind::B).expect("homogeneous input")
}

/// `(qt)^{−C(n,2)} [2n]_{q,t}! / ([n]_{q,t}!)^2`.
pub fn catalan_b(n: usize) -> RatFunc {
    let f = qt_factorial(n);
    qt_factorial(2 * n)
        .div(&f.mul(&f))
        .expect("nonzero factorial")
        .mul(&binomial_shift(n))
}

/// `(([n+1]_{q,t} + [n]_{q,t}) / (qt)^{(n−1)/2})^n`, written with the integer
/// exponent `n(n−1)/2` on `qt`.
pub fn dim_pairing(n: usize) -> RatFunc {
    qt_integer(n + 1)
        .add(&qt_integer(n))
        .pow(n as u32)
        .mul(&binomial_shift(n))
}

/// The three `⟨∇^B s_{∅,(n)}, ·⟩_B` pairings evaluated from a given image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NablaPairings {
    /// Against `s_{∅,(n)}`.
    pub catalan: RatFunc,
    /// Against `p_{1^n}[X+Y]`.
    pub dimension: RatFunc,
    /// Against `s_{(1^n),∅}`.
    pub sign_row: RatFunc,
}

pub fn nabla_pairings(image: &BiSymPoly, n: usize) -> NablaPairings {
    let p1n = BiSymPoly::basis_element(BiBasis::SP, PairLabel::new(Partition::empty(), Partition::column(n)));
    let col = BiSymPoly::basis_element(BiBasis::SS, PairLabel::new(Partition::column(n), Partition::empty()));
    NablaPairings {
        catalan: b_hall_scalar(image, &s_empty_n(n)),
        dimension: b_hall_scalar(image, &p1n),
        sign_row: b_hall_scalar(image, &col),
    }
}

/// Overall sign behaviour of a Schur expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignPattern {
    Nonnegative,
    Nonpositive,
    Mixed,
}

/// Classifies the `SS` coefficients of `f` as Laurent polynomials.
pub fn sign_pattern(f: &BiSymPoly) -> SignPattern {
    let f = f.to_basis(BiBasis::SS);
    if f.all_coeffs(RatFunc::is_nonneg_laurent) {
        SignPattern::Nonnegative
    } else if f.all_coeffs(|c| c.neg().is_nonneg_laurent()) {
        SignPattern::Nonpositive
    } else {
        SignPattern::Mixed
    }
}

/// Applies the operator `power` times.
pub fn nabla_power(f: &BiSymPoly, kind: NablaKind, power: usize) -> Result<BiSymPoly, Error> {
    (0..power).try_fold(f.to_basis(BiBasis::SS), |acc, _| nabla_apply(&acc, kind))
}

/// Sign patterns of `kind^power s_{λ,μ}` for every pair of degree `1..=max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub kind: NablaKind,
    pub power: usize,
    pub checked: usize,
    /// Labels whose image has coefficients of both signs.
    pub mixed: Vec<PairLabel>,
}

pub fn schur_sign_report(kind: NablaKind, power: usize, max_n: usize) -> Result<PositivityReport, Error> {
    let mut checked = 0;
    let mut mixed = Vec::new();
    for n in 1..=max_n {
        for l in PairLabel::all(n) {
            let image = nabla_power(&BiSymPoly::basis_element(BiBasis::SS, l.clone()), kind, power)?;
            checked += 1;
            if sign_pattern(&image) == SignPattern::Mixed {
                mixed.push(l);
            }
        }
    }
    Ok(PositivityReport { kind, power, checked, mixed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisym::pair;
    use crate::coeffs::rf;

    #[test]
    fn normalization() {
        for n in 1..=2 {
            for l in PairLabel::all(n) {
                let h = h_tilde(&l);
                assert!(h.coeff(&PairLabel::new(Partition::column(n), Partition::empty())).is_one(), "{l}");
                assert!(h.all_coeffs(|c| c.is_nonneg_laurent()), "{l}");
            }
        }
    }

    #[test]
    fn eigenvalues_degree_one() {
        let h = h_tilde(&pair(&[1], &[]));
        assert_eq!(nabla_apply(&h, NablaKind::B).unwrap(), h.scale(&RatFunc::q()));
        let g = h_tilde(&pair(&[], &[1]));
        assert_eq!(nabla_apply(&g, NablaKind::SqrtB).unwrap(), g.scale(&RatFunc::t()));
    }

    #[test]
    fn product_of_operators() {
        for l in PairLabel::all(2) {
            let e = eigenvalue(&l, NablaKind::B).mul(&eigenvalue(&l, NablaKind::BarB));
            let s = eigenvalue(&l, NablaKind::SqrtB);
            assert_eq!(e, s.mul(&s));
        }
    }

    #[test]
    fn closed_form_low_degree() {
        for n in 1..=2 {
            assert_eq!(nabla_on_s_empty_n(n), nabla_on_s_empty_n_operator(n), "n = {n}");
        }
        let one = nabla_on_s_empty_n(1);
        assert_eq!(one.coeff(&pair(&[], &[1])), rf("q+t"));
        assert!(one.coeff(&pair(&[1], &[])).is_one());
    }

    #[test]
    fn pairings() {
        assert_eq!(catalan_b(1), rf("q+t"));
        assert_eq!(catalan_b(2).at_one().unwrap(), rf("6"));
        assert_eq!(dim_pairing(2).at_one().unwrap(), rf("25"));
        let p = nabla_pairings(&nabla_on_s_empty_n(2), 2);
        assert_eq!(p.catalan, catalan_b(2));
        assert_eq!(p.dimension, dim_pairing(2));
        assert!(p.sign_row.is_one());
    }

    #[test]
    fn sign_patterns_in_degree_one() {
        let r = schur_sign_report(NablaKind::SqrtB, 1, 1).unwrap();
        assert_eq!(r.checked, 2);
        assert!(r.mixed.is_empty());
        assert_eq!(sign_pattern(&BiSymPoly::basis_element(BiBasis::SS, pair(&[1], &[])).neg()), SignPattern::Nonpositive);
    }
}
