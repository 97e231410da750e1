//! Macdonald superpolynomials through their bisymmetric images.
//!
//! A superpolynomial in `N` variables with fermionic degree `m` is carried by
//! a bisymmetric function whose `x` alphabet has `m` variables. The sector of
//! `(n, m)` consists of the superpartitions `(λ + δ^m; μ)` with `|λ| + |μ| = n`
//! and `ℓ(λ) ≤ m`; polynomials are stored in the `SM` basis with every
//! `s_λ[X]`, `ℓ(λ) > m`, dropped.

mod checks;
mod evaluation;
mod psi;

pub use checks::{
    bidegrees, h_down_stable_check, integrality_check, norm_check, ordering_equivalence, positivity_check,
    stable_degree_check, stable_kostka_check, super_n_bar, super_symmetry_check, CheckReport,
};
pub use evaluation::{super_evaluation_closed, super_evaluation_explicit};
pub use psi::{fermionic_factor, kdiffm_check, psi, psi_to_schur, relate_kostka_check, KdiffmReport};

use crate::bisym::{biscalar_sp_weight, double_p, BiBasis, BiSymPoly};
use crate::bisym::double::orthogonalize_monomials;
use crate::coeffs::{RatFunc, Var};
use crate::memo::{memoize, Store};
use crate::partitions::{linear_extension, super_dominance_leq, PairLabel, SuperPartition};
use crate::plethysm::phi_modify;
use crate::Error;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// Coefficients on the super-Schur basis of one sector.
pub type SuperExpansion = BTreeMap<SuperPartition, RatFunc>;

struct Sector {
    /// Labels in a linear extension of super dominance, lowest first.
    labels: Vec<SuperPartition>,
    index: HashMap<SuperPartition, usize>,
    p: Vec<BiSymPoly>,
    schur: Vec<BiSymPoly>,
}

static SECTORS: Store<(usize, usize), Result<Sector, Error>> = Store::new();
static H_EXPANSIONS: Store<SuperPartition, Result<SuperExpansion, Error>> = Store::new();

fn build_sector(n: usize, m: usize) -> Result<Sector, Error> {
    let labels = linear_extension(&SuperPartition::sector(n, m), |a, b| {
        super_dominance_leq(a, b).unwrap_or(false)
    });
    build_sector_in_order(n, m, labels)
}

fn build_sector_in_order(n: usize, m: usize, labels: Vec<SuperPartition>) -> Result<Sector, Error> {
    let pairs: Vec<PairLabel> = labels.iter().map(SuperPartition::to_pair).collect();
    let below = |a: &PairLabel, b: &PairLabel| {
        let (a, b) = (
            SuperPartition::from_pair(a, m).expect("sector label"),
            SuperPartition::from_pair(b, m).expect("sector label"),
        );
        a != b && super_dominance_leq(&a, &b).unwrap_or(false)
    };
    let ambient = PairLabel::all_with_max_len(n, m);
    let p = orthogonalize_monomials(&pairs, &ambient, below, biscalar_sp_weight, Some(m))?;
    let schur = p
        .iter()
        .map(|f| {
            f.substitute(&[(Var::Q, RatFunc::zero())])
                .and_then(|g| g.substitute(&[(Var::T, RatFunc::zero())]))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    Ok(Sector { labels, index, p, schur })
}

fn sector_of(n: usize, m: usize) -> Result<Arc<Result<Sector, Error>>, Error> {
    let s = memoize(&SECTORS, &(n, m), || build_sector(n, m));
    match s.as_ref() {
        Ok(_) => Ok(s),
        Err(e) => Err(e.clone()),
    }
}

fn with_sector<R>(n: usize, m: usize, f: impl FnOnce(&Sector) -> R) -> Result<R, Error> {
    let s = sector_of(n, m)?;
    Ok(f(s.as_ref().as_ref().expect("checked above")))
}

/// Sector coordinates `(n, m)` of a superpartition.
pub fn sector_key(l: &SuperPartition) -> (usize, usize) {
    (l.to_pair().degree(), l.m())
}

fn with_label<R>(l: &SuperPartition, f: impl FnOnce(&Sector, usize) -> R) -> Result<R, Error> {
    let (n, m) = sector_key(l);
    with_sector(n, m, |s| f(s, s.index[l]))
}

/// The sector labels ordered from lowest to highest along super dominance.
pub fn super_sector(n: usize, m: usize) -> Result<Vec<SuperPartition>, Error> {
    with_sector(n, m, |s| s.labels.clone())
}

/// `P_Λ(q,t)`: unitriangular on monomials along super dominance and
/// orthogonal for the super scalar product.
pub fn super_p(l: &SuperPartition) -> Result<BiSymPoly, Error> {
    with_label(l, |s, i| s.p[i].clone())
}

/// The super-Schur function `s_Λ = P_Λ(0,0)`.
pub fn super_schur(l: &SuperPartition) -> Result<BiSymPoly, Error> {
    with_label(l, |s, i| s.schur[i].clone())
}

/// The image of `m_Λ` or `p_Λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuperBasis {
    Monomial,
    PowerSum,
}

/// `m_Λ ↦ m_λ[X] m_μ[Y]` and `p_Λ ↦ s_λ[X] p_μ[X+Y]` for `Λ = (λ + δ^m; μ)`.
pub fn super_basis_image(l: &SuperPartition, which: SuperBasis) -> BiSymPoly {
    let basis = match which {
        SuperBasis::Monomial => BiBasis::SM,
        SuperBasis::PowerSum => BiBasis::SP,
    };
    BiSymPoly::basis_element(basis, l.to_pair())
}

fn sign_power(e: usize) -> RatFunc {
    if e.is_multiple_of(2) {
        RatFunc::one()
    } else {
        RatFunc::one().neg()
    }
}

fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// `⟨⟨F, G⟩⟩_{q,t}` on the sector with `m` fermions: `(−q)^{m(m−1)/2}` times
/// the diagonal product on the truncated `s_λ[X] p_μ[X+Y]` coordinates.
pub fn super_scalar(f: &BiSymPoly, g: &BiSymPoly, m: usize) -> RatFunc {
    let f = f.to_basis(BiBasis::SP).truncate_x(m);
    let g = g.to_basis(BiBasis::SP).truncate_x(m);
    let sum = f.terms().fold(RatFunc::zero(), |acc, (l, c)| {
        let d = g.coeff(l);
        if d.is_zero() {
            acc
        } else {
            acc.add(&c.mul(&d).mul(&biscalar_sp_weight(l)))
        }
    });
    let e = binom2(m);
    sign_power(e).mul(&RatFunc::q().pow(e as u32)).mul(&sum)
}

/// `⟨⟨P_Λ, P_Λ⟩⟩_{q,t}` computed from the polynomial.
pub fn super_norm(l: &SuperPartition) -> Result<RatFunc, Error> {
    let p = super_p(l)?;
    Ok(super_scalar(&p, &p, l.m()))
}

/// `(−1)^{m(m−1)/2} q^{|Λ^a|} h↑_Λ / h↓_Λ`.
pub fn super_norm_formula(l: &SuperPartition) -> RatFunc {
    let a: usize = l.anti().iter().sum();
    sign_power(binom2(l.m()))
        .mul(&RatFunc::q().pow(a as u32))
        .mul(&h_up(l))
        .div(&h_down(l))
        .expect("h↓ is nonzero")
}

/// `Π (1 − q^{a_{Λ⊛}(s)} t^{l_{Λ*}(s)+1})` over the given cells.
pub(crate) fn hook_product(l: &SuperPartition, cells: &[(usize, usize)]) -> RatFunc {
    let (circ, star) = (l.circ(), l.star());
    cells.iter().fold(RatFunc::one(), |acc, &(i, j)| {
        let term = RatFunc::qt_power(circ.arm(i, j) as i64, star.leg(i, j) as i64 + 1);
        acc.mul(&RatFunc::one().sub(&term))
    })
}

/// `h↓_Λ`, the hook product over bosonic boxes.
pub fn h_down(l: &SuperPartition) -> RatFunc {
    hook_product(l, &l.stats().bosonic_boxes)
}

/// `h↑_Λ(q,t) = h↓_{Λ'}(t,q)`.
pub fn h_up(l: &SuperPartition) -> RatFunc {
    h_down(&l.conjugate()).swap_qt()
}

/// Integral form `J_Λ = h↓_Λ P_Λ`.
pub fn super_j(l: &SuperPartition) -> Result<BiSymPoly, Error> {
    Ok(super_p(l)?.scale(&h_down(l)))
}

/// Modified form `H_Λ = φ(J_Λ)` in the `SM` basis.
pub fn super_h(l: &SuperPartition) -> Result<BiSymPoly, Error> {
    Ok(phi_modify(&super_j(l)?).to_basis(BiBasis::SM).truncate_x(l.m()))
}

/// Expands a sector element on the super-Schur basis.
pub fn super_schur_expand(f: &BiSymPoly, n: usize, m: usize) -> Result<SuperExpansion, Error> {
    let mut rest = f.to_basis(BiBasis::SM).truncate_x(m);
    if rest.degrees().iter().any(|&d| d != n) {
        return Err(Error::Inhomogeneous);
    }
    with_sector(n, m, |s| {
        let mut out = SuperExpansion::new();
        for (label, schur) in s.labels.iter().zip(&s.schur).rev() {
            let c = rest.coeff(&label.to_pair());
            if !c.is_zero() {
                rest = rest.sub(&schur.scale(&c));
                out.insert(label.clone(), c);
            }
        }
        if rest.is_zero() {
            Ok(out)
        } else {
            Err(Error::OutsideSpan(format!("sector ({n}, {m})")))
        }
    })?
}

/// `H_Λ` on the super-Schur basis; the coefficients are the super Kostka
/// coefficients `K_{ΩΛ}(q,t)`.
pub fn super_h_expansion(l: &SuperPartition) -> Result<SuperExpansion, Error> {
    memoize(&H_EXPANSIONS, l, || {
        let (n, m) = sector_key(l);
        super_schur_expand(&super_h(l)?, n, m)
    })
    .as_ref()
    .clone()
}

/// `K_{ΩΛ}(q,t)`, the coefficient of `s_Ω` in `H_Λ`.
pub fn super_kostka(schur: &SuperPartition, l: &SuperPartition) -> Result<RatFunc, Error> {
    if sector_key(schur) != sector_key(l) {
        return Err(Error::DegreeMismatch(schur.to_string(), l.to_string()));
    }
    Ok(super_h_expansion(l)?.get(schur).cloned().unwrap_or_else(RatFunc::zero))
}

/// `P_{(λ+δ^m; μ)}` for a range of fermionic degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub label: PairLabel,
    /// `(m, P)` for every `m ≥ ℓ(λ)` in the sweep.
    pub expansions: Vec<(usize, BiSymPoly)>,
    /// Smallest `m` from which every expansion equals `P_{λ,μ}`.
    pub stable_from: Option<usize>,
}

pub fn stability_sweep(label: &PairLabel, ms: impl IntoIterator<Item = usize>) -> Result<StabilityReport, Error> {
    let target = double_p(label);
    let mut expansions = Vec::new();
    for m in ms {
        if label.lam.len() > m {
            continue;
        }
        expansions.push((m, super_p(&SuperPartition::from_pair(label, m)?)?));
    }
    let stable_from = expansions
        .iter()
        .rposition(|(_, p)| *p != target)
        .map_or(0, |i| i + 1);
    Ok(StabilityReport {
        label: label.clone(),
        stable_from: expansions.get(stable_from).map(|(m, _)| *m),
        expansions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisym::pair;
    use crate::coeffs::rf;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn first_display() {
        let p = super_p(&sp("0;2")).unwrap();
        let expected = BiSymPoly::from_terms(
            BiBasis::SM,
            [
                (pair(&[], &[2]), RatFunc::one()),
                (pair(&[], &[1, 1]), rf("(1-t)*(1+q)/(1-q*t)")),
                (pair(&[1], &[1]), rf("(1-t)/(1-q*t)")),
            ],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn hook_factors() {
        assert_eq!(h_down(&sp("0;1")), rf("1-t"));
        assert_eq!(h_down(&sp("0;")), RatFunc::one());
        let stable = SuperPartition::from_pair(&pair(&[1], &[1]), 2).unwrap();
        assert_eq!(
            h_down(&stable),
            crate::macdonald::c_hook(&crate::partitions::Partition::of(&[1]), &crate::macdonald::McParams::x_factor())
                .mul(&crate::macdonald::c_hook(
                    &crate::partitions::Partition::of(&[1]),
                    &crate::macdonald::McParams::y_factor()
                ))
        );
    }

    #[test]
    fn norms_in_small_sectors() {
        for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2), (0, 3)] {
            for l in SuperPartition::sector(n, m) {
                assert_eq!(super_norm(&l).unwrap(), super_norm_formula(&l), "{l}");
            }
        }
    }

    #[test]
    fn sector_orthogonality() {
        let labels = super_sector(2, 1).unwrap();
        for a in &labels {
            for b in &labels {
                if a != b {
                    let v = super_scalar(&super_p(a).unwrap(), &super_p(b).unwrap(), 1);
                    assert!(v.is_zero(), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn schur_expansion_round_trip() {
        let l = sp("1,0;1");
        let exp = super_h_expansion(&l).unwrap();
        let rebuilt = exp.iter().fold(BiSymPoly::zero(BiBasis::SM), |acc, (o, c)| {
            acc.add(&super_schur(o).unwrap().scale(c))
        });
        assert_eq!(rebuilt, super_h(&l).unwrap());
    }

    #[test]
    fn kostka_example() {
        assert_eq!(super_kostka(&sp("3,1;"), &sp("2,0;2")).unwrap(), rf("t+q*t^2"));
        assert!(super_kostka(&sp("1;"), &sp("2,0;2")).is_err());
    }

    #[test]
    fn independent_of_linear_extension() {
        for (n, m) in [(2, 1), (3, 1), (3, 2)] {
            let mut rest = SuperPartition::sector(n, m);
            rest.sort();
            let mut order = Vec::new();
            while !rest.is_empty() {
                let pos = (0..rest.len())
                    .rev()
                    .find(|&i| (0..rest.len()).all(|j| j == i || !super_dominance_leq(&rest[j], &rest[i]).unwrap()))
                    .unwrap();
                order.push(rest.remove(pos));
            }
            let other = build_sector_in_order(n, m, order).unwrap();
            for (l, p) in other.labels.iter().zip(&other.p) {
                assert_eq!(&super_p(l).unwrap(), p, "{l}");
            }
        }
    }

    #[test]
    fn sweep_settles_at_fermionic_degree_two() {
        let r = stability_sweep(&pair(&[], &[2]), 1..=4).unwrap();
        assert_eq!(r.expansions.len(), 4);
        assert_eq!(r.stable_from, Some(2));
    }
}
