//! Double Macdonald polynomials and their normalizations.

use super::scalar::biscalar_sp_weight;
use super::{BiBasis, BiSymPoly};
use crate::coeffs::RatFunc;
use crate::macdonald::{b_norm, c_hook, macdonald_h, macdonald_p, McParams};
use crate::memo::{memoize, Store};
use crate::partitions::{linear_extension, pair_dominance_leq, PairLabel};
use crate::plethysm::{phi_modify, pleth_symfunc, AlphabetExpr};
use crate::symfunc::{gram_schmidt, GramSchmidtError};
use std::collections::BTreeMap;

type Family = BTreeMap<PairLabel, BiSymPoly>;

/// `q(1−t)/(1−qt)`, the coefficient of `Y` in the alphabet of the `X`-factor.
pub(crate) fn y_shift() -> RatFunc {
    RatFunc::q()
        .mul(&RatFunc::one().sub(&RatFunc::t()))
        .div(&RatFunc::one().sub(&RatFunc::q().mul(&RatFunc::t())))
        .expect("nonzero")
}

/// `P_λ^{(q,qt)}[X + q(1−t)/(1−qt) Y] · P_μ^{(qt,t)}[Y]` in the monomial basis `SM`.
pub fn double_p_factorized(l: &PairLabel) -> BiSymPoly {
    let fx = macdonald_p(&l.lam, &McParams::x_factor());
    let fy = macdonald_p(&l.mu, &McParams::y_factor());
    let a = pleth_symfunc(&fx, &AlphabetExpr::linear(RatFunc::one(), y_shift()));
    let b = pleth_symfunc(&fy, &AlphabetExpr::y());
    a.multiply(&b).to_basis(BiBasis::SM)
}

static FACTORIZED: Store<usize, Family> = Store::new();
static ORACLE: Store<usize, Result<Family, GramSchmidtError>> = Store::new();

/// The double Macdonald polynomial `P_{λ,μ}(q,t)` in the `SM` basis (cached).
pub fn double_p(l: &PairLabel) -> BiSymPoly {
    let n = l.degree();
    let fam = memoize(&FACTORIZED, &n, || {
        PairLabel::all(n)
            .into_iter()
            .map(|k| {
                let p = double_p_factorized(&k);
                (k, p)
            })
            .collect()
    });
    fam[l].clone()
}

/// Triangular orthogonalization of the monomial basis `s_λ[X] m_μ[Y]`.
///
/// `labels` must be a linear extension of the order given by `below(a, b)`
/// (true when `a` lies strictly below `b`). Coordinates are taken in the
/// `SP` basis restricted to `ambient`, where the product is diagonal with
/// the given weights; when `x_vars` is set, `s_λ[X]` with `ℓ(λ) > x_vars` is
/// dropped first. Returns the orthogonal elements in the `SM` basis.
pub(crate) fn orthogonalize_monomials(
    labels: &[PairLabel],
    ambient: &[PairLabel],
    below: impl Fn(&PairLabel, &PairLabel) -> bool,
    weight: impl Fn(&PairLabel) -> RatFunc,
    x_vars: Option<usize>,
) -> Result<Vec<BiSymPoly>, GramSchmidtError> {
    let leading: Vec<Vec<RatFunc>> = labels
        .iter()
        .map(|l| {
            let v = BiSymPoly::basis_element(BiBasis::SM, l.clone()).to_basis(BiBasis::SP);
            let v = match x_vars {
                Some(m) => v.truncate_x(m),
                None => v,
            };
            v.dense_on(ambient)
        })
        .collect();
    let weights: Vec<RatFunc> = ambient.iter().map(weight).collect();
    let rows = gram_schmidt(&leading, &weights, |k, j| below(&labels[j], &labels[k]))?;
    Ok(rows
        .into_iter()
        .map(|row| BiSymPoly::from_dense_on(BiBasis::SM, labels, &row))
        .collect())
}

pub(crate) fn strictly_below(a: &PairLabel, b: &PairLabel) -> bool {
    a != b && pair_dominance_leq(a, b).unwrap_or(false)
}

fn oracle_family(n: usize) -> Result<Family, GramSchmidtError> {
    let all = PairLabel::all(n);
    let ordered = linear_extension(&all, |a, b| pair_dominance_leq(a, b).unwrap_or(false));
    let polys = orthogonalize_monomials(&ordered, &all, strictly_below, biscalar_sp_weight, None)?;
    Ok(ordered.into_iter().zip(polys).collect())
}

/// The double Macdonald polynomial characterized by unitriangularity in `SM`
/// along pair dominance and orthogonality for the `q,t` scalar product.
pub fn double_p_oracle(l: &PairLabel) -> Result<BiSymPoly, GramSchmidtError> {
    let n = l.degree();
    match memoize(&ORACLE, &n, || oracle_family(n)).as_ref() {
        Ok(fam) => Ok(fam[l].clone()),
        Err(e) => Err(e.clone()),
    }
}

/// `⟨⟨P_{λ,μ}, P_{λ,μ}⟩⟩ = q^{|λ|} b_λ(q,qt)^{-1} b_μ(qt,t)^{-1}`.
pub fn double_norm(l: &PairLabel) -> RatFunc {
    let bx = b_norm(&l.lam, &McParams::x_factor());
    let by = b_norm(&l.mu, &McParams::y_factor());
    RatFunc::q()
        .pow(l.lam.size() as u32)
        .div(&bx.mul(&by))
        .expect("norm factors are nonzero")
}

/// `Q_{λ,μ} = P_{λ,μ} / ⟨⟨P_{λ,μ}, P_{λ,μ}⟩⟩`.
pub fn double_q(l: &PairLabel) -> BiSymPoly {
    double_p(l).scale(&double_norm(l).inv().expect("nonzero norm"))
}

/// Integral form `J_{λ,μ} = c_λ(q,qt) c_μ(qt,t) P_{λ,μ}`.
pub fn double_j(l: &PairLabel) -> BiSymPoly {
    let c = c_hook(&l.lam, &McParams::x_factor()).mul(&c_hook(&l.mu, &McParams::y_factor()));
    double_p(l).scale(&c)
}

/// Modified form `H_{λ,μ} = φ(J_{λ,μ})` in the Schur basis `SS`.
pub fn double_h(l: &PairLabel) -> BiSymPoly {
    phi_modify(&double_j(l)).to_basis(BiBasis::SS)
}

/// `H_λ^{(q,qt)}[X + qY] · H_μ^{(qt,t)}[tX + Y]` in the Schur basis `SS`.
pub fn double_h_product(l: &PairLabel) -> BiSymPoly {
    let hx = macdonald_h(&l.lam, &McParams::x_factor());
    let hy = macdonald_h(&l.mu, &McParams::y_factor());
    let a = pleth_symfunc(&hx, &AlphabetExpr::linear(RatFunc::one(), RatFunc::q()));
    let b = pleth_symfunc(&hy, &AlphabetExpr::linear(RatFunc::t(), RatFunc::one()));
    a.multiply(&b).to_basis(BiBasis::SS)
}

/// Outcome of the kernel identity check in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub degree: usize,
    pub pairs: usize,
    pub holds: bool,
}

/// Checks `Σ z_{λ,μ}^{-1} p_{λ,μ} ⊗ p_{λ,μ} = Σ P_{λ,μ} ⊗ Q_{λ,μ}` in each
/// degree up to `max_degree`, with `p_{λ,μ} = s_λ[X] p_μ[X+Y]`.
pub fn kernel_check(max_degree: usize) -> Vec<KernelReport> {
    (0..=max_degree)
        .map(|n| {
            let labels = PairLabel::all(n);
            let ps: Vec<Vec<RatFunc>> = labels
                .iter()
                .map(|l| double_p(l).to_basis(BiBasis::SP).dense_on(&labels))
                .collect();
            let qs: Vec<Vec<RatFunc>> = labels
                .iter()
                .map(|l| double_q(l).to_basis(BiBasis::SP).dense_on(&labels))
                .collect();
            let mut holds = true;
            'outer: for i in 0..labels.len() {
                for j in 0..labels.len() {
                    let lhs = (0..labels.len()).fold(RatFunc::zero(), |acc, k| {
                        if ps[k][i].is_zero() || qs[k][j].is_zero() {
                            acc
                        } else {
                            acc.add(&ps[k][i].mul(&qs[k][j]))
                        }
                    });
                    let rhs = if i == j {
                        biscalar_sp_weight(&labels[i]).inv().expect("nonzero")
                    } else {
                        RatFunc::zero()
                    };
                    if lhs != rhs {
                        holds = false;
                        break 'outer;
                    }
                }
            }
            KernelReport {
                degree: n,
                pairs: labels.len(),
                holds,
            }
        })
        .collect()
}
