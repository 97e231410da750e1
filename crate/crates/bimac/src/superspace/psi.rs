//! The circle-removing map `ψ` and the Kostka relations it induces.

use super::{hook_product, sector_key, super_h_expansion, super_kostka, SuperExpansion};
use crate::coeffs::RatFunc;
use crate::macdonald::{macdonald_h, McParams};
use crate::partitions::{Partition, SuperPartition};
use crate::symfunc::{Basis, SymPoly};
use crate::Error;

fn signed(c: &RatFunc, circles_above: usize) -> RatFunc {
    if circles_above.is_multiple_of(2) {
        c.clone()
    } else {
        c.neg()
    }
}

/// `s_Λ ↦ Σ (−1)^{#(Λ,Ω)} s_Ω` over the `Ω` obtained by turning one circle of
/// `Λ` into a box, `#(Λ,Ω)` counting the circles above the converted one.
pub fn psi(f: &SuperExpansion) -> SuperExpansion {
    let mut out = SuperExpansion::new();
    for (l, c) in f {
        for (target, above) in l.circle_to_box() {
            let entry = out.entry(target).or_insert_with(RatFunc::zero);
            *entry = entry.add(&signed(c, above));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `ψ` on fermionic degree one, landing in ordinary Schur functions:
/// `s_Ω ↦ s_{Ω⊛}`.
pub fn psi_to_schur(f: &SuperExpansion) -> Result<SymPoly, Error> {
    if let Some(l) = f.keys().find(|l| l.m() != 1) {
        return Err(Error::DegreeMismatch(l.to_string(), "fermionic degree 1".into()));
    }
    let terms = psi(f).into_iter().map(|(l, c)| (l.sym().clone(), c));
    Ok(SymPoly::from_terms(Basis::S, terms))
}

/// `v_Λ`, the hook product over fermionic boxes.
pub fn fermionic_factor(l: &SuperPartition) -> RatFunc {
    hook_product(l, &l.stats().fermionic_boxes)
}

/// Both sides of the relation between Kostka coefficients of neighbouring
/// fermionic degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KdiffmReport {
    pub lhs: RatFunc,
    pub rhs: RatFunc,
}

impl KdiffmReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `v_Λ Σ_{Ω^⊡ ∋ Δ} (−1)^{#(Ω,Δ)} K_{ΩΛ}` against
/// `Σ_{Γ ∈ Λ^⊡} (−1)^{#(Λ,Γ)} v_Γ K_{ΔΓ}`.
pub fn kdiffm_check(l: &SuperPartition, delta: &SuperPartition) -> Result<KdiffmReport, Error> {
    if l.m() != delta.m() + 1 || l.star().size() + 1 != delta.star().size() {
        return Err(Error::DegreeMismatch(l.to_string(), delta.to_string()));
    }
    let h = super_h_expansion(l)?;
    let mut sum = RatFunc::zero();
    for (omega, k) in &h {
        for (target, above) in omega.circle_to_box() {
            if &target == delta {
                sum = sum.add(&signed(k, above));
            }
        }
    }
    let lhs = fermionic_factor(l).mul(&sum);
    let mut rhs = RatFunc::zero();
    for (gamma, above) in l.circle_to_box() {
        let term = fermionic_factor(&gamma).mul(&super_kostka(delta, &gamma)?);
        rhs = rhs.add(&signed(&term, above));
    }
    Ok(KdiffmReport { lhs, rhs })
}

/// For every `Λ` with `Λ⊛ = λ` and fermionic degree one: `ψ(H_Λ) = H_λ`,
/// equivalently `K_{μλ} = Σ_{Ω⊛ = μ} K_{ΩΛ}` for all `μ`.
pub fn relate_kostka_check(lam: &Partition) -> Result<bool, Error> {
    let expected = macdonald_h(lam, &McParams::standard());
    for l in SuperPartition::with_circle_from(lam) {
        debug_assert_eq!(sector_key(&l).1, 1);
        let image = psi_to_schur(&super_h_expansion(&l)?)?;
        if image != expected {
            return Ok(false);
        }
        for mu in Partition::all(lam.size()) {
            let sum = super_h_expansion(&l)?
                .iter()
                .filter(|(o, _)| o.circ() == mu)
                .fold(RatFunc::zero(), |acc, (_, k)| acc.add(k));
            if sum != expected.coeff(&mu) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
