//! Scalar products on the bisymmetric algebra, each diagonal in some basis.

use super::{BiBasis, BiSymPoly};
use crate::coeffs::RatFunc;
use crate::macdonald::McParams;
use crate::partitions::PairLabel;
use crate::plethysm::linear_substitution;
use crate::symfunc::ScalarProduct;
use num_bigint::BigInt;

fn diagonal(f: &BiSymPoly, g: &BiSymPoly, basis: BiBasis, weight: impl Fn(&PairLabel) -> RatFunc) -> RatFunc {
    let f = f.to_basis(basis);
    let g = g.to_basis(basis);
    f.terms().fold(RatFunc::zero(), |acc, (l, c)| {
        let d = g.coeff(l);
        if d.is_zero() {
            acc
        } else {
            acc.add(&c.mul(&d).mul(&weight(l)))
        }
    })
}

/// `⟨⟨s_λ p_μ[X+Y], s_λ p_μ[X+Y]⟩⟩ = q^{|λ|} z_μ(q,t)`.
pub fn biscalar_sp_weight(l: &PairLabel) -> RatFunc {
    RatFunc::q()
        .pow(l.lam.size() as u32)
        .mul(&ScalarProduct::qt().norm_p(&l.mu))
}

/// The Jack analogue of [`biscalar_sp_weight`]: `α^{ℓ(μ)} z_μ`.
pub fn jack_sp_weight(l: &PairLabel, alpha: &RatFunc) -> RatFunc {
    ScalarProduct::Jack { alpha: alpha.clone() }.norm_p(&l.mu)
}

/// The `q,t` scalar product, diagonal on `s_λ[X] p_μ[X+Y]`.
pub fn biscalar_qt(f: &BiSymPoly, g: &BiSymPoly) -> RatFunc {
    diagonal(f, g, BiBasis::SP, biscalar_sp_weight)
}

/// Coordinates on `u_λ v_μ` where `u_r = p_r[X + q(1−t)/(1−qt) Y]` and `v_r = p_r[Y]`.
fn to_uv(f: &BiSymPoly) -> BiSymPoly {
    let shift = RatFunc::q()
        .mul(&RatFunc::one().sub(&RatFunc::t()))
        .div(&RatFunc::one().sub(&RatFunc::q().mul(&RatFunc::t())))
        .expect("nonzero");
    linear_substitution(f, |r| {
        [
            [RatFunc::one(), shift.pleth_power(r as u32).neg()],
            [RatFunc::zero(), RatFunc::one()],
        ]
    })
}

/// The scalar product diagonal on `u_λ v_μ` with weight
/// `q^{|λ|} z_λ(q,qt) z_μ(qt,t)`.
pub fn biscalar_primed(f: &BiSymPoly, g: &BiSymPoly) -> RatFunc {
    let fx = McParams::x_factor().scalar_product();
    let fy = McParams::y_factor().scalar_product();
    let weight = |l: &PairLabel| {
        RatFunc::q()
            .pow(l.lam.size() as u32)
            .mul(&fx.norm_p(&l.lam))
            .mul(&fy.norm_p(&l.mu))
    };
    diagonal(&to_uv(f), &to_uv(g), BiBasis::PP, weight)
}

/// The hyperoctahedral Hall product, diagonal on `p_λ[X+Y] p_μ[X−Y]` with
/// weight `z_λ z_μ 2^{ℓ(λ)+ℓ(μ)}`.
pub fn b_hall_scalar(f: &BiSymPoly, g: &BiSymPoly) -> RatFunc {
    diagonal(f, g, BiBasis::PM, |l| {
        let z = l.lam.z() * l.mu.z() * (BigInt::from(1) << (l.lam.len() + l.mu.len()));
        RatFunc::from_bigint(z)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisym::pair;
    use crate::coeffs::rf;

    fn sp(l: PairLabel) -> BiSymPoly {
        BiSymPoly::basis_element(BiBasis::SP, l)
    }

    #[test]
    fn degree_one_products() {
        assert_eq!(biscalar_qt(&sp(pair(&[1], &[])), &sp(pair(&[1], &[]))), RatFunc::q());
        assert_eq!(biscalar_qt(&sp(pair(&[], &[1])), &sp(pair(&[], &[1]))), rf("(1-q)/(1-t)"));
        assert!(biscalar_qt(&sp(pair(&[1], &[])), &sp(pair(&[], &[1]))).is_zero());
    }

    #[test]
    fn primed_weights_on_uv() {
        let v1 = BiSymPoly::basis_element(BiBasis::PP, pair(&[], &[1]));
        assert_eq!(biscalar_primed(&v1, &v1), rf("(1-q*t)/(1-t)"));
        let u1 = BiSymPoly::from_terms(
            BiBasis::PP,
            [(pair(&[1], &[]), RatFunc::one()), (pair(&[], &[1]), rf("q*(1-t)/(1-q*t)"))],
        );
        assert_eq!(biscalar_primed(&u1, &u1), rf("q*(1-q)/(1-q*t)"));
    }

    #[test]
    fn b_hall_orthonormal_schurs() {
        let s = |l| BiSymPoly::basis_element(BiBasis::SS, l);
        let p1 = BiSymPoly::basis_element(BiBasis::SP, pair(&[], &[1]));
        assert_eq!(b_hall_scalar(&p1, &p1), rf("2"));
        for a in PairLabel::all(2) {
            for b in PairLabel::all(2) {
                let v = b_hall_scalar(&s(a.clone()), &s(b.clone()));
                assert_eq!(v.is_one(), a == b);
                assert!(a == b || v.is_zero());
            }
        }
    }
}
