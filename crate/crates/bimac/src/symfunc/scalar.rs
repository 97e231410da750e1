use super::{Basis, SymPoly};
use crate::coeffs::RatFunc;
use crate::partitions::Partition;

/// A scalar product for which power sums are orthogonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ScalarProduct {
    /// `⟨p_λ, p_μ⟩ = δ z_λ`.
    Hall,
    /// `⟨p_λ, p_μ⟩ = δ z_λ Π (1 − q^{λ_i}) / (1 − t^{λ_i})` where `q` and `t`
    /// may be any expressions; powers act plethystically.
    Qt { q: RatFunc, t: RatFunc },
    /// `⟨p_λ, p_μ⟩ = δ α^{ℓ(λ)} z_λ`.
    Jack { alpha: RatFunc },
}

impl ScalarProduct {
    pub fn qt() -> Self {
        ScalarProduct::Qt {
            q: RatFunc::q(),
            t: RatFunc::t(),
        }
    }

    pub fn with_params(q: RatFunc, t: RatFunc) -> Self {
        ScalarProduct::Qt { q, t }
    }

    pub fn jack() -> Self {
        ScalarProduct::Jack {
            alpha: RatFunc::alpha(),
        }
    }

    /// Factor contributed by one part of size `r`.
    pub fn part_factor(&self, r: usize) -> RatFunc {
        match self {
            ScalarProduct::Hall => RatFunc::one(),
            ScalarProduct::Qt { q, t } => {
                let r = r as u32;
                let num = RatFunc::one().sub(&q.pleth_power(r));
                let den = RatFunc::one().sub(&t.pleth_power(r));
                num.div(&den).expect("t-like parameter must not be a root of unity")
            }
            ScalarProduct::Jack { alpha } => alpha.clone(),
        }
    }

    /// `⟨p_λ, p_λ⟩`.
    pub fn norm_p(&self, lam: &Partition) -> RatFunc {
        lam.parts()
            .iter()
            .fold(RatFunc::from_bigint(lam.z()), |acc, &r| acc.mul(&self.part_factor(r)))
    }

    /// Diagonal weights for degree `n` in the order of [`Partition::all`].
    pub fn weights(&self, n: usize) -> Vec<RatFunc> {
        Partition::all(n).iter().map(|l| self.norm_p(l)).collect()
    }

    /// `⟨f, g⟩`.
    pub fn inner(&self, f: &SymPoly, g: &SymPoly) -> RatFunc {
        let f = f.to_basis(Basis::P);
        let g = g.to_basis(Basis::P);
        f.terms()
            .filter_map(|(l, c)| {
                let d = g.coeff(l);
                (!d.is_zero()).then(|| c.mul(&d).mul(&self.norm_p(l)))
            })
            .fold(RatFunc::zero(), |a, x| a.add(&x))
    }
}
