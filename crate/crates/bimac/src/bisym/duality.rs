//! The involution `ω^B` and the four-coefficient Littlewood–Richardson identity.

use super::BiSymPoly;
use crate::coeffs::RatFunc;
use crate::partitions::Partition;
use crate::plethysm::linear_substitution;
use crate::symfunc::littlewood_richardson;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

fn sign(r: usize) -> RatFunc {
    if r.is_multiple_of(2) {
        RatFunc::one()
    } else {
        RatFunc::from_int(-1)
    }
}

/// `ω^B_{q,t}`: `p_r[X] ↦ (−1)^r t^r p_r[X]` and
/// `p_r[X+Y] ↦ (−1)^{r−1} (1 − q^{−r})/(1 − t^{−r}) p_r[X+Y]`,
/// for arbitrary values of the parameters.
pub fn omega_b(f: &BiSymPoly, q: &RatFunc, t: &RatFunc) -> BiSymPoly {
    let image = |r: usize| {
        let ri = r as i64;
        let a = sign(r).mul(&t.powi(ri));
        let num = RatFunc::one().sub(&q.powi(-ri));
        let den = RatFunc::one().sub(&t.powi(-ri));
        let b = sign(r + 1).mul(&num.div(&den).expect("t is not a root of unity"));
        [[a.clone(), RatFunc::zero()], [b.sub(&a), b]]
    };
    linear_substitution(f, image).to_basis(f.basis())
}

/// Inverse of [`omega_b`]: `(q/t)^n ω^B_{1/t,1/q}` on degree `n`.
pub fn omega_b_inverse(f: &BiSymPoly, q: &RatFunc, t: &RatFunc) -> BiSymPoly {
    let qi = q.inv().expect("q ≠ 0");
    let ti = t.inv().expect("t ≠ 0");
    let ratio = q.div(t).expect("t ≠ 0");
    omega_b(f, &ti, &qi).map_terms(|l, c| c.mul(&ratio.pow(l.degree() as u32)))
}

/// Cached Littlewood–Richardson products `s_a s_b`.
#[derive(Default)]
struct LrCache(HashMap<(Partition, Partition), BTreeMap<Partition, BigInt>>);

impl LrCache {
    fn product(&mut self, a: &Partition, b: &Partition) -> &BTreeMap<Partition, BigInt> {
        self.0
            .entry((a.clone(), b.clone()))
            .or_insert_with(|| littlewood_richardson(a, b))
    }

    fn coeff(&mut self, target: &Partition, a: &Partition, b: &Partition) -> BigInt {
        if a.size() + b.size() != target.size() {
            return BigInt::zero();
        }
        self.product(a, b).get(target).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// `Σ_{γ,η,σ,τ} (−1)^{|τ|} c^γ_{τ'ν} c^λ_{γη} c^σ_{ημ} c^ω_{στ}`.
pub fn lr4_identity(lam: &Partition, mu: &Partition, nu: &Partition, om: &Partition) -> BigInt {
    let mut lr = LrCache::default();
    let mut total = BigInt::zero();
    for tsize in 0..=om.size() {
        for tau in Partition::all(tsize) {
            let sgn = if tsize % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let gammas: Vec<(Partition, BigInt)> = lr
                .product(&tau.conjugate(), nu)
                .iter()
                .filter(|(g, _)| g.size() <= lam.size())
                .map(|(g, c)| (g.clone(), c.clone()))
                .collect();
            for (gamma, c1) in gammas {
                for eta in Partition::all(lam.size() - gamma.size()) {
                    let c2 = lr.coeff(lam, &gamma, &eta);
                    if c2.is_zero() {
                        continue;
                    }
                    let sigmas: Vec<(Partition, BigInt)> = lr
                        .product(&eta, mu)
                        .iter()
                        .map(|(s, c)| (s.clone(), c.clone()))
                        .collect();
                    for (sigma, c3) in sigmas {
                        let c4 = lr.coeff(om, &sigma, &tau);
                        if !c4.is_zero() {
                            total += &sgn * &c1 * &c2 * &c3 * c4;
                        }
                    }
                }
            }
        }
    }
    total
}
