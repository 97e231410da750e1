//! Plethystic substitution into affine two-alphabet expressions `aX + bY + c`.

use crate::bisym::{BiBasis, BiSymPoly};
use crate::coeffs::RatFunc;
use crate::partitions::{PairLabel, Partition};
use crate::symfunc::{Basis, SymPoly};
use std::collections::HashMap;

/// The expression `x·X + y·Y + constant`, with coefficients in the parameter
/// field. The power sum `p_r` sends each coefficient `c(q,t)` to `c(q^r,t^r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphabetExpr {
    pub x: RatFunc,
    pub y: RatFunc,
    pub constant: RatFunc,
}

impl AlphabetExpr {
    pub fn new(x: RatFunc, y: RatFunc, constant: RatFunc) -> Self {
        AlphabetExpr { x, y, constant }
    }

    /// `X`.
    pub fn x() -> Self {
        Self::linear(RatFunc::one(), RatFunc::zero())
    }

    /// `Y`.
    pub fn y() -> Self {
        Self::linear(RatFunc::zero(), RatFunc::one())
    }

    /// `aX + bY`.
    pub fn linear(a: RatFunc, b: RatFunc) -> Self {
        Self::new(a, b, RatFunc::zero())
    }

    /// A constant alphabet.
    pub fn scalar(c: RatFunc) -> Self {
        Self::new(RatFunc::zero(), RatFunc::zero(), c)
    }

    /// Coefficients of `p_r[self]` on `p_r[X]`, `p_r[Y]` and `1`.
    pub fn powersum_coeffs(&self, r: u32) -> (RatFunc, RatFunc, RatFunc) {
        (
            self.x.pleth_power(r),
            self.y.pleth_power(r),
            self.constant.pleth_power(r),
        )
    }
}

type PpMap = HashMap<PairLabel, RatFunc>;

fn accumulate(map: &mut PpMap, key: PairLabel, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(e) => *e = e.add(&c),
        None => {
            map.insert(key, c);
        }
    }
}

fn into_poly(map: PpMap) -> BiSymPoly {
    BiSymPoly::from_terms(BiBasis::PP, map)
}

/// Multiplies a sparse `p[X]⊗p[Y]` element by `a p_r[X] + b p_r[Y] + c`.
fn times_linear(acc: &PpMap, r: usize, a: &RatFunc, b: &RatFunc, c: &RatFunc) -> PpMap {
    let single = Partition::of(&[r]);
    let mut next = PpMap::with_capacity(acc.len() * 3);
    for (l, k) in acc {
        if !a.is_zero() {
            accumulate(&mut next, PairLabel::new(l.lam.union(&single), l.mu.clone()), k.mul(a));
        }
        if !b.is_zero() {
            accumulate(&mut next, PairLabel::new(l.lam.clone(), l.mu.union(&single)), k.mul(b));
        }
        if !c.is_zero() {
            accumulate(&mut next, l.clone(), k.mul(c));
        }
    }
    next.retain(|_, v| !v.is_zero());
    next
}

fn unit() -> PpMap {
    PpMap::from([(PairLabel::default(), RatFunc::one())])
}

/// `p_r[A]` in the `p[X]⊗p[Y]` basis.
pub fn pleth_powersum(r: u32, a: &AlphabetExpr) -> BiSymPoly {
    assert!(r >= 1, "power sums start at p_1");
    let (x, y, c) = a.powersum_coeffs(r);
    into_poly(times_linear(&unit(), r as usize, &x, &y, &c))
}

/// `f[A]` in the `p[X]⊗p[Y]` basis.
pub fn pleth_symfunc(f: &SymPoly, a: &AlphabetExpr) -> BiSymPoly {
    let fp = f.to_basis(Basis::P);
    let mut images: HashMap<usize, (RatFunc, RatFunc, RatFunc)> = HashMap::new();
    let mut total = PpMap::new();
    for (rho, c) in fp.terms() {
        let mut acc = unit();
        for &r in rho.parts() {
            let (x, y, k) = images
                .entry(r)
                .or_insert_with(|| a.powersum_coeffs(r as u32))
                .clone();
            acc = times_linear(&acc, r, &x, &y, &k);
        }
        for (l, v) in acc {
            accumulate(&mut total, l, v.mul(c));
        }
    }
    into_poly(total)
}

/// Applies the algebra map sending `p_r[X] ↦ a_r p_r[X] + b_r p_r[Y]` and
/// `p_r[Y] ↦ c_r p_r[X] + d_r p_r[Y]`, where `images(r) = [[a_r, b_r], [c_r, d_r]]`.
/// The result is in the `p[X]⊗p[Y]` basis.
pub fn linear_substitution(f: &BiSymPoly, images: impl Fn(usize) -> [[RatFunc; 2]; 2]) -> BiSymPoly {
    let fp = f.to_basis(BiBasis::PP);
    let mut cache: HashMap<usize, [[RatFunc; 2]; 2]> = HashMap::new();
    let zero = RatFunc::zero();
    let mut total = PpMap::new();
    for (l, c) in fp.terms() {
        let mut acc = unit();
        for (parts, row) in [(l.lam.parts(), 0usize), (l.mu.parts(), 1usize)] {
            for &r in parts {
                let m = cache.entry(r).or_insert_with(|| images(r));
                let (a, b) = (m[row][0].clone(), m[row][1].clone());
                acc = times_linear(&acc, r, &a, &b, &zero);
            }
        }
        for (k, v) in acc {
            accumulate(&mut total, k, v.mul(c));
        }
    }
    into_poly(total)
}

/// One-alphabet plethysm by a scalar multiple: `f[c·X]`.
pub fn pleth_scale(f: &SymPoly, c: &RatFunc) -> SymPoly {
    let fp = f.to_basis(Basis::P);
    let out = fp.terms().map(|(rho, k)| {
        let factor = rho
            .parts()
            .iter()
            .fold(RatFunc::one(), |acc, &r| acc.mul(&c.pleth_power(r as u32)));
        (rho.clone(), k.mul(&factor))
    });
    SymPoly::from_terms(Basis::P, out).to_basis(f.basis())
}

/// Evaluation `f[c]` at a constant alphabet.
pub fn pleth_evaluate(f: &SymPoly, c: &RatFunc) -> RatFunc {
    let fp = f.to_basis(Basis::P);
    let mut powers: HashMap<usize, RatFunc> = HashMap::new();
    fp.terms().fold(RatFunc::zero(), |acc, (rho, k)| {
        let v = rho.parts().iter().fold(k.clone(), |v, &r| {
            v.mul(powers.entry(r).or_insert_with(|| c.pleth_power(r as u32)))
        });
        acc.add(&v)
    })
}

/// The homomorphism fixing `X` and sending `X+Y ↦ (X+Y)/(1−t)`; in the
/// `s[X]⊗p[X+Y]` basis it divides the coefficient of `(λ, μ)` by `Π (1 − t^{μ_i})`.
pub fn phi_modify(f: &BiSymPoly) -> BiSymPoly {
    let sp = f.to_basis(BiBasis::SP);
    sp.map_terms(|l, c| c.mul(&phi_factor(&l.mu).inv().expect("nonzero")))
        .to_basis(f.basis())
}

/// Inverse of [`phi_modify`].
pub fn phi_modify_inverse(f: &BiSymPoly) -> BiSymPoly {
    let sp = f.to_basis(BiBasis::SP);
    sp.map_terms(|l, c| c.mul(&phi_factor(&l.mu))).to_basis(f.basis())
}

fn phi_factor(mu: &Partition) -> RatFunc {
    let t = RatFunc::t();
    mu.parts()
        .iter()
        .fold(RatFunc::one(), |acc, &r| acc.mul(&RatFunc::one().sub(&t.pow(r as u32))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisym::pair;
    use crate::coeffs::rf;

    #[test]
    fn powersum_of_shifted_alphabet() {
        let a = AlphabetExpr::linear(RatFunc::one(), rf("q*(1-t)/(1-q*t)"));
        let p2 = pleth_powersum(2, &a);
        let expected = BiSymPoly::from_terms(
            BiBasis::PP,
            [
                (pair(&[2], &[]), RatFunc::one()),
                (pair(&[], &[2]), rf("q^2*(1-t^2)/(1-q^2*t^2)")),
            ],
        );
        assert_eq!(p2, expected);
    }

    #[test]
    fn difference_recovers_y() {
        // −X + (X+Y) = Y.
        let a = AlphabetExpr::linear(RatFunc::zero(), RatFunc::one());
        for r in 1..4 {
            assert_eq!(
                pleth_powersum(r, &a),
                BiSymPoly::basis_element(BiBasis::PP, PairLabel::new(Partition::empty(), Partition::of(&[r as usize])))
            );
        }
    }

    #[test]
    fn schur_two_on_x_plus_qy() {
        let a = AlphabetExpr::linear(RatFunc::one(), RatFunc::q());
        let f = pleth_symfunc(&SymPoly::s(&[2]), &a).to_basis(BiBasis::SS);
        assert_eq!(f.coeff(&pair(&[1], &[1])), RatFunc::q());
        assert_eq!(f.coeff(&pair(&[2], &[])), RatFunc::one());
        assert_eq!(f.coeff(&pair(&[], &[2])), rf("q^2"));
    }

    #[test]
    fn evaluation_of_first_power_sum() {
        let u = rf("(1-u)/(1-t)");
        assert_eq!(pleth_evaluate(&SymPoly::m(&[1]), &u), u);
    }

    #[test]
    fn phi_on_generators() {
        let p1 = BiSymPoly::basis_element(BiBasis::SP, pair(&[], &[1]));
        assert_eq!(phi_modify(&p1), p1.scale(&rf("1/(1-t)")));
        let s1 = BiSymPoly::basis_element(BiBasis::SP, pair(&[1], &[]));
        assert_eq!(phi_modify(&s1), s1);
        let f = BiSymPoly::basis_element(BiBasis::PP, pair(&[2], &[1]));
        assert_eq!(phi_modify_inverse(&phi_modify(&f)), f);
    }

    #[test]
    fn scale_plethysm() {
        let h = pleth_scale(&SymPoly::p(&[2, 1]), &rf("1/(1-t)"));
        assert_eq!(h, SymPoly::p(&[2, 1]).scale(&rf("1/((1-t)*(1-t^2))")));
    }
}
