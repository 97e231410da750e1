//! Classical Macdonald polynomials in one alphabet, their normalizations,
//! Kostka coefficients and evaluations, plus Jack polynomials.
//!
//! Every family is produced by triangular orthogonalization of the monomial
//! basis along dominance order, under a power-sum-diagonal scalar product.
//! Parameters are arbitrary rational functions, so `(q, qt)` and `(qt, t)`
//! are handled exactly like `(q, t)`.

use crate::coeffs::{CoeffError, RatFunc};
use crate::partitions::{dominance_leq, Partition};
use crate::plethysm::{pleth_evaluate, pleth_scale};
use crate::symfunc::{gram_schmidt, tables::tables, Basis, ScalarProduct, SymPoly};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// A pair of Macdonald parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct McParams {
    pub q: RatFunc,
    pub t: RatFunc,
}

impl McParams {
    pub fn new(q: RatFunc, t: RatFunc) -> Self {
        McParams { q, t }
    }

    /// `(q, t)`.
    pub fn standard() -> Self {
        Self::new(RatFunc::q(), RatFunc::t())
    }

    /// `(q, qt)`, the parameters of the `X`-factor of a double Macdonald polynomial.
    pub fn x_factor() -> Self {
        Self::new(RatFunc::q(), RatFunc::q().mul(&RatFunc::t()))
    }

    /// `(qt, t)`, the parameters of the `Y`-factor.
    pub fn y_factor() -> Self {
        Self::new(RatFunc::q().mul(&RatFunc::t()), RatFunc::t())
    }

    /// `(0, t)`: Hall–Littlewood.
    pub fn hall_littlewood(t: RatFunc) -> Self {
        Self::new(RatFunc::zero(), t)
    }

    pub fn scalar_product(&self) -> ScalarProduct {
        ScalarProduct::with_params(self.q.clone(), self.t.clone())
    }
}

type Family = Arc<BTreeMap<Partition, SymPoly>>;

static CACHE: OnceLock<Mutex<HashMap<(usize, ScalarProduct), Family>>> = OnceLock::new();

/// The monic orthogonal family of degree `n` for a power-sum-diagonal scalar
/// product, unitriangular in the monomial basis along dominance order.
/// Results are cached per `(n, product)`.
pub fn orthogonal_family(n: usize, sp: &ScalarProduct) -> Family {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (n, sp.clone());
    if let Some(f) = cache.lock().expect("macdonald cache").get(&key) {
        return Arc::clone(f);
    }
    let built = Arc::new(build_family(n, sp));
    let mut guard = cache.lock().expect("macdonald cache");
    Arc::clone(guard.entry(key).or_insert(built))
}

fn build_family(n: usize, sp: &ScalarProduct) -> BTreeMap<Partition, SymPoly> {
    let tb = tables(n);
    // Increasing lexicographic order is a linear extension of dominance.
    let order: Vec<usize> = (0..tb.labels.len()).rev().collect();
    let m_to_p = tb.to_p(Basis::M);
    let leading: Vec<Vec<RatFunc>> = order
        .iter()
        .map(|&i| m_to_p[i].iter().map(RatFunc::from_rational).collect())
        .collect();
    let weights = sp.weights(n);
    let labels: Vec<&Partition> = order.iter().map(|&i| &tb.labels[i]).collect();
    let rows = gram_schmidt(&leading, &weights, |k, j| {
        dominance_leq(labels[j], labels[k], false) && labels[j] != labels[k]
    })
    .expect("scalar product is nondegenerate on the monomial flag");
    labels
        .iter()
        .zip(rows)
        .map(|(lam, row)| {
            let poly = SymPoly::from_terms(Basis::M, labels.iter().map(|l| (*l).clone()).zip(row));
            ((*lam).clone(), poly)
        })
        .collect()
}

/// `P_λ(q, t)` in the monomial basis.
pub fn macdonald_p(lam: &Partition, params: &McParams) -> SymPoly {
    orthogonal_family(lam.size(), &params.scalar_product())[lam].clone()
}

/// `b_λ(q,t) = Π (1 − q^{a} t^{l+1}) / (1 − q^{a+1} t^{l})`, the inverse norm of `P_λ`.
pub fn b_norm(lam: &Partition, params: &McParams) -> RatFunc {
    lam.cells().fold(RatFunc::one(), |acc, (i, j)| {
        let (a, l) = (lam.arm(i, j) as u32, lam.leg(i, j) as u32);
        let num = RatFunc::one().sub(&params.q.pow(a).mul(&params.t.pow(l + 1)));
        let den = RatFunc::one().sub(&params.q.pow(a + 1).mul(&params.t.pow(l)));
        acc.mul(&num.div(&den).expect("generic parameters"))
    })
}

/// `Q_λ = b_λ P_λ`.
pub fn macdonald_q(lam: &Partition, params: &McParams) -> SymPoly {
    macdonald_p(lam, params).scale(&b_norm(lam, params))
}

/// `c_λ(q,t) = Π (1 − q^{a} t^{l+1})`.
pub fn c_hook(lam: &Partition, params: &McParams) -> RatFunc {
    lam.cells().fold(RatFunc::one(), |acc, (i, j)| {
        let (a, l) = (lam.arm(i, j) as u32, lam.leg(i, j) as u32);
        acc.mul(&RatFunc::one().sub(&params.q.pow(a).mul(&params.t.pow(l + 1))))
    })
}

/// Integral form `J_λ = c_λ P_λ`.
pub fn macdonald_j(lam: &Partition, params: &McParams) -> SymPoly {
    macdonald_p(lam, params).scale(&c_hook(lam, params))
}

/// Modified form `H_λ = J_λ[X/(1−t)]`, in the Schur basis.
pub fn macdonald_h(lam: &Partition, params: &McParams) -> SymPoly {
    let inv = RatFunc::one().sub(&params.t).inv().expect("t ≠ 1");
    pleth_scale(&macdonald_j(lam, params), &inv).to_basis(Basis::S)
}

/// `K_{μλ}(q,t)`: the coefficient of `s_μ` in `H_λ`.
pub fn kostka_qt(mu: &Partition, lam: &Partition, params: &McParams) -> Result<RatFunc, crate::Error> {
    if mu.size() != lam.size() {
        return Err(crate::Error::DegreeMismatch(mu.to_string(), lam.to_string()));
    }
    Ok(macdonald_h(lam, params).coeff(mu))
}

/// `w_λ(u;q,t) = Π_{s∈λ} (t^{l'} − q^{a'} u) / (1 − q^{a} t^{l+1})`.
pub fn evaluation_w(lam: &Partition, u: &RatFunc, params: &McParams) -> Result<RatFunc, CoeffError> {
    lam.cells().try_fold(RatFunc::one(), |acc, (i, j)| {
        let (a, l) = (lam.arm(i, j) as u32, lam.leg(i, j) as u32);
        let (ca, cl) = ((j - 1) as u32, (i - 1) as u32);
        let num = params.t.pow(cl).sub(&params.q.pow(ca).mul(u));
        let den = RatFunc::one().sub(&params.q.pow(a).mul(&params.t.pow(l + 1)));
        Ok(acc.mul(&num.div(&den)?))
    })
}

/// `P_λ[(1−u)/(1−t)]` computed from the polynomial itself.
pub fn evaluate_principal(lam: &Partition, u: &RatFunc, params: &McParams) -> Result<RatFunc, CoeffError> {
    let arg = RatFunc::one().sub(u).div(&RatFunc::one().sub(&params.t))?;
    Ok(pleth_evaluate(&macdonald_p(lam, params), &arg))
}

/// Jack polynomial `P_λ^{(α)}` for any value of `α` (usually the parameter `a`).
pub fn jack_p(lam: &Partition, alpha: &RatFunc) -> SymPoly {
    let sp = ScalarProduct::Jack { alpha: alpha.clone() };
    orthogonal_family(lam.size(), &sp)[lam].clone()
}

/// Hall–Littlewood `P_λ(t)`, the `q = 0` Macdonald polynomial.
pub fn hall_littlewood_p(lam: &Partition, t: &RatFunc) -> SymPoly {
    macdonald_p(lam, &McParams::hall_littlewood(t.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rf;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn two_row_macdonald() {
        let m = macdonald_p(&p(&[2]), &McParams::standard());
        let expected = SymPoly::m(&[2]).add(&SymPoly::m(&[1, 1]).scale(&rf("(1-t)*(1+q)/(1-q*t)")));
        assert_eq!(m, expected);
        assert_eq!(macdonald_p(&p(&[1, 1]), &McParams::standard()), SymPoly::m(&[1, 1]));
    }

    #[test]
    fn norm_matches_scalar_product() {
        let params = McParams::standard();
        let sp = params.scalar_product();
        for n in 0..=3 {
            for lam in Partition::all(n) {
                let pl = macdonald_p(&lam, &params);
                assert!(sp.inner(&pl, &pl).mul(&b_norm(&lam, &params)).is_one(), "{lam}");
            }
        }
    }

    #[test]
    fn modified_two_row() {
        let h = macdonald_h(&p(&[2]), &McParams::standard());
        assert_eq!(h, SymPoly::s(&[2]).add(&SymPoly::s(&[1, 1]).scale(&RatFunc::q())));
    }

    #[test]
    fn jack_two_row() {
        let j = jack_p(&p(&[2]), &RatFunc::alpha());
        let expected = SymPoly::m(&[2]).add(&SymPoly::m(&[1, 1]).scale(&rf("2/(1+a)")));
        assert_eq!(j, expected);
    }

    #[test]
    fn principal_evaluation() {
        let params = McParams::standard();
        for n in 0..=3 {
            for lam in Partition::all(n) {
                assert_eq!(
                    evaluate_principal(&lam, &RatFunc::u(), &params).unwrap(),
                    evaluation_w(&lam, &RatFunc::u(), &params).unwrap(),
                    "{lam}"
                );
            }
        }
    }
}
