//! Evaluation of bisymmetric functions at the principal point
//! `x_i = t^{i−1}/q^{m−i}`, `y_j = t^{m+j−1}`.

use super::double::double_p;
use super::{BiBasis, BiSymPoly};
use crate::coeffs::{Mono, Poly, RatFunc};
use crate::macdonald::{evaluation_w, McParams};
use crate::partitions::{PairLabel, Partition};
use crate::Error;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;

/// Values of the `N` variables as Laurent monomials `q^a t^b`, split into
/// the first `m` (the `x` alphabet) and the remaining `N − m` (the `y` alphabet).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationPoint {
    pub xs: Vec<(i64, i64)>,
    pub ys: Vec<(i64, i64)>,
}

impl EvaluationPoint {
    /// `u_i = t^{i−1} / q^{max(m−i, 0)}` for `i = 1..N`.
    pub fn principal(n_vars: usize, m: usize) -> Result<Self, Error> {
        if m > n_vars {
            return Err(Error::InsufficientVariables(format!("m = {m} exceeds N = {n_vars}")));
        }
        let value = |i: usize| (-(m.saturating_sub(i) as i64), i as i64 - 1);
        Ok(EvaluationPoint {
            xs: (1..=m).map(value).collect(),
            ys: (m + 1..=n_vars).map(value).collect(),
        })
    }
}

type Laurent = HashMap<(i64, i64), BigInt>;

/// `m_λ` evaluated at the given monomials, as a Laurent polynomial.
fn monomial_value(lam: &Partition, vars: &[(i64, i64)]) -> Laurent {
    let mut out = Laurent::new();
    if lam.len() > vars.len() {
        return out;
    }
    let mut exps: Vec<usize> = lam.parts().to_vec();
    exps.resize(vars.len(), 0);
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for e in exps {
        match counts.iter_mut().find(|(v, _)| *v == e) {
            Some(c) => c.1 += 1,
            None => counts.push((e, 1)),
        }
    }
    fn rec(pos: usize, vars: &[(i64, i64)], counts: &mut [(usize, usize)], acc: (i64, i64), out: &mut Laurent) {
        if pos == vars.len() {
            *out.entry(acc).or_insert_with(BigInt::zero) += 1;
            return;
        }
        for k in 0..counts.len() {
            if counts[k].1 == 0 {
                continue;
            }
            counts[k].1 -= 1;
            let e = counts[k].0 as i64;
            rec(pos + 1, vars, counts, (acc.0 + e * vars[pos].0, acc.1 + e * vars[pos].1), out);
            counts[k].1 += 1;
        }
    }
    rec(0, vars, &mut counts, (0, 0), &mut out);
    out
}

fn laurent_to_ratfunc(l: &Laurent) -> RatFunc {
    let l: Vec<(&(i64, i64), &BigInt)> = l.iter().filter(|(_, c)| !c.is_zero()).collect();
    if l.is_empty() {
        return RatFunc::zero();
    }
    let qmin = l.iter().map(|((a, _), _)| *a).min().unwrap_or(0);
    let tmin = l.iter().map(|((_, b), _)| *b).min().unwrap_or(0);
    let num = Poly::from_terms(l.iter().map(|((a, b), c)| {
        (Mono([(a - qmin) as u32, (b - tmin) as u32, 0, 0]), (*c).clone())
    }));
    RatFunc::from_poly(num).mul(&RatFunc::qt_power(qmin, tmin))
}

/// Evaluates `f` at explicit variable values by expanding in `m_λ[X] m_μ[Y]`.
pub fn evaluate_monomials(f: &BiSymPoly, point: &EvaluationPoint) -> RatFunc {
    let mm = f.to_basis(BiBasis::MM);
    let mut xcache: HashMap<Partition, RatFunc> = HashMap::new();
    let mut ycache: HashMap<Partition, RatFunc> = HashMap::new();
    mm.terms().fold(RatFunc::zero(), |acc, (l, c)| {
        let xv = xcache
            .entry(l.lam.clone())
            .or_insert_with(|| laurent_to_ratfunc(&monomial_value(&l.lam, &point.xs)))
            .clone();
        if xv.is_zero() {
            return acc;
        }
        let yv = ycache
            .entry(l.mu.clone())
            .or_insert_with(|| laurent_to_ratfunc(&monomial_value(&l.mu, &point.ys)))
            .clone();
        acc.add(&c.mul(&xv).mul(&yv))
    })
}

/// `P_{λ,μ}` evaluated by explicit substitution into `N` variables, `m` of them in `x`.
pub fn evaluate_explicit(l: &PairLabel, n_vars: usize, m: usize) -> Result<RatFunc, Error> {
    let point = EvaluationPoint::principal(n_vars, m)?;
    Ok(evaluate_monomials(&double_p(l), &point))
}

/// `t^{m|μ|} q^{−(m−1)|λ|} w_λ(q^m t^N; q, qt) w_μ(t^{N−m}; qt, t)`.
pub fn evaluate_closed(l: &PairLabel, n_vars: usize, m: usize) -> Result<RatFunc, Error> {
    if m > n_vars {
        return Err(Error::InsufficientVariables(format!("m = {m} exceeds N = {n_vars}")));
    }
    let (mi, ni) = (m as i64, n_vars as i64);
    let prefactor = RatFunc::qt_power(-(mi - 1) * l.lam.size() as i64, mi * l.mu.size() as i64);
    let wx = evaluation_w(&l.lam, &RatFunc::qt_power(mi, ni), &McParams::x_factor())?;
    let wy = evaluation_w(&l.mu, &RatFunc::qt_power(0, ni - mi), &McParams::y_factor())?;
    Ok(prefactor.mul(&wx).mul(&wy))
}
