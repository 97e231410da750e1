//! Principal evaluation of superpolynomials.

use super::{h_down, super_p};
use crate::bisym::{evaluate_monomials, EvaluationPoint};
use crate::coeffs::RatFunc;
use crate::partitions::SuperPartition;
use crate::Error;

fn check_vars(l: &SuperPartition, n_vars: usize) -> Result<(), Error> {
    if n_vars < l.circ().len() {
        return Err(Error::InsufficientVariables(format!(
            "N = {n_vars} below ℓ(Λ⊛) = {} for {l}",
            l.circ().len()
        )));
    }
    Ok(())
}

/// `E_{N,m}[P_Λ]` by substituting `x_i = t^{i−1}/q^{m−i}`, `y_j = t^{m+j−1}`
/// into the bisymmetric image.
pub fn super_evaluation_explicit(l: &SuperPartition, n_vars: usize) -> Result<RatFunc, Error> {
    check_vars(l, n_vars)?;
    let point = EvaluationPoint::principal(n_vars, l.m())?;
    Ok(evaluate_monomials(&super_p(l)?, &point))
}

/// The product formula
/// `t^{n(SΛ)+d^F} q^{−(m−1)|Λ^a/δ^m| + n(Λ^a/δ^m)} / h↓_Λ · Π_{s∈SΛ} (1 − q^{a'(s)} t^{N−l'(s)})`
/// with `SΛ = Λ⊛/δ^{m+1}` and co-arm, co-leg taken in `Λ⊛`.
pub fn super_evaluation_closed(l: &SuperPartition, n_vars: usize) -> Result<RatFunc, Error> {
    check_vars(l, n_vars)?;
    let m = l.m() as i64;
    let stats = l.stats();
    let anti_excess = l.anti().iter().sum::<usize>() as i64 - m * (m - 1) / 2;
    let n_anti: i64 = l.anti().iter().enumerate().map(|(i, &a)| (i * a) as i64).sum();
    let n_delta: i64 = (0..m).map(|i| i * (m - 1 - i)).sum();
    let q_exp = -(m - 1) * anti_excess + (n_anti - n_delta);
    let t_exp = (stats.n_skew + stats.d_f) as i64;
    let product = l.skew_cells().iter().fold(RatFunc::one(), |acc, &(i, j)| {
        let term = RatFunc::qt_power(j as i64 - 1, n_vars as i64 - (i as i64 - 1));
        acc.mul(&RatFunc::one().sub(&term))
    });
    Ok(RatFunc::qt_power(q_exp, t_exp)
        .mul(&product)
        .div(&h_down(l))
        .expect("h↓ is nonzero"))
}
