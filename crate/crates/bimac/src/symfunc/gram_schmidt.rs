use crate::coeffs::RatFunc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GramSchmidtError {
    #[error("singular Gram matrix at label index {0}")]
    Singular(usize),
}

/// Triangular orthogonalization.
///
/// `leading[k]` is the vector of the leading basis element of label `k` in
/// ambient coordinates where the scalar product is diagonal with `weights`.
/// Labels must be listed along a linear extension of the partial order;
/// `below(k, j)` tells whether label `j` (with `j < k`) lies strictly below
/// label `k`. The result row `k` gives the coefficients of the orthogonal
/// element `P_k` on the leading elements: `P_k = b_k + Σ_{j below k} c_{kj} b_j`.
pub fn gram_schmidt(
    leading: &[Vec<RatFunc>],
    weights: &[RatFunc],
    below: impl Fn(usize, usize) -> bool,
) -> Result<Vec<Vec<RatFunc>>, GramSchmidtError> {
    let n = leading.len();
    let inner = |u: &[RatFunc], v: &[RatFunc]| -> RatFunc {
        u.iter()
            .zip(v)
            .zip(weights)
            .filter(|((a, b), _)| !a.is_zero() && !b.is_zero())
            .fold(RatFunc::zero(), |s, ((a, b), w)| s.add(&a.mul(b).mul(w)))
    };
    let mut coeffs: Vec<Vec<RatFunc>> = Vec::with_capacity(n);
    let mut vectors: Vec<Vec<RatFunc>> = Vec::with_capacity(n);
    let mut norms: Vec<RatFunc> = Vec::with_capacity(n);
    for k in 0..n {
        let mut c = vec![RatFunc::zero(); n];
        c[k] = RatFunc::one();
        let mut v = leading[k].clone();
        for j in (0..k).filter(|&j| below(k, j)) {
            let proj = inner(&leading[k], &vectors[j]);
            if proj.is_zero() {
                continue;
            }
            let f = proj.div(&norms[j]).expect("norms checked nonzero").neg();
            for (ci, cj) in c.iter_mut().zip(&coeffs[j]) {
                if !cj.is_zero() {
                    *ci = ci.add(&cj.mul(&f));
                }
            }
            for (vi, vj) in v.iter_mut().zip(&vectors[j]) {
                if !vj.is_zero() {
                    *vi = vi.add(&vj.mul(&f));
                }
            }
        }
        let norm = inner(&leading[k], &v);
        if norm.is_zero() {
            return Err(GramSchmidtError::Singular(k));
        }
        coeffs.push(c);
        vectors.push(v);
        norms.push(norm);
    }
    Ok(coeffs)
}
