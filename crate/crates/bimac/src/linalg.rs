//! Dense exact linear algebra over ℚ and over the rational-function field.

use crate::coeffs::RatFunc;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Inverse of a square rational matrix, `None` when singular.
pub fn invert_rational(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let x = &a[col][j] * &f;
                a[r][j] -= x;
                let y = &inv[col][j] * &f;
                inv[r][j] -= y;
            }
        }
    }
    Some(inv)
}

/// Product of rational matrices.
pub fn mul_rational(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !row[k].is_zero() && !b[k][j].is_zero())
                        .map(|k| &row[k] * &b[k][j])
                        .fold(BigRational::zero(), |s, x| s + x)
                })
                .collect()
        })
        .collect()
}

/// A weight used to choose pivots: simpler entries first.
fn complexity(f: &RatFunc) -> usize {
    f.numer().len() + f.denom().len()
}

/// Solves `A X = B` by Gauss–Jordan elimination; `None` when `A` is singular.
pub fn solve_ratfunc(mut a: Vec<Vec<RatFunc>>, mut b: Vec<Vec<RatFunc>>) -> Option<Vec<Vec<RatFunc>>> {
    let n = a.len();
    for col in 0..n {
        let piv = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| complexity(&a[r][col]))?;
        a.swap(col, piv);
        b.swap(col, piv);
        let p = a[col][col].inv().ok()?;
        for j in col..n {
            a[col][j] = a[col][j].mul(&p);
        }
        for x in b[col].iter_mut() {
            *x = x.mul(&p);
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in col..n {
                if !a[col][j].is_zero() {
                    a[r][j] = a[r][j].sub(&a[col][j].mul(&f));
                }
            }
            let (top, bottom) = if r < col {
                let (lo, hi) = b.split_at_mut(col);
                (&hi[0], &mut lo[r])
            } else {
                let (lo, hi) = b.split_at_mut(r);
                (&lo[col], &mut hi[0])
            };
            for (x, y) in bottom.iter_mut().zip(top.iter()) {
                if !y.is_zero() {
                    *x = x.sub(&y.mul(&f));
                }
            }
        }
    }
    Some(b)
}
