//! Per-degree transition matrices between the classical bases and power sums.

use super::Basis;
use crate::linalg::invert_rational;
use crate::partitions::Partition;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// Transition data for one degree. Row `i` of `to_p[b]` expresses the basis
/// element `b_{labels[i]}` in power sums; `from_p[b]` is its inverse.
pub struct DegreeTables {
    pub labels: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    to_p: [Vec<Vec<BigRational>>; 5],
    from_p: [Vec<Vec<BigRational>>; 5],
}

impl DegreeTables {
    pub fn to_p(&self, b: Basis) -> &[Vec<BigRational>] {
        &self.to_p[b as usize]
    }

    pub fn from_p(&self, b: Basis) -> &[Vec<BigRational>] {
        &self.from_p[b as usize]
    }

    fn build(n: usize) -> Self {
        let labels = Partition::all(n);
        let index: HashMap<Partition, usize> =
            labels.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let k = labels.len();
        let identity: Vec<Vec<BigRational>> = (0..k)
            .map(|i| (0..k).map(|j| if i == j { one() } else { zero() }).collect())
            .collect();

        let p_to_m: Vec<Vec<BigRational>> = labels
            .iter()
            .map(|l| labels.iter().map(|m| BigRational::from(BigInt::from(monomial_count(l, m)))).collect())
            .collect();
        let m_to_p = invert_rational(&p_to_m).expect("power sums form a basis");

        let s_to_p: Vec<Vec<BigRational>> = labels
            .iter()
            .map(|l| {
                labels
                    .iter()
                    .map(|r| BigRational::new(character(l, r), r.z()))
                    .collect()
            })
            .collect();
        let p_to_s: Vec<Vec<BigRational>> = labels
            .iter()
            .map(|r| labels.iter().map(|l| BigRational::from(character(l, r))).collect())
            .collect();

        let h_to_p = product_table(&labels, &index, false);
        let e_to_p = product_table(&labels, &index, true);
        let p_from_h = invert_rational(&h_to_p).expect("h is a basis");
        let p_from_e = invert_rational(&e_to_p).expect("e is a basis");

        DegreeTables {
            labels,
            index,
            to_p: [m_to_p, e_to_p, h_to_p, identity.clone(), s_to_p],
            from_p: [p_to_m, p_from_e, p_from_h, identity, p_to_s],
        }
    }
}

fn one() -> BigRational {
    BigRational::one()
}

fn zero() -> BigRational {
    BigRational::zero()
}

/// Number of ways to distribute the parts of `lam` into the blocks of `mu` so
/// that block `j` sums to `mu_j`: the coefficient of `m_mu` in `p_lam`.
fn monomial_count(lam: &Partition, mu: &Partition) -> u64 {
    fn rec(parts: &[usize], caps: &mut [usize]) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return caps.iter().all(|&c| c == 0) as u64;
        };
        let mut total = 0;
        for j in 0..caps.len() {
            if caps[j] >= first {
                caps[j] -= first;
                total += rec(rest, caps);
                caps[j] += first;
            }
        }
        total
    }
    if lam.size() != mu.size() {
        return 0;
    }
    rec(lam.parts(), &mut mu.parts().to_vec())
}

/// Irreducible character `χ^lam(rho)` by the Murnaghan–Nakayama rule on
/// beta-sets.
pub fn character(lam: &Partition, rho: &Partition) -> BigInt {
    fn rec(beads: &mut Vec<usize>, strips: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
        let Some((&r, rest)) = strips.split_first() else {
            return 1;
        };
        let key = (beads.clone(), strips.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for i in 0..beads.len() {
            let b = beads[i];
            if b < r || beads.contains(&(b - r)) {
                continue;
            }
            let between = beads.iter().filter(|&&x| x > b - r && x < b).count();
            beads[i] = b - r;
            let v = rec(beads, rest, memo);
            beads[i] = b;
            total += if between % 2 == 0 { v } else { -v };
        }
        memo.insert(key, total);
        total
    }
    if lam.size() != rho.size() {
        return BigInt::zero();
    }
    let l = lam.len();
    let mut beads: Vec<usize> = (1..=l).map(|i| lam.part(i) + l - i).collect();
    let mut memo = HashMap::new();
    BigInt::from(rec(&mut beads, rho.parts(), &mut memo))
}

/// Rows for `h_lam` (or `e_lam`) in power sums via products of the
/// one-part expansions `Σ ±p_ρ / z_ρ`.
fn product_table(
    labels: &[Partition],
    index: &HashMap<Partition, usize>,
    signed: bool,
) -> Vec<Vec<BigRational>> {
    let single = |n: usize| -> BTreeMap<Partition, BigRational> {
        Partition::all(n)
            .into_iter()
            .map(|r| {
                let sign = if signed && (n - r.len()) % 2 == 1 { -1 } else { 1 };
                let c = BigRational::new(BigInt::from(sign), r.z());
                (r, c)
            })
            .collect()
    };
    labels
        .iter()
        .map(|lam| {
            let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
            acc.insert(Partition::empty(), one());
            for &part in lam.parts() {
                let factor = single(part);
                let mut next = BTreeMap::new();
                for (a, ca) in &acc {
                    for (b, cb) in &factor {
                        *next.entry(a.union(b)).or_insert_with(zero) += ca * cb;
                    }
                }
                acc = next;
            }
            let mut row = vec![zero(); labels.len()];
            for (r, c) in acc {
                row[index[&r]] = c;
            }
            row
        })
        .collect()
}

static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();

/// Transition tables for degree `n`, computed once and shared.
pub fn tables(n: usize) -> Arc<DegreeTables> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("table cache").get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(DegreeTables::build(n));
    let mut guard = cache.lock().expect("table cache");
    Arc::clone(guard.entry(n).or_insert(built))
}
