//! Per-degree transition matrices between two-alphabet bases and `p[X]⊗p[Y]`.

use super::BiBasis;
use crate::linalg::invert_rational;
use crate::partitions::{PairLabel, Partition};
use crate::symfunc::{tables::tables as one_tables, Basis};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Which alphabet a one-alphabet factor is evaluated at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Alphabet {
    X,
    Y,
    Sum,
    Diff,
}

impl Alphabet {
    fn coefficients(self) -> (i64, i64) {
        match self {
            Alphabet::X => (1, 0),
            Alphabet::Y => (0, 1),
            Alphabet::Sum => (1, 1),
            Alphabet::Diff => (1, -1),
        }
    }
}

/// Sparse element of `p[X]⊗p[Y]` with rational coefficients.
pub(crate) type RationalPp = HashMap<PairLabel, BigRational>;

/// Transition data for one total degree. Row `i` of `to_pp[b]` expresses
/// `b_{labels[i]}` in `p[X]⊗p[Y]`; `from_pp[b]` is the inverse matrix.
pub struct BiTables {
    pub labels: Vec<PairLabel>,
    pub index: HashMap<PairLabel, usize>,
    to_pp: Vec<Vec<Vec<BigRational>>>,
    from_pp: Vec<Vec<Vec<BigRational>>>,
}

impl BiTables {
    pub fn to_pp(&self, b: BiBasis) -> &[Vec<BigRational>] {
        &self.to_pp[b as usize]
    }

    pub fn from_pp(&self, b: BiBasis) -> &[Vec<BigRational>] {
        &self.from_pp[b as usize]
    }

    fn build(n: usize) -> Self {
        let labels = PairLabel::all(n);
        let index: HashMap<PairLabel, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let mut to_pp = Vec::new();
        let mut from_pp = Vec::new();
        for b in BiBasis::ALL {
            let ((f1, a1), (f2, a2)) = b.factors();
            let rows: Vec<Vec<BigRational>> = labels
                .iter()
                .map(|l| {
                    let prod = product(&factor_in_pp(f1, a1, &l.lam), &factor_in_pp(f2, a2, &l.mu));
                    let mut row = vec![BigRational::zero(); labels.len()];
                    for (k, c) in prod {
                        row[index[&k]] = c;
                    }
                    row
                })
                .collect();
            let inv = invert_rational(&rows).expect("two-alphabet bases are bases");
            to_pp.push(rows);
            from_pp.push(inv);
        }
        BiTables {
            labels,
            index,
            to_pp,
            from_pp,
        }
    }
}

/// `p_rho[A]` expanded in `p[X]⊗p[Y]`.
pub(crate) fn powersum_in_pp(rho: &Partition, a: Alphabet) -> RationalPp {
    let (cx, cy) = a.coefficients();
    let mut acc: RationalPp = HashMap::new();
    acc.insert(PairLabel::default(), BigRational::one());
    for &r in rho.parts() {
        let mut next: RationalPp = HashMap::new();
        for (l, c) in &acc {
            for (coef, to_x) in [(cx, true), (cy, false)] {
                if coef == 0 {
                    continue;
                }
                let single = Partition::of(&[r]);
                let key = if to_x {
                    PairLabel::new(l.lam.union(&single), l.mu.clone())
                } else {
                    PairLabel::new(l.lam.clone(), l.mu.union(&single))
                };
                *next.entry(key).or_insert_with(BigRational::zero) += c * BigRational::from(BigInt::from(coef));
            }
        }
        acc = next;
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

fn factor_in_pp(basis: Basis, a: Alphabet, lam: &Partition) -> RationalPp {
    let tb = one_tables(lam.size());
    let row = &tb.to_p(basis)[tb.index[lam]];
    let mut acc: RationalPp = HashMap::new();
    for (rho, c) in tb.labels.iter().zip(row) {
        if c.is_zero() {
            continue;
        }
        for (k, d) in powersum_in_pp(rho, a) {
            *acc.entry(k).or_insert_with(BigRational::zero) += c * d;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

pub(crate) fn product(a: &RationalPp, b: &RationalPp) -> RationalPp {
    let mut acc: RationalPp = HashMap::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let key = PairLabel::new(ka.lam.union(&kb.lam), ka.mu.union(&kb.mu));
            *acc.entry(key).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

static CACHE: OnceLock<Mutex<HashMap<usize, Arc<BiTables>>>> = OnceLock::new();

/// Transition tables for total degree `n`, computed once and shared.
pub fn bitables(n: usize) -> Arc<BiTables> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("table cache").get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(BiTables::build(n));
    let mut guard = cache.lock().expect("table cache");
    Arc::clone(guard.entry(n).or_insert(built))
}
