//! Exhaustive low-degree checks of the structural properties of the
//! superspace families.

use super::{h_down, super_h_expansion, super_j, super_kostka, super_norm, super_norm_formula};
use crate::bisym::double_kostka;
use crate::coeffs::{RatFunc, Var};
use crate::macdonald::{c_hook, McParams};
use crate::partitions::{pair_dominance_leq, super_dominance_leq, PairLabel, SuperPartition};
use crate::Error;

/// Outcome of one exhaustive check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Sector coordinates `(n, m)` of every bidegree with `|Λ*| ≤ max_total`.
pub fn bidegrees(max_total: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        for m in 0.. {
            let shift = m * (m.max(1) - 1) / 2;
            if shift > total {
                break;
            }
            out.push((total - shift, m));
        }
    }
    out
}

fn labels_up_to(max_total: usize) -> impl Iterator<Item = SuperPartition> {
    bidegrees(max_total)
        .into_iter()
        .flat_map(|(n, m)| SuperPartition::sector(n, m))
}

/// Norms agree with `(−1)^{m(m−1)/2} q^{|Λ^a|} h↑/h↓`.
pub fn norm_check(max_total: usize) -> Result<CheckReport, Error> {
    let mut r = CheckReport::default();
    for l in labels_up_to(max_total) {
        let ok = super_norm(&l)? == super_norm_formula(&l);
        r.record(ok, || l.to_string());
    }
    Ok(r)
}

/// `J_Λ` has monomial coefficients in `ℤ[q,t]`.
pub fn integrality_check(max_total: usize) -> Result<CheckReport, Error> {
    let mut r = CheckReport::default();
    for l in labels_up_to(max_total) {
        let ok = super_j(&l)?.all_coeffs(RatFunc::is_polynomial);
        r.record(ok, || l.to_string());
    }
    Ok(r)
}

/// Every `K_{ΩΛ}(q,t)` lies in `ℕ[q,t]`.
pub fn positivity_check(max_total: usize) -> Result<CheckReport, Error> {
    let mut r = CheckReport::default();
    for l in labels_up_to(max_total) {
        for (o, k) in super_h_expansion(&l)? {
            r.record(k.is_nonneg_polynomial(), || format!("K[{o}; {l}] = {k}"));
        }
    }
    Ok(r)
}

/// `n(SΛ) − d^B(Λ)`.
pub fn super_n_bar(l: &SuperPartition) -> i64 {
    let s = l.stats();
    s.n_skew as i64 - s.d_b as i64
}

/// `K_{ΩΛ}(q,t) = K_{Ω'Λ'}(t,q)` and
/// `K_{ΩΛ}(q,t) = q^{n̄(Λ')} t^{n̄(Λ)} K_{Ω'Λ}(1/q,1/t)`.
pub fn super_symmetry_check(max_total: usize) -> Result<CheckReport, Error> {
    let mut r = CheckReport::default();
    let invert = [
        (Var::Q, RatFunc::q().inv().expect("q ≠ 0")),
        (Var::T, RatFunc::t().inv().expect("t ≠ 0")),
    ];
    for (n, m) in bidegrees(max_total) {
        let labels = SuperPartition::sector(n, m);
        for l in &labels {
            let lc = l.conjugate();
            let factor = RatFunc::qt_power(super_n_bar(&lc), super_n_bar(l));
            for o in &labels {
                let k = super_kostka(o, l)?;
                let oc = o.conjugate();
                let swapped = super_kostka(&oc, &lc)?.swap_qt();
                r.record(k == swapped, || format!("transpose K[{o}; {l}]"));
                let inverted = factor.mul(&super_kostka(&oc, l)?.substitute(&invert)?);
                r.record(k == inverted, || format!("inversion K[{o}; {l}]"));
            }
        }
    }
    Ok(r)
}

fn stable_labels(max_n: usize) -> impl Iterator<Item = (PairLabel, SuperPartition)> {
    (0..=max_n).flat_map(|n| {
        [n, n + 1].into_iter().flat_map(move |m| {
            PairLabel::all(n)
                .into_iter()
                .map(move |p| (p.clone(), SuperPartition::from_pair(&p, m).expect("m ≥ n")))
        })
    })
}

/// For `Λ = (λ + δ^m; μ)` with `m ∈ {n, n+1}`:
/// `n(λ) + |μ| + n(μ) + n(μ') = n(SΛ) − d^B(Λ)`.
pub fn stable_degree_check(max_n: usize) -> CheckReport {
    let mut r = CheckReport::default();
    for (p, l) in stable_labels(max_n) {
        let lhs = p.lam.n_stat() + p.mu.size() + p.mu.n_stat() + p.mu.conjugate().n_stat();
        r.record(lhs as i64 == super_n_bar(&l), || l.to_string());
    }
    r
}

/// For stable labels `h↓_Λ = c_λ(q,qt) c_μ(qt,t)`.
pub fn h_down_stable_check(max_n: usize) -> CheckReport {
    let mut r = CheckReport::default();
    for (p, l) in stable_labels(max_n) {
        let c = c_hook(&p.lam, &McParams::x_factor()).mul(&c_hook(&p.mu, &McParams::y_factor()));
        r.record(h_down(&l) == c, || l.to_string());
    }
    r
}

/// For `m ≥ n` the super Kostka coefficients equal the double Kostka
/// coefficients of the underlying pairs.
pub fn stable_kostka_check(n: usize, m: usize) -> Result<CheckReport, Error> {
    let mut r = CheckReport::default();
    let labels = PairLabel::all(n);
    for l in &labels {
        let sl = SuperPartition::from_pair(l, m)?;
        for o in &labels {
            let so = SuperPartition::from_pair(o, m)?;
            let ok = super_kostka(&so, &sl)? == double_kostka(o, l)?;
            r.record(ok, || format!("K[{so}; {sl}]"));
        }
    }
    Ok(r)
}

/// Compares pair dominance with super dominance on the sector `(n, m)`.
pub fn ordering_equivalence(n: usize, m: usize) -> Result<CheckReport, Error> {
    let mut r = CheckReport::default();
    let labels = PairLabel::all_with_max_len(n, m);
    for a in &labels {
        for b in &labels {
            let pair_order = pair_dominance_leq(a, b)?;
            let super_order =
                super_dominance_leq(&SuperPartition::from_pair(a, m)?, &SuperPartition::from_pair(b, m)?)?;
            r.record(pair_order == super_order, || format!("{a} vs {b}"));
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bidegree_list() {
        assert_eq!(bidegrees(1), vec![(0, 0), (0, 1), (1, 0), (1, 1), (0, 2)]);
    }

    #[test]
    fn low_degree_checks() {
        assert!(norm_check(2).unwrap().holds());
        assert!(integrality_check(2).unwrap().holds());
        assert!(positivity_check(2).unwrap().holds());
        assert!(super_symmetry_check(2).unwrap().holds());
    }

    #[test]
    fn stable_statistics() {
        assert!(stable_degree_check(3).holds());
        assert!(h_down_stable_check(3).holds());
        assert!(stable_kostka_check(2, 2).unwrap().holds());
    }

    #[test]
    fn orders_agree_when_stable() {
        for n in 0..=3 {
            assert!(ordering_equivalence(n, n).unwrap().holds());
        }
    }
}
