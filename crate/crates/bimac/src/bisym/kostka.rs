//! Double Kostka coefficients: the Schur expansion of the modified double
//! Macdonald polynomials.

use super::double::double_h;
use crate::coeffs::{RatFunc, Var};
use crate::macdonald::{kostka_qt, McParams};
use crate::partitions::{PairLabel, Partition};
use crate::symfunc::littlewood_richardson;
use crate::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn check_degrees(schur: &PairLabel, label: &PairLabel) -> Result<(), Error> {
    if schur.degree() != label.degree() {
        return Err(Error::DegreeMismatch(schur.to_string(), label.to_string()));
    }
    Ok(())
}

/// `K_{κ,γ;λ,μ}(q,t)`: the coefficient of `s_κ[X] s_γ[Y]` in `H_{λ,μ}`.
pub fn double_kostka(schur: &PairLabel, label: &PairLabel) -> Result<RatFunc, Error> {
    check_degrees(schur, label)?;
    Ok(double_h(label).coeff(schur))
}

/// The same coefficient assembled from one-alphabet `q,t`-Kostkas and four
/// Littlewood–Richardson coefficients:
/// `Σ K_{νλ}(q,qt) K_{ωμ}(qt,t) c^ν_{αβ} c^ω_{ρσ} c^κ_{αρ} c^γ_{βσ} q^{|β|} t^{|ρ|}`.
pub fn double_kostka_sum(schur: &PairLabel, label: &PairLabel) -> Result<RatFunc, Error> {
    check_degrees(schur, label)?;
    let (kappa, gamma) = (&schur.lam, &schur.mu);
    let (lam, mu) = (&label.lam, &label.mu);
    let mut total = RatFunc::zero();
    // c^κ_{αρ} and c^γ_{βσ} fix the sizes: |α|+|ρ| = |κ|, |β|+|σ| = |γ|,
    // while |α|+|β| = |λ| and |ρ|+|σ| = |μ|.
    for a_size in 0..=kappa.size().min(lam.size()) {
        let b_size = lam.size() - a_size;
        let r_size = kappa.size() - a_size;
        if b_size > gamma.size() || r_size > mu.size() {
            continue;
        }
        let s_size = mu.size() - r_size;
        for alpha in Partition::all(a_size) {
            for rho in Partition::all(r_size) {
                let c_kappa = lr_coeff(&alpha, &rho, kappa);
                if c_kappa.is_zero() {
                    continue;
                }
                for beta in Partition::all(b_size) {
                    for sigma in Partition::all(s_size) {
                        let c_gamma = lr_coeff(&beta, &sigma, gamma);
                        if c_gamma.is_zero() {
                            continue;
                        }
                        let inner = inner_sum(&alpha, &beta, &rho, &sigma, lam, mu)?;
                        if inner.is_zero() {
                            continue;
                        }
                        let weight = RatFunc::qt_power(b_size as i64, r_size as i64)
                            .scale_int(&(&c_kappa * &c_gamma));
                        total = total.add(&inner.mul(&weight));
                    }
                }
            }
        }
    }
    Ok(total)
}

fn lr_coeff(a: &Partition, b: &Partition, target: &Partition) -> BigInt {
    littlewood_richardson(a, b).get(target).cloned().unwrap_or_else(BigInt::zero)
}

/// `Σ_{ν,ω} K_{νλ}(q,qt) K_{ωμ}(qt,t) c^ν_{αβ} c^ω_{ρσ}`.
fn inner_sum(
    alpha: &Partition,
    beta: &Partition,
    rho: &Partition,
    sigma: &Partition,
    lam: &Partition,
    mu: &Partition,
) -> Result<RatFunc, Error> {
    let x_part = littlewood_richardson(alpha, beta)
        .into_iter()
        .try_fold(RatFunc::zero(), |acc, (nu, c)| {
            Ok::<_, Error>(acc.add(&kostka_qt(&nu, lam, &McParams::x_factor())?.scale_int(&c)))
        })?;
    if x_part.is_zero() {
        return Ok(x_part);
    }
    let y_part = littlewood_richardson(rho, sigma)
        .into_iter()
        .try_fold(RatFunc::zero(), |acc, (om, c)| {
            Ok::<_, Error>(acc.add(&kostka_qt(&om, mu, &McParams::y_factor())?.scale_int(&c)))
        })?;
    Ok(x_part.mul(&y_part))
}

/// The double Kostka matrix with rows indexed by Macdonald labels and
/// columns by Schur labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaMatrix {
    pub rows: Vec<PairLabel>,
    pub columns: Vec<PairLabel>,
    pub entries: Vec<Vec<RatFunc>>,
}

impl KostkaMatrix {
    /// All entries in the given row and column orders.
    pub fn build(rows: Vec<PairLabel>, columns: Vec<PairLabel>) -> Result<Self, Error> {
        let entries = rows
            .iter()
            .map(|r| {
                let h = double_h(r);
                columns
                    .iter()
                    .map(|c| {
                        check_degrees(c, r)?;
                        Ok(h.coeff(c))
                    })
                    .collect::<Result<Vec<_>, Error>>()
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(KostkaMatrix { rows, columns, entries })
    }

    pub fn entry(&self, row: &PairLabel, column: &PairLabel) -> Option<&RatFunc> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.columns.iter().position(|c| c == column)?;
        Some(&self.entries[i][j])
    }
}

/// The degree-`n` matrix with both axes in the order of [`PairLabel::all`].
pub fn kostka_matrix(n: usize) -> KostkaMatrix {
    let labels = PairLabel::all(n);
    KostkaMatrix::build(labels.clone(), labels).expect("labels share the degree")
}

/// Closed forms of the four one-dimensional-representation Kostkas at `(λ, μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaSpecials {
    /// `K_{(n),∅;λ,μ} = q^{n(λ)} t^{|μ|+n(λ)+n(μ)}`.
    pub row_x: RatFunc,
    /// `K_{∅,(n);λ,μ} = q^{|λ|+n(λ)} t^{n(λ)+n(μ)}`.
    pub row_y: RatFunc,
    /// `K_{∅,(1^n);λ,μ} = q^{|λ|+n(λ')+n(μ')} t^{n(μ')}`.
    pub column_y: RatFunc,
    /// `K_{(1^n),∅;λ,μ} = q^{n(λ')+n(μ')} t^{|μ|+n(μ')}`.
    pub column_x: RatFunc,
}

pub fn kostka_specials(label: &PairLabel) -> KostkaSpecials {
    let (lam, mu) = (&label.lam, &label.mu);
    let (nl, nm) = (lam.n_stat() as i64, mu.n_stat() as i64);
    let (nlc, nmc) = (lam.conjugate().n_stat() as i64, mu.conjugate().n_stat() as i64);
    let (sl, sm) = (lam.size() as i64, mu.size() as i64);
    KostkaSpecials {
        row_x: RatFunc::qt_power(nl, sm + nl + nm),
        row_y: RatFunc::qt_power(sl + nl, nl + nm),
        column_y: RatFunc::qt_power(sl + nlc + nmc, nmc),
        column_x: RatFunc::qt_power(nlc + nmc, sm + nmc),
    }
}

impl KostkaSpecials {
    /// The Schur labels the four closed forms refer to, in field order.
    pub fn schur_labels(n: usize) -> [PairLabel; 4] {
        let e = Partition::empty();
        [
            PairLabel::new(Partition::row(n), e.clone()),
            PairLabel::new(e.clone(), Partition::row(n)),
            PairLabel::new(e.clone(), Partition::column(n)),
            PairLabel::new(Partition::column(n), e),
        ]
    }

    pub fn values(&self) -> [&RatFunc; 4] {
        [&self.row_x, &self.row_y, &self.column_y, &self.column_x]
    }
}

/// `n̄(λ,μ) = n(λ) + |μ| + n(μ') + n(μ)`.
fn n_bar(lam: &Partition, mu: &Partition) -> i64 {
    (lam.n_stat() + mu.size() + mu.conjugate().n_stat() + mu.n_stat()) as i64
}

/// Outcome of checking both Kostka symmetries in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub degree: usize,
    pub entries: usize,
    /// `K_{κ,γ;λ,μ}(q,t) = q^{n̄(μ',λ')} t^{n̄(λ,μ)} K_{γ',κ';λ,μ}(1/q,1/t)`.
    pub inversion_holds: bool,
    /// `K_{κ,γ;λ,μ}(q,t) = K_{γ',κ';μ',λ'}(t,q)`.
    pub transpose_holds: bool,
    pub failures: Vec<(PairLabel, PairLabel)>,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.inversion_holds && self.transpose_holds
    }
}

pub fn kostka_symmetries_check(n: usize) -> SymmetryReport {
    let mat = kostka_matrix(n);
    let invert = [(Var::Q, RatFunc::q().inv().expect("q ≠ 0")), (Var::T, RatFunc::t().inv().expect("t ≠ 0"))];
    let mut report = SymmetryReport {
        degree: n,
        entries: mat.rows.len() * mat.columns.len(),
        inversion_holds: true,
        transpose_holds: true,
        failures: Vec::new(),
    };
    for row in &mat.rows {
        let dual_row = row.dual();
        let prefactor = RatFunc::qt_power(n_bar(&dual_row.lam, &dual_row.mu), n_bar(&row.lam, &row.mu));
        for col in &mat.columns {
            let k = mat.entry(row, col).expect("entry present");
            let dual_col = col.dual();
            let flipped = mat
                .entry(row, &dual_col)
                .expect("entry present")
                .substitute(&invert)
                .expect("Laurent substitution");
            let first = *k == prefactor.mul(&flipped);
            let second = *k == mat.entry(&dual_row, &dual_col).expect("entry present").swap_qt();
            report.inversion_holds &= first;
            report.transpose_holds &= second;
            if !(first && second) {
                report.failures.push((col.clone(), row.clone()));
            }
        }
    }
    report
}

/// `Σ_{κ,γ} K_{κ,γ;λ,μ}(1,1)²`, which should equal `2^n n!`.
pub fn dimension_square_sum(label: &PairLabel) -> Result<BigInt, Error> {
    let h = double_h(label);
    let mut total = BigInt::zero();
    for (_, c) in h.terms() {
        let v = c.at_one()?;
        let k = v.to_rational().filter(|r| r.is_integer()).ok_or_else(|| Error::NotInteger(v.to_string()))?;
        total += k.to_integer().pow(2);
    }
    Ok(total)
}

/// `2^n n!`, the order of the hyperoctahedral group.
pub fn hyperoctahedral_order(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one() << n, |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisym::pair;
    use crate::coeffs::rf;

    #[test]
    fn degree_one_table() {
        let m = kostka_matrix(1);
        let (x, y) = (pair(&[1], &[]), pair(&[], &[1]));
        assert_eq!(m.entry(&x, &x), Some(&RatFunc::one()));
        assert_eq!(m.entry(&x, &y), Some(&RatFunc::q()));
        assert_eq!(m.entry(&y, &x), Some(&RatFunc::t()));
        assert_eq!(m.entry(&y, &y), Some(&RatFunc::one()));
    }

    #[test]
    fn two_row_entries() {
        let row = pair(&[2], &[]);
        assert_eq!(double_kostka(&pair(&[1], &[1]), &row).unwrap(), rf("q+q^2"));
        assert_eq!(double_kostka(&row, &row).unwrap(), RatFunc::one());
        assert!(double_kostka(&pair(&[1], &[]), &row).is_err());
    }

    #[test]
    fn sum_formula_in_degree_two() {
        for label in PairLabel::all(2) {
            for schur in PairLabel::all(2) {
                assert_eq!(
                    double_kostka_sum(&schur, &label).unwrap(),
                    double_kostka(&schur, &label).unwrap(),
                    "{schur} {label}"
                );
            }
        }
    }

    #[test]
    fn specials_in_degree_two() {
        for label in PairLabel::all(2) {
            let sp = kostka_specials(&label);
            for (schur, v) in KostkaSpecials::schur_labels(2).iter().zip(sp.values()) {
                assert_eq!(&double_kostka(schur, &label).unwrap(), v, "{schur} {label}");
            }
        }
    }

    #[test]
    fn symmetries_low_degree() {
        let r = kostka_symmetries_check(2);
        assert_eq!(r.entries, 25);
        assert!(r.holds(), "{:?}", r.failures);
    }

    #[test]
    fn dimensions() {
        assert_eq!(hyperoctahedral_order(3), BigInt::from(48));
        for label in PairLabel::all(2) {
            assert_eq!(dimension_square_sum(&label).unwrap(), BigInt::from(8));
        }
    }
}
