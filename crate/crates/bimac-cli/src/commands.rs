//! One function per subcommand, each returning a document.

use bimac::bisym::{double_h, double_j, double_p, double_q, BiBasis, BiSymPoly, KostkaMatrix};
use bimac::coeffs::RatFunc;
use bimac::nabla::{h_tilde, nabla_apply, nabla_on_s_empty_n, nabla_pairings, NablaKind};
use bimac::partitions::{PairLabel, Partition, SuperPartition};
use bimac::superspace::{
    sector_key, stability_sweep, super_evaluation_closed, super_evaluation_explicit, super_h, super_j, super_kostka,
    super_p, super_schur_expand,
};

use crate::args::{BasisChoice, Family, Label, Variant};
use crate::document::{terms_of, terms_of_super, Document, Evaluation, Expansion, NablaImage, Sweep, SweepStep, Table};
use crate::golden::reference_order;
use crate::CliError;

pub fn expand(label: &Label, family: Family, basis: Option<BasisChoice>) -> Result<Document, CliError> {
    let (f, basis) = match label {
        Label::Pair(l) => expand_pair(l, family, basis)?,
        Label::Super(l) => expand_super(l, family, basis)?,
    };
    Ok(Document::Expansion(Expansion {
        label: label.to_string(),
        family: family.to_string(),
        basis: basis.to_string(),
        terms: f,
    }))
}

fn expand_pair(
    l: &PairLabel,
    family: Family,
    basis: Option<BasisChoice>,
) -> Result<(Vec<crate::document::Term>, BasisChoice), CliError> {
    let (f, default) = match family {
        Family::P => (double_p(l), BiBasis::SM),
        Family::Q => (double_q(l), BiBasis::SM),
        Family::J => (double_j(l), BiBasis::SM),
        Family::H => (double_h(l), BiBasis::SS),
        Family::Htilde => (h_tilde(l), BiBasis::SS),
    };
    match basis.unwrap_or(BasisChoice::Two(default)) {
        BasisChoice::Two(b) => Ok((terms_of(&f.to_basis(b)), BasisChoice::Two(b))),
        BasisChoice::SuperSchur => Err(CliError::Usage("SSCHUR expansions need a superpartition label".into())),
    }
}

fn expand_super(
    l: &SuperPartition,
    family: Family,
    basis: Option<BasisChoice>,
) -> Result<(Vec<crate::document::Term>, BasisChoice), CliError> {
    let f = match family {
        Family::P => super_p(l)?,
        Family::J => super_j(l)?,
        Family::H => super_h(l)?,
        Family::Q | Family::Htilde => {
            return Err(CliError::Usage(format!("family {family} is only available for pair labels")))
        }
    };
    let m = l.m();
    match basis.unwrap_or(BasisChoice::Two(BiBasis::SM)) {
        BasisChoice::Two(b) if b.has_schur_x_factor() => {
            Ok((terms_of(&f.to_basis(b).truncate_x(m)), BasisChoice::Two(b)))
        }
        BasisChoice::Two(b) => Err(CliError::Usage(format!(
            "basis {b} does not truncate to {m} x variables; use SM, SP, SS or SSCHUR"
        ))),
        BasisChoice::SuperSchur => {
            let (n, m) = sector_key(l);
            Ok((terms_of_super(&super_schur_expand(&f, n, m)?), BasisChoice::SuperSchur))
        }
    }
}

/// Row and column order for the double Kostka table of degree `n`.
pub fn table_order(n: usize) -> Vec<PairLabel> {
    reference_order(n).unwrap_or_else(|| PairLabel::all(n))
}

pub fn kostka(degree: usize, variant: Variant, m: Option<usize>) -> Result<Document, CliError> {
    match variant {
        Variant::Double => {
            let labels = table_order(degree);
            let mat = KostkaMatrix::build(labels.clone(), labels)?;
            Ok(Document::Table(Table {
                title: format!("K(q,t) for degree {degree}"),
                rows: mat.rows.iter().map(ToString::to_string).collect(),
                columns: mat.columns.iter().map(ToString::to_string).collect(),
                entries: strings(&mat.entries),
            }))
        }
        Variant::Super => {
            let m = m.ok_or_else(|| CliError::Usage("the super variant needs --m".into()))?;
            let labels = SuperPartition::of_bidegree(degree, m);
            if labels.is_empty() {
                return Err(CliError::Usage(format!("no superpartitions with |Λ*| = {degree} and m = {m}")));
            }
            let entries = labels
                .iter()
                .map(|row| labels.iter().map(|col| super_kostka(col, row)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            let names: Vec<String> = labels.iter().map(ToString::to_string).collect();
            Ok(Document::Table(Table {
                title: format!("K(q,t) for |Λ*| = {degree}, m = {m}"),
                rows: names.clone(),
                columns: names,
                entries: strings(&entries),
            }))
        }
    }
}

fn strings(rows: &[Vec<RatFunc>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

pub fn nabla(degree: usize, kind: NablaKind) -> Result<Document, CliError> {
    if degree == 0 {
        return Err(CliError::Usage("nabla needs a degree of at least 1".into()));
    }
    let image = match kind {
        NablaKind::B => nabla_on_s_empty_n(degree),
        _ => {
            let s = BiSymPoly::basis_element(BiBasis::SS, PairLabel::new(Partition::empty(), Partition::row(degree)));
            nabla_apply(&s, kind)?.to_basis(BiBasis::SS)
        }
    };
    let pairings = nabla_pairings(&image, degree);
    Ok(Document::Nabla(NablaImage {
        degree,
        operator: kind.name().to_string(),
        terms: terms_of(&image),
        catalan: pairings.catalan.to_string(),
        catalan_at_one: pairings.catalan.at_one()?.to_string(),
        dimension: pairings.dimension.to_string(),
        dimension_at_one: pairings.dimension.at_one()?.to_string(),
        sign_row: pairings.sign_row.to_string(),
    }))
}

pub fn evaluate(label: &Label, n_vars: Option<usize>, m: Option<usize>) -> Result<Document, CliError> {
    let n_vars = n_vars.ok_or_else(|| CliError::Usage("evaluate needs --N".into()))?;
    let (m, closed, explicit) = match label {
        Label::Pair(l) => {
            let m = m.unwrap_or_else(|| l.degree().max(1));
            (
                m,
                bimac::bisym::evaluate_closed(l, n_vars, m)?,
                bimac::bisym::evaluate_explicit(l, n_vars, m)?,
            )
        }
        Label::Super(l) => {
            if m.is_some_and(|m| m != l.m()) {
                return Err(CliError::Usage(format!("{l} has fermionic degree {}", l.m())));
            }
            (l.m(), super_evaluation_closed(l, n_vars)?, super_evaluation_explicit(l, n_vars)?)
        }
    };
    Ok(Document::Evaluation(Evaluation {
        label: label.to_string(),
        variables: n_vars,
        m,
        agree: closed == explicit,
        closed: closed.to_string(),
        explicit: explicit.to_string(),
    }))
}

pub fn sweep(label: &PairLabel, max_m: Option<usize>) -> Result<Document, CliError> {
    let max_m = max_m.unwrap_or(label.degree() + 2);
    let report = stability_sweep(label, 0..=max_m)?;
    let stable = double_p(label);
    Ok(Document::Sweep(Sweep {
        label: label.to_string(),
        stable: terms_of(&stable),
        steps: report
            .expansions
            .iter()
            .map(|(m, p)| SweepStep { m: *m, matches_stable: *p == stable, terms: terms_of(p) })
            .collect(),
        stable_from: report.stable_from,
    }))
}
