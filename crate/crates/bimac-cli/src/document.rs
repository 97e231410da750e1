//! Serializable documents produced by every subcommand.

use std::fmt;

use bimac::bisym::BiSymPoly;
use bimac::coeffs::RatFunc;
use bimac::superspace::SuperExpansion;
use serde::{Deserialize, Serialize};

/// One `coefficient · basis element` term; both sides are canonical strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub label: String,
    pub coeff: String,
}

impl Term {
    pub fn new(label: impl fmt::Display, coeff: &RatFunc) -> Self {
        Term { label: label.to_string(), coeff: coeff.to_string() }
    }
}

/// Terms of a two-alphabet expansion in its stored basis order.
pub fn terms_of(f: &BiSymPoly) -> Vec<Term> {
    f.terms().map(|(l, c)| Term::new(l, c)).collect()
}

/// Terms of a super-Schur expansion in superpartition order.
pub fn terms_of_super(f: &SuperExpansion) -> Vec<Term> {
    f.iter().map(|(l, c)| Term::new(l, c)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    pub label: String,
    pub family: String,
    pub basis: String,
    pub terms: Vec<Term>,
}

/// A matrix with rows indexed by Macdonald labels and columns by Schur labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub title: String,
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl Table {
    pub fn entry(&self, row: &str, column: &str) -> Option<&str> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.columns.iter().position(|c| c == column)?;
        Some(&self.entries[i][j])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NablaImage {
    pub degree: usize,
    pub operator: String,
    /// Schur expansion of the image of `s_{∅,(n)}`.
    pub terms: Vec<Term>,
    pub catalan: String,
    pub catalan_at_one: String,
    pub dimension: String,
    pub dimension_at_one: String,
    pub sign_row: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub label: String,
    pub variables: usize,
    pub m: usize,
    pub closed: String,
    pub explicit: String,
    pub agree: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Counterexample,
}

/// Outcome of one instance of one identity or conjecture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub conjecture: String,
    pub instance: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn verified(conjecture: &str, instance: impl fmt::Display) -> Self {
        CheckResult {
            conjecture: conjecture.to_string(),
            instance: instance.to_string(),
            status: Status::Verified,
            witness: None,
        }
    }

    pub fn counterexample(conjecture: &str, instance: impl fmt::Display, witness: impl Into<String>) -> Self {
        CheckResult {
            conjecture: conjecture.to_string(),
            instance: instance.to_string(),
            status: Status::Counterexample,
            witness: Some(witness.into()),
        }
    }

    /// Verified when `ok`, otherwise a counterexample with the lazily built witness.
    pub fn check(conjecture: &str, instance: impl fmt::Display, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::verified(conjecture, instance)
        } else {
            Self::counterexample(conjecture, instance, witness())
        }
    }

    /// Compares two values exactly and records both sides on mismatch.
    pub fn equal<T: PartialEq + fmt::Display>(conjecture: &str, instance: impl fmt::Display, lhs: &T, rhs: &T) -> Self {
        Self::check(conjecture, instance, lhs == rhs, || format!("lhs = {lhs}; rhs = {rhs}"))
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Verified
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checked: usize,
    pub counterexamples: usize,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn new(suite: &str, results: Vec<CheckResult>) -> Self {
        let counterexamples = results.iter().filter(|r| !r.holds()).count();
        Report {
            suite: suite.to_string(),
            passed: counterexamples == 0,
            checked: results.len(),
            counterexamples,
            results,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepStep {
    pub m: usize,
    pub matches_stable: bool,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sweep {
    pub label: String,
    pub stable: Vec<Term>,
    pub steps: Vec<SweepStep>,
    pub stable_from: Option<usize>,
}

/// Everything a subcommand can emit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Expansion(Expansion),
    Table(Table),
    Nabla(NablaImage),
    Evaluation(Evaluation),
    Report(Report),
    Sweep(Sweep),
}

impl Document {
    /// False when the document records a failed check.
    pub fn passed(&self) -> bool {
        match self {
            Document::Evaluation(e) => e.agree,
            Document::Report(r) => r.passed,
            _ => true,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
