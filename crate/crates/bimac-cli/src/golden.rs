//! Embedded reference Kostka tables for degrees 1 to 3.

use bimac::coeffs::RatFunc;
use bimac::partitions::PairLabel;
use serde::Deserialize;

use crate::document::{CheckResult, Table};

const KOSTKA_TABLES: &str = include_str!("../data/kostka_tables.json");

/// One reference table. `entries[i][j]` is `K_{order[j]; order[i]}`.
#[derive(Clone, Debug, Deserialize)]
pub struct GoldenTable {
    pub degree: usize,
    pub order: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct GoldenFile {
    tables: Vec<GoldenTable>,
}

pub fn kostka_tables() -> Vec<GoldenTable> {
    let file: GoldenFile = serde_json::from_str(KOSTKA_TABLES).expect("embedded tables are valid JSON");
    file.tables
}

/// The reference label order for `degree`, when a table exists.
pub fn reference_order(degree: usize) -> Option<Vec<PairLabel>> {
    kostka_tables()
        .into_iter()
        .find(|t| t.degree == degree)
        .map(|t| t.labels())
}

impl GoldenTable {
    pub fn labels(&self) -> Vec<PairLabel> {
        self.order.iter().map(|s| s.parse().expect("embedded labels parse")).collect()
    }

    pub fn values(&self) -> Vec<Vec<RatFunc>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|s| RatFunc::parse(s).expect("embedded entries parse")).collect())
            .collect()
    }

    pub fn entry_count(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    /// Compares every reference entry with the matching entry of `table`.
    pub fn compare(&self, table: &Table) -> Vec<CheckResult> {
        let labels = self.labels();
        let values = self.values();
        let mut out = Vec::with_capacity(self.entry_count());
        for (row, expected_row) in labels.iter().zip(&values) {
            for (column, expected) in labels.iter().zip(expected_row) {
                let instance = format!("K[{column}; {row}]");
                let found = table
                    .entry(&row.to_string(), &column.to_string())
                    .map(|s| RatFunc::parse(s).map_err(|e| e.to_string()));
                out.push(match found {
                    Some(Ok(v)) => CheckResult::equal("appendixD", instance, &v, expected),
                    Some(Err(e)) => CheckResult::counterexample("appendixD", instance, format!("unparsable entry: {e}")),
                    None => CheckResult::counterexample("appendixD", instance, "entry missing from the table"),
                });
            }
        }
        out
    }
}
