#![allow(dead_code)]

use std::path::PathBuf;

use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenCell {
    pub table: u8,
    pub input: u8,
    pub variant: String,
    pub paper_value: f64,
    pub tolerance: f64,
    pub kind: String,
}

pub fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/paper_tables.csv")
}

pub fn golden_cells() -> Vec<GoldenCell> {
    csv::Reader::from_path(golden_path())
        .expect("golden file present")
        .deserialize()
        .collect::<Result<_, _>>()
        .expect("golden file parses")
}

/// Printed column of one table, in input order.
pub fn printed_column(cells: &[GoldenCell], table: u8, variant: &str) -> Vec<f64> {
    let mut rows: Vec<_> = cells
        .iter()
        .filter(|c| c.table == table && c.variant == variant)
        .collect();
    rows.sort_by_key(|c| c.input);
    rows.iter().map(|c| c.paper_value).collect()
}
