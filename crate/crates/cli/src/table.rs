use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};

use cogfis::analysis::{CorrelationReport, SurfaceGrid, SweepResult};

/// Shortest decimal that parses back to the same value (at most 17
/// significant digits, never exponent notation).
pub fn fmt_full(v: f64) -> String {
    format!("{}", v + 0.0)
}

/// `v` rounded to `digits` significant digits.
pub fn fmt_sig(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{:.*}", digits.saturating_sub(1), v + 0.0);
    }
    let magnitude = v.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{v:.decimals$}");
    // Rounding may have added a digit (99.995 -> 100.00).
    let rounded: f64 = s.parse().unwrap_or(v);
    if rounded != 0.0 && (rounded.abs().log10().floor() as i64) > magnitude && decimals > 0 {
        return format!("{v:.prec$}", prec = decimals - 1);
    }
    s
}

/// Header and rows as written to disk.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> Result<Vec<u8>> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        Ok(w.into_inner()?)
    }

    /// Writes to `path`, or stdout when `path` is `None`.
    pub fn emit(&self, path: Option<&Path>) -> Result<()> {
        let bytes = self.to_csv()?;
        match path {
            Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
            None => {
                std::io::stdout().write_all(&bytes)?;
                Ok(())
            }
        }
    }
}

pub fn sweep_table(sweep: &SweepResult) -> Table {
    let mut header = vec![sweep.spec.varied.key().to_owned()];
    header.extend(sweep.spec.variants.iter().map(|v| v.key().to_owned()));
    let rows = sweep
        .rows
        .iter()
        .map(|r| {
            std::iter::once(fmt_full(r.input))
                .chain(r.outputs.iter().map(|&y| fmt_full(y)))
                .collect()
        })
        .collect();
    Table { header, rows }
}

/// Long format, first input outer.
pub fn surface_table(grid: &SurfaceGrid) -> Table {
    let spec = &grid.spec;
    let mut header = vec![spec.input_a.key().to_owned(), spec.input_b.key().to_owned()];
    header.extend(spec.variants.iter().map(|v| v.key().to_owned()));
    let mut rows = Vec::with_capacity(spec.grid_a.len() * spec.grid_b.len());
    for (i, &a) in spec.grid_a.iter().enumerate() {
        for (j, &b) in spec.grid_b.iter().enumerate() {
            let mut row = vec![fmt_full(a), fmt_full(b)];
            row.extend((0..spec.variants.len()).map(|v| fmt_full(grid.at(v, i, j))));
            rows.push(row);
        }
    }
    Table { header, rows }
}

pub fn correlation_table(report: &CorrelationReport) -> Table {
    let mut header = vec!["parameter".to_owned()];
    header.extend(report.pairs.iter().map(|(a, b)| format!("{a}~{b}")));
    let rows = report
        .rows
        .iter()
        .map(|r| {
            std::iter::once(r.label.clone())
                .chain(r.values.iter().map(|&v| fmt_full(v)))
                .collect()
        })
        .collect();
    Table { header, rows }
}

/// A sweep CSV read back: x label, series names and numeric rows.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepCsv {
    pub x_label: String,
    pub series: Vec<String>,
    pub xs: Vec<f64>,
    /// `ys[k]` is the column of `series[k]`.
    pub ys: Vec<Vec<f64>>,
}

pub fn read_sweep_csv(path: &Path) -> Result<SweepCsv> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_sweep_csv(&text).with_context(|| format!("in {}", path.display()))
}

pub fn parse_sweep_csv(text: &str) -> Result<SweepCsv> {
    let mut r = csv::ReaderBuilder::new()
        .flexible(true)
        .from_reader(text.as_bytes());
    let header = r.headers().context("reading header")?.clone();
    if header.len() < 2 {
        bail!("header needs an input column and at least one series");
    }
    let series: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
    let mut xs = Vec::new();
    let mut ys = vec![Vec::new(); series.len()];
    for (k, rec) in r.records().enumerate() {
        let row = k + 1;
        let rec = rec.with_context(|| format!("row {row}"))?;
        if rec.len() != header.len() {
            bail!(
                "row {row}: expected {} fields, got {}",
                header.len(),
                rec.len()
            );
        }
        let nums = rec
            .iter()
            .map(|f| {
                f.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .with_context(|| format!("row {row}: `{f}` is not a number"))
            })
            .collect::<Result<Vec<_>>>()?;
        xs.push(nums[0]);
        for (col, v) in ys.iter_mut().zip(&nums[1..]) {
            col.push(*v);
        }
    }
    if xs.is_empty() {
        bail!("sweep has no data rows");
    }
    Ok(SweepCsv {
        x_label: header[0].to_owned(),
        series,
        xs,
        ys,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_sig(33.3, 4), "33.30");
        assert_eq!(fmt_sig(50.0, 4), "50.00");
        assert_eq!(fmt_sig(0.0013562, 4), "0.001356");
        assert_eq!(fmt_sig(94.44317, 4), "94.44");
        assert_eq!(fmt_sig(99.996, 4), "100.0");
        assert_eq!(fmt_sig(0.0, 4), "0.000");
        assert_eq!(fmt_sig(-2.5, 4), "-2.500");
    }

    #[test]
    fn full_precision_round_trips() {
        for v in [0.1, 1.0 / 3.0, 1e-20, 12345.678901234567, -0.0] {
            let s = fmt_full(v);
            assert!(!s.contains('e'), "{s}");
            assert_eq!(s.parse::<f64>().unwrap(), v + 0.0);
        }
        assert_eq!(fmt_full(10.0), "10");
    }

    #[test]
    fn sweep_csv_errors_carry_row_numbers() {
        let err = parse_sweep_csv("x,a\n1,2\n3,oops\n").unwrap_err();
        assert!(format!("{err:#}").contains("row 2"), "{err:#}");
        let err = parse_sweep_csv("x,a\n1,2\n3\n").unwrap_err();
        assert!(format!("{err:#}").contains("row 2"), "{err:#}");
        assert!(parse_sweep_csv("x,a\n").is_err());
        assert!(parse_sweep_csv("x\n1\n").is_err());
    }

    #[test]
    fn csv_uses_lf() {
        let t = Table {
            header: vec!["a".into(), "b".into()],
            rows: vec![vec!["1".into(), "2".into()]],
        };
        assert_eq!(t.to_csv().unwrap(), b"a,b\n1,2\n");
    }
}
