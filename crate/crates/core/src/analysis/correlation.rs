use crate::analysis::sweep::{SweepResult, STANDARD_SWEEPS};
use crate::analysis::variant::VariantId;
use crate::error::{Error, Result};

/// Pearson's correlation coefficient.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::SeriesLength(x.len(), y.len()));
    }
    if x.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "correlation needs at least 2 samples, got {}",
            x.len()
        )));
    }
    let constant = |s: &[f64]| s.iter().all(|&v| v == s[0]);
    if constant(x) || constant(y) {
        return Err(Error::DegenerateSeries);
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (&a, &b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// The three variant pairs reported per sweep.
pub const STANDARD_PAIRS: [(VariantId, VariantId); 3] = [
    (VariantId::GaussianMamdani, VariantId::TriangularMamdani),
    (VariantId::ConstantSugeno, VariantId::LinearSugeno),
    (VariantId::GaussianMamdani, VariantId::LinearSugeno),
];

#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationRow {
    pub label: String,
    /// Aligned with the report's pairs.
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationReport {
    pub pairs: Vec<(VariantId, VariantId)>,
    pub rows: Vec<CorrelationRow>,
}

fn sweep_label(s: &SweepResult) -> String {
    STANDARD_SWEEPS
        .iter()
        .find(|t| t.decision == s.spec.decision && t.input == s.spec.varied)
        .map(|t| t.label())
        .unwrap_or_else(|| s.spec.varied.key().to_owned())
}

/// One row per sweep, one column per variant pair.
pub fn correlation_report(
    sweeps: &[SweepResult],
    pairs: &[(VariantId, VariantId)],
) -> Result<CorrelationReport> {
    let rows = sweeps
        .iter()
        .map(|s| {
            let values = pairs
                .iter()
                .map(|&(a, b)| {
                    let missing = |v: VariantId| {
                        Error::InvalidParameter(format!("sweep has no `{v}` column"))
                    };
                    let x = s.column(a).ok_or_else(|| missing(a))?;
                    let y = s.column(b).ok_or_else(|| missing(b))?;
                    pearson(&x, &y)
                })
                .collect::<Result<_>>()?;
            Ok(CorrelationRow {
                label: sweep_label(s),
                values,
            })
        })
        .collect::<Result<_>>()?;
    Ok(CorrelationReport {
        pairs: pairs.to_vec(),
        rows,
    })
}
