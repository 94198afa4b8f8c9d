use std::fmt;

use crate::analysis::sweep::SweepResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Nondecreasing,
    Nonincreasing,
}

impl fmt::Display for Trend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Trend::Nondecreasing => "nondecreasing",
            Trend::Nonincreasing => "nonincreasing",
        })
    }
}

/// Default slack against the trend between neighbouring grid points.
pub const TREND_SLACK: f64 = 0.5;

/// Expected direction of selected standard sweeps, keyed by sweep number.
pub const EXPECTED_TRENDS: [(u8, Trend); 7] = [
    (10, Trend::Nonincreasing),
    (11, Trend::Nondecreasing),
    (17, Trend::Nonincreasing),
    (19, Trend::Nondecreasing),
    (20, Trend::Nondecreasing),
    (21, Trend::Nonincreasing),
    (22, Trend::Nondecreasing),
];

/// A step against the trend larger than the slack.
#[derive(Debug, Clone, PartialEq)]
pub struct TrendViolation {
    /// Index of the later of the two grid points.
    pub index: usize,
    pub step: f64,
}

/// Plateaus pass; moves against `trend` up to `slack` are tolerated.
pub fn check_trend(values: &[f64], trend: Trend, slack: f64) -> Result<(), TrendViolation> {
    for (i, w) in values.windows(2).enumerate() {
        let step = w[1] - w[0];
        let against = match trend {
            Trend::Nondecreasing => -step,
            Trend::Nonincreasing => step,
        };
        if against > slack {
            return Err(TrendViolation { index: i + 1, step });
        }
    }
    Ok(())
}

/// Checks every variant column of a sweep.
pub fn check_sweep_trend(
    sweep: &SweepResult,
    trend: Trend,
    slack: f64,
) -> Vec<(String, TrendViolation)> {
    sweep
        .spec
        .variants
        .iter()
        .filter_map(|&v| {
            let col = sweep.column(v)?;
            check_trend(&col, trend, slack)
                .err()
                .map(|e| (v.key().to_owned(), e))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plateaus_and_slack() {
        assert!(check_trend(&[1.0, 1.0, 2.0, 1.6, 3.0], Trend::Nondecreasing, 0.5).is_ok());
        assert_eq!(
            check_trend(&[1.0, 2.0, 1.0], Trend::Nondecreasing, 0.5),
            Err(TrendViolation {
                index: 2,
                step: -1.0
            })
        );
        assert!(check_trend(&[3.0, 3.0, 0.0], Trend::Nonincreasing, 0.0).is_ok());
        assert!(check_trend(&[], Trend::Nonincreasing, 0.0).is_ok());
    }
}
