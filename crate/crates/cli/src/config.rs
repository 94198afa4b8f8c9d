use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use cogfis::analysis::{SystemOptions, VariantId};
use cogfis::crmetrics::{CalibrationRange, CalibrationTable, RawMetric};
use cogfis::inference::{AndOp, Defuzzifier};
use cogfis::{DecisionId, MfFamily};

/// Settings file. Every key is optional; command-line flags win.
///
/// ```toml
/// decision = "handoff"
/// variants = ["triangular-mamdani", "constant-sugeno"]
/// fixed = 50.0
/// grid = [10, 20, 30]
/// resolution = 1001
/// mamdani_and = "min"
/// sugeno_and = "product"
/// defuzz = "centroid"
/// sugeno_inputs = "gaussian"
/// output_dir = "out"
///
/// [coefficients]
/// handoff = [0.0, 0.0]
///
/// [calibration]
/// sinr_db = [-10.0, 30.0]
/// ```
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliConfig {
    pub decision: Option<String>,
    pub variants: Option<Vec<String>>,
    pub fixed: Option<f64>,
    pub grid: Option<Vec<f64>>,
    pub resolution: Option<usize>,
    pub mamdani_and: Option<String>,
    pub sugeno_and: Option<String>,
    pub defuzz: Option<String>,
    pub sugeno_inputs: Option<String>,
    pub output_dir: Option<PathBuf>,
    #[serde(default)]
    pub coefficients: BTreeMap<String, Vec<f64>>,
    #[serde(default)]
    pub calibration: BTreeMap<String, [f64; 2]>,
}

impl CliConfig {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(CliConfig::default());
        };
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn system_options(&self) -> Result<SystemOptions> {
        let mut opts = SystemOptions::default();
        if let Some(r) = self.resolution {
            opts.resolution = r;
        }
        if let Some(s) = &self.mamdani_and {
            opts.mamdani_and = s.parse::<AndOp>()?;
        }
        if let Some(s) = &self.sugeno_and {
            opts.sugeno_and = s.parse::<AndOp>()?;
        }
        if let Some(s) = &self.defuzz {
            opts.defuzz = s.parse::<Defuzzifier>()?;
        }
        if let Some(s) = &self.sugeno_inputs {
            opts.sugeno_inputs = s.parse::<MfFamily>()?;
        }
        for (key, c) in &self.coefficients {
            let d: DecisionId = key
                .parse()
                .with_context(|| format!("[coefficients] {key}"))?;
            if c.len() != d.inputs().len() {
                bail!(
                    "[coefficients] {key}: expected {} values, got {}",
                    d.inputs().len(),
                    c.len()
                );
            }
            opts.linear_coefficients.insert(d, c.clone());
        }
        Ok(opts)
    }

    pub fn calibration(&self) -> Result<CalibrationTable> {
        let mut table = CalibrationTable::default();
        for (key, [lo, hi]) in &self.calibration {
            let m: RawMetric = key.parse()?;
            table.set(
                m,
                CalibrationRange::new(*lo, *hi).with_context(|| format!("[calibration] {key}"))?,
            );
        }
        Ok(table)
    }

    /// Flag value, else config value.
    pub fn decision(&self, flag: Option<&str>) -> Result<DecisionId> {
        match flag.or(self.decision.as_deref()) {
            Some(s) => Ok(s.parse()?),
            None => bail!("no decision given (use --decision or set `decision` in the config)"),
        }
    }

    pub fn variants(&self, flag: &[String]) -> Result<Vec<VariantId>> {
        let names: Vec<&str> = if !flag.is_empty() {
            flag.iter().map(String::as_str).collect()
        } else if let Some(v) = &self.variants {
            v.iter().map(String::as_str).collect()
        } else {
            return Ok(VariantId::ALL.to_vec());
        };
        names.iter().map(|s| Ok(s.parse()?)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_file_parses() {
        let cfg: CliConfig = toml::from_str(
            r#"
            decision = "handoff"
            variants = ["triangular-mamdani"]
            fixed = 40.0
            grid = [10, 20]
            resolution = 2001
            mamdani_and = "product"
            defuzz = "bisector"
            sugeno_inputs = "triangular"
            output_dir = "out"
            [coefficients]
            handoff = [0.5, 0.0]
            [calibration]
            sinr_db = [0.0, 20.0]
            "#,
        )
        .unwrap();
        let opts = cfg.system_options().unwrap();
        assert_eq!(opts.resolution, 2001);
        assert_eq!(opts.mamdani_and, AndOp::Product);
        assert_eq!(opts.sugeno_inputs, MfFamily::Triangular);
        assert_eq!(
            opts.linear_coefficients[&DecisionId::HandoffStatus],
            [0.5, 0.0]
        );
        assert_eq!(
            cfg.calibration().unwrap().range(RawMetric::SinrDb).hi(),
            20.0
        );
        assert_eq!(cfg.decision(None).unwrap(), DecisionId::HandoffStatus);
        assert_eq!(cfg.variants(&[]).unwrap(), [VariantId::TriangularMamdani]);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(toml::from_str::<CliConfig>("colour = 1").is_err());
        assert!(
            toml::from_str::<CliConfig>("[calibration]\nsinr_db = [1.0, 2.0]\n[extra]").is_err()
        );
    }

    #[test]
    fn bad_values_are_reported() {
        let cfg: CliConfig = toml::from_str("[coefficients]\nhandoff = [1.0]").unwrap();
        assert!(cfg.system_options().is_err());
        let cfg: CliConfig = toml::from_str("[calibration]\nsinr_db = [5.0, 5.0]").unwrap();
        assert!(cfg.calibration().is_err());
    }
}
