use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EngineKind {
    Mamdani,
    Sugeno,
}

/// T-norm used to combine antecedent degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AndOp {
    Min,
    Product,
}

impl AndOp {
    pub fn combine(self, a: f64, b: f64) -> f64 {
        match self {
            AndOp::Min => a.min(b),
            AndOp::Product => a * b,
        }
    }
}

impl FromStr for AndOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "min" => Ok(AndOp::Min),
            "product" | "prod" => Ok(AndOp::Product),
            _ => Err(Error::InvalidParameter(format!(
                "unknown AND operator `{s}`"
            ))),
        }
    }
}

impl fmt::Display for AndOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AndOp::Min => "min",
            AndOp::Product => "product",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Implication {
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Aggregation {
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Defuzzifier {
    Centroid,
    Bisector,
    MeanOfMaxima,
    SmallestOfMaxima,
    LargestOfMaxima,
}

impl FromStr for Defuzzifier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "centroid" => Ok(Defuzzifier::Centroid),
            "bisector" => Ok(Defuzzifier::Bisector),
            "mom" | "mean-of-maxima" => Ok(Defuzzifier::MeanOfMaxima),
            "som" | "smallest-of-maxima" => Ok(Defuzzifier::SmallestOfMaxima),
            "lom" | "largest-of-maxima" => Ok(Defuzzifier::LargestOfMaxima),
            _ => Err(Error::InvalidParameter(format!(
                "unknown defuzzifier `{s}`"
            ))),
        }
    }
}

pub const DEFAULT_RESOLUTION: usize = 1001;

/// Engine settings. Implication, aggregation and defuzzifier only matter
/// for Mamdani systems.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EngineConfig {
    pub kind: EngineKind,
    pub and_op: AndOp,
    pub implication: Implication,
    pub aggregation: Aggregation,
    pub defuzz: Defuzzifier,
    /// Samples across the output universe; odd so the midpoint is a sample.
    pub resolution: usize,
}

impl EngineConfig {
    pub fn mamdani() -> Self {
        EngineConfig {
            kind: EngineKind::Mamdani,
            and_op: AndOp::Min,
            implication: Implication::Min,
            aggregation: Aggregation::Max,
            defuzz: Defuzzifier::Centroid,
            resolution: DEFAULT_RESOLUTION,
        }
    }

    pub fn sugeno() -> Self {
        EngineConfig {
            kind: EngineKind::Sugeno,
            and_op: AndOp::Product,
            ..EngineConfig::mamdani()
        }
    }

    pub fn with_and_op(mut self, and_op: AndOp) -> Self {
        self.and_op = and_op;
        self
    }

    pub fn with_defuzz(mut self, defuzz: Defuzzifier) -> Self {
        self.defuzz = defuzz;
        self
    }

    pub fn with_resolution(mut self, resolution: usize) -> Self {
        self.resolution = resolution;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.resolution < 101 || self.resolution.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "resolution must be odd and >= 101, got {}",
                self.resolution
            )));
        }
        Ok(())
    }
}
