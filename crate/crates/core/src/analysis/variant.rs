use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::catalog::{input_variable, output_variable, MfFamily};
use crate::error::{Error, Result};
use crate::inference::{
    AndOp, Consequent, Defuzzifier, EngineConfig, FuzzySystem, SugenoConsequent, DEFAULT_RESOLUTION,
};
use crate::membership::Universe;
use crate::ruledsl::{builtin_rulebase, DecisionId, RuleBase};

/// The four inference systems compared for every decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VariantId {
    GaussianMamdani,
    TriangularMamdani,
    ConstantSugeno,
    LinearSugeno,
}

impl VariantId {
    pub const ALL: [VariantId; 4] = [
        VariantId::GaussianMamdani,
        VariantId::TriangularMamdani,
        VariantId::ConstantSugeno,
        VariantId::LinearSugeno,
    ];

    pub fn key(self) -> &'static str {
        match self {
            VariantId::GaussianMamdani => "gaussian-mamdani",
            VariantId::TriangularMamdani => "triangular-mamdani",
            VariantId::ConstantSugeno => "constant-sugeno",
            VariantId::LinearSugeno => "linear-sugeno",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            VariantId::GaussianMamdani => "Gaussian Mamdani",
            VariantId::TriangularMamdani => "Triangular Mamdani",
            VariantId::ConstantSugeno => "Constant Sugeno",
            VariantId::LinearSugeno => "Linear Sugeno",
        }
    }

    pub fn is_mamdani(self) -> bool {
        matches!(
            self,
            VariantId::GaussianMamdani | VariantId::TriangularMamdani
        )
    }
}

impl fmt::Display for VariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for VariantId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let k = s.trim().to_ascii_lowercase().replace('_', "-");
        VariantId::ALL
            .into_iter()
            .find(|v| v.key() == k)
            .ok_or_else(|| {
                let valid: Vec<_> = VariantId::ALL.iter().map(|v| v.key()).collect();
                Error::InvalidParameter(format!(
                    "unknown variant `{s}` (valid: {})",
                    valid.join(", ")
                ))
            })
    }
}

/// Knobs for building the comparison systems.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemOptions {
    pub resolution: usize,
    pub mamdani_and: AndOp,
    pub sugeno_and: AndOp,
    pub defuzz: Defuzzifier,
    /// Input membership family of both Sugeno variants.
    pub sugeno_inputs: MfFamily,
    /// Slopes shared by every linear Sugeno rule of a decision, one per
    /// input. Missing decisions get zero slopes.
    pub linear_coefficients: BTreeMap<DecisionId, Vec<f64>>,
}

impl Default for SystemOptions {
    fn default() -> Self {
        SystemOptions {
            resolution: DEFAULT_RESOLUTION,
            mamdani_and: AndOp::Min,
            sugeno_and: AndOp::Product,
            defuzz: Defuzzifier::Centroid,
            sugeno_inputs: MfFamily::Gaussian,
            linear_coefficients: BTreeMap::new(),
        }
    }
}

/// Builds one comparison system from the built-in rule base.
pub fn build_system(
    decision: DecisionId,
    variant: VariantId,
    opts: &SystemOptions,
) -> Result<FuzzySystem> {
    build_with_rules(decision, variant, &builtin_rulebase(decision), opts)
}

/// Like [`build_system`] with a caller-supplied rule base for the decision.
pub fn build_with_rules(
    decision: DecisionId,
    variant: VariantId,
    rulebase: &RuleBase,
    opts: &SystemOptions,
) -> Result<FuzzySystem> {
    let input_family = match variant {
        VariantId::GaussianMamdani => MfFamily::Gaussian,
        VariantId::TriangularMamdani => MfFamily::Triangular,
        VariantId::ConstantSugeno | VariantId::LinearSugeno => opts.sugeno_inputs,
    };
    let inputs: Vec<_> = decision
        .inputs()
        .iter()
        .map(|&i| input_variable(i, input_family))
        .collect();
    let out_id = decision.output();

    if variant.is_mamdani() {
        let output = output_variable(out_id, input_family);
        rulebase.check_binding(&inputs, &output)?;
        let config = EngineConfig::mamdani()
            .with_and_op(opts.mamdani_and)
            .with_defuzz(opts.defuzz)
            .with_resolution(opts.resolution);
        return FuzzySystem::mamdani(inputs, output, rulebase.rules().to_vec(), config);
    }

    // Sugeno constants sit at the output terms' peaks.
    let output = output_variable(out_id, MfFamily::Triangular);
    rulebase.check_binding(&inputs, &output)?;
    let peaks: Vec<f64> = out_id.label_set().peaks().collect();
    let slopes = match variant {
        VariantId::LinearSugeno => {
            let c = opts
                .linear_coefficients
                .get(&decision)
                .cloned()
                .unwrap_or_else(|| vec![0.0; inputs.len()]);
            if c.len() != inputs.len() {
                return Err(Error::Arity {
                    expected: inputs.len(),
                    got: c.len(),
                });
            }
            Some(c)
        }
        _ => None,
    };
    let rules = rulebase
        .rules()
        .iter()
        .map(|r| {
            let Consequent::Term(t) = r.consequent() else {
                unreachable!("rule bases hold term consequents")
            };
            let consequent = match &slopes {
                Some(c) => SugenoConsequent::linear(peaks[*t], c.clone()),
                None => SugenoConsequent::constant(peaks[*t]),
            };
            r.with_consequent(Consequent::Affine(consequent))
        })
        .collect();
    let config = EngineConfig::sugeno()
        .with_and_op(opts.sugeno_and)
        .with_resolution(opts.resolution);
    FuzzySystem::sugeno(inputs, out_id.key(), Universe::PERCENT, rules, config)
}
