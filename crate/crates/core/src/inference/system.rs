use crate::error::{Error, Result};
use crate::inference::config::{EngineConfig, EngineKind};
use crate::inference::curve::{AggregateCurve, SampleGrid};
use crate::inference::rule::{firing_strength, Consequent, Rule};
use crate::membership::Universe;
use crate::variable::{LinguisticVariable, Memberships};

#[derive(Debug, Clone, PartialEq)]
pub enum SystemOutput {
    /// Mamdani: a fuzzy output variable.
    Fuzzy(LinguisticVariable),
    /// Sugeno: a crisp output name and range.
    Crisp { name: String, universe: Universe },
}

impl SystemOutput {
    pub fn name(&self) -> &str {
        match self {
            SystemOutput::Fuzzy(v) => v.name(),
            SystemOutput::Crisp { name, .. } => name,
        }
    }

    pub fn universe(&self) -> Universe {
        match self {
            SystemOutput::Fuzzy(v) => v.universe(),
            SystemOutput::Crisp { universe, .. } => *universe,
        }
    }
}

/// A complete inference system. Immutable once built.
#[derive(Debug, Clone)]
pub struct FuzzySystem {
    inputs: Vec<LinguisticVariable>,
    output: SystemOutput,
    rules: Vec<Rule>,
    config: EngineConfig,
    // Output terms pre-sampled on the defuzzification grid (Mamdani only).
    sampled_terms: Vec<Vec<f64>>,
}

impl FuzzySystem {
    pub fn mamdani(
        inputs: Vec<LinguisticVariable>,
        output: LinguisticVariable,
        rules: Vec<Rule>,
        config: EngineConfig,
    ) -> Result<Self> {
        if config.kind != EngineKind::Mamdani {
            return Err(Error::WrongEngine {
                expected: "Mamdani",
            });
        }
        config.validate()?;
        for (i, r) in rules.iter().enumerate() {
            match r.consequent() {
                Consequent::Term(t) if *t < output.terms().len() => {}
                Consequent::Term(t) => {
                    return Err(Error::InvalidParameter(format!(
                        "rule #{i}: output term #{t} out of range"
                    )))
                }
                Consequent::Affine(_) => {
                    return Err(Error::InvalidParameter(format!(
                        "rule #{i}: Mamdani rules need a term consequent"
                    )))
                }
            }
        }
        check_antecedents(&inputs, &rules)?;
        let grid = SampleGrid::new(output.universe(), config.resolution)?;
        let sampled_terms = output
            .terms()
            .iter()
            .map(|t| {
                (0..config.resolution)
                    .map(|i| t.mf.eval(grid.x(i)))
                    .collect()
            })
            .collect();
        Ok(FuzzySystem {
            inputs,
            output: SystemOutput::Fuzzy(output),
            rules,
            config,
            sampled_terms,
        })
    }

    pub fn sugeno(
        inputs: Vec<LinguisticVariable>,
        output_name: impl Into<String>,
        universe: Universe,
        rules: Vec<Rule>,
        config: EngineConfig,
    ) -> Result<Self> {
        if config.kind != EngineKind::Sugeno {
            return Err(Error::WrongEngine { expected: "Sugeno" });
        }
        config.validate()?;
        for (i, r) in rules.iter().enumerate() {
            match r.consequent() {
                Consequent::Affine(c)
                    if c.is_finite()
                        && (c.coefficients.is_empty() || c.coefficients.len() == inputs.len()) => {}
                Consequent::Affine(_) => {
                    return Err(Error::InvalidParameter(format!(
                        "rule #{i}: Sugeno consequent needs finite values and 0 or {} coefficients",
                        inputs.len()
                    )))
                }
                Consequent::Term(_) => {
                    return Err(Error::InvalidParameter(format!(
                        "rule #{i}: Sugeno rules need an affine consequent"
                    )))
                }
            }
        }
        check_antecedents(&inputs, &rules)?;
        Ok(FuzzySystem {
            inputs,
            output: SystemOutput::Crisp {
                name: output_name.into(),
                universe,
            },
            rules,
            config,
            sampled_terms: Vec::new(),
        })
    }

    pub fn inputs(&self) -> &[LinguisticVariable] {
        &self.inputs
    }

    pub fn output(&self) -> &SystemOutput {
        &self.output
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn input_index(&self, name: &str) -> Option<usize> {
        self.inputs.iter().position(|v| v.name() == name)
    }

    fn check_arity(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.inputs.len() {
            return Err(Error::Arity {
                expected: self.inputs.len(),
                got: x.len(),
            });
        }
        Ok(())
    }

    pub fn fuzzify(&self, x: &[f64]) -> Result<Vec<Memberships>> {
        self.check_arity(x)?;
        Ok(self
            .inputs
            .iter()
            .zip(x)
            .map(|(v, &xi)| v.fuzzify(xi))
            .collect())
    }

    /// Firing strength of every rule, in rule order.
    pub fn firing_strengths(&self, x: &[f64]) -> Result<Vec<f64>> {
        let fz = self.fuzzify(x)?;
        self.rules
            .iter()
            .map(|r| {
                firing_strength(r, &fz, self.config.and_op).map_err(|e| match e {
                    Error::MissingInput(i) => Error::MissingVariable(
                        self.inputs
                            .get(i)
                            .map_or_else(|| format!("#{i}"), |v| v.name().to_owned()),
                    ),
                    e => e,
                })
            })
            .collect()
    }

    /// Min-implication, max-aggregation curve for given rule strengths.
    pub fn mamdani_curve(&self, strengths: &[f64]) -> Result<AggregateCurve> {
        let SystemOutput::Fuzzy(out) = &self.output else {
            return Err(Error::WrongEngine {
                expected: "Mamdani",
            });
        };
        if strengths.len() != self.rules.len() {
            return Err(Error::Arity {
                expected: self.rules.len(),
                got: strengths.len(),
            });
        }
        // max_r min(w_r, mu_t) = min(max_r w_r, mu_t) for rules sharing term t.
        let mut clip = vec![0.0f64; self.sampled_terms.len()];
        for (rule, &w) in self.rules.iter().zip(strengths) {
            if let Consequent::Term(t) = rule.consequent() {
                clip[*t] = clip[*t].max(w.clamp(0.0, 1.0));
            }
        }
        if clip.iter().all(|&w| w <= 0.0) {
            return Err(Error::EmptyAggregate);
        }
        let mut degrees = vec![0.0f64; self.config.resolution];
        for (samples, &w) in self.sampled_terms.iter().zip(&clip) {
            if w <= 0.0 {
                continue;
            }
            for (d, &mu) in degrees.iter_mut().zip(samples) {
                *d = d.max(mu.min(w));
            }
        }
        AggregateCurve::from_degrees(out.universe(), degrees)
    }

    pub fn aggregate(&self, x: &[f64]) -> Result<AggregateCurve> {
        if self.config.kind != EngineKind::Mamdani {
            return Err(Error::WrongEngine {
                expected: "Mamdani",
            });
        }
        let strengths = self.firing_strengths(x)?;
        self.mamdani_curve(&strengths)
    }

    /// Weighted average of rule outputs for given strengths.
    pub fn sugeno_weighted(&self, strengths: &[f64], x: &[f64]) -> Result<f64> {
        if self.config.kind != EngineKind::Sugeno {
            return Err(Error::WrongEngine { expected: "Sugeno" });
        }
        self.check_arity(x)?;
        let clamped: Vec<f64> = self
            .inputs
            .iter()
            .zip(x)
            .map(|(v, &xi)| v.universe().clamp(xi))
            .collect();
        let (mut num, mut den) = (0.0, 0.0);
        for (rule, &w) in self.rules.iter().zip(strengths) {
            if w <= 0.0 {
                continue;
            }
            if let Consequent::Affine(c) = rule.consequent() {
                num += w * c.output(&clamped);
                den += w;
            }
        }
        if den <= 0.0 {
            return Err(Error::EmptyAggregate);
        }
        Ok(num / den)
    }

    pub fn sugeno_evaluate(&self, x: &[f64]) -> Result<f64> {
        if self.config.kind != EngineKind::Sugeno {
            return Err(Error::WrongEngine { expected: "Sugeno" });
        }
        let strengths = self.firing_strengths(x)?;
        self.sugeno_weighted(&strengths, x)
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        match self.config.kind {
            EngineKind::Mamdani => self.aggregate(x)?.defuzzify(self.config.defuzz),
            EngineKind::Sugeno => self.sugeno_evaluate(x),
        }
    }
}

fn check_antecedents(inputs: &[LinguisticVariable], rules: &[Rule]) -> Result<()> {
    for (i, r) in rules.iter().enumerate() {
        if r.antecedents().len() > inputs.len() {
            return Err(Error::InvalidParameter(format!(
                "rule #{i} has more antecedents than the system has inputs"
            )));
        }
        for a in r.antecedents() {
            let var = inputs.get(a.variable).ok_or_else(|| {
                Error::InvalidParameter(format!("rule #{i}: input #{} out of range", a.variable))
            })?;
            if a.term >= var.terms().len() {
                return Err(Error::InvalidParameter(format!(
                    "rule #{i}: term #{} out of range for `{}`",
                    a.term,
                    var.name()
                )));
            }
        }
    }
    Ok(())
}

pub fn mamdani_aggregate(system: &FuzzySystem, x: &[f64]) -> Result<AggregateCurve> {
    system.aggregate(x)
}

pub fn sugeno_evaluate(system: &FuzzySystem, x: &[f64]) -> Result<f64> {
    system.sugeno_evaluate(x)
}

pub fn evaluate(system: &FuzzySystem, x: &[f64]) -> Result<f64> {
    system.evaluate(x)
}
