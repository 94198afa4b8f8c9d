use crate::error::{Error, Result};
use crate::inference::config::AndOp;
use crate::variable::Memberships;

/// `input[variable] IS term[term]`, by index into the owning system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Antecedent {
    pub variable: usize,
    pub term: usize,
}

/// Affine Sugeno consequent `constant + Σ coefficients[j] * x[j]`.
///
/// An empty coefficient list is the constant form.
#[derive(Debug, Clone, PartialEq)]
pub struct SugenoConsequent {
    pub constant: f64,
    pub coefficients: Vec<f64>,
}

impl SugenoConsequent {
    pub fn constant(constant: f64) -> Self {
        SugenoConsequent {
            constant,
            coefficients: Vec::new(),
        }
    }

    pub fn linear(constant: f64, coefficients: Vec<f64>) -> Self {
        SugenoConsequent {
            constant,
            coefficients,
        }
    }

    pub fn output(&self, x: &[f64]) -> f64 {
        self.constant
            + self
                .coefficients
                .iter()
                .zip(x)
                .map(|(c, v)| c * v)
                .sum::<f64>()
    }

    pub(crate) fn is_finite(&self) -> bool {
        self.constant.is_finite() && self.coefficients.iter().all(|c| c.is_finite())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Consequent {
    /// Index of an output term (Mamdani).
    Term(usize),
    Affine(SugenoConsequent),
}

/// Conjunctive rule. Antecedents are kept sorted by variable index.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    antecedents: Vec<Antecedent>,
    consequent: Consequent,
}

impl Rule {
    pub fn new(mut antecedents: Vec<Antecedent>, consequent: Consequent) -> Result<Self> {
        if antecedents.is_empty() {
            return Err(Error::InvalidParameter(
                "rule needs at least one antecedent".into(),
            ));
        }
        antecedents.sort();
        if antecedents
            .windows(2)
            .any(|w| w[0].variable == w[1].variable)
        {
            return Err(Error::InvalidParameter(
                "rule names the same variable twice".into(),
            ));
        }
        Ok(Rule {
            antecedents,
            consequent,
        })
    }

    pub fn antecedents(&self) -> &[Antecedent] {
        &self.antecedents
    }

    pub fn consequent(&self) -> &Consequent {
        &self.consequent
    }

    pub(crate) fn with_consequent(&self, consequent: Consequent) -> Rule {
        Rule {
            antecedents: self.antecedents.clone(),
            consequent,
        }
    }
}

/// Conjunction of the rule's antecedent degrees under `and_op`.
pub fn firing_strength(rule: &Rule, fuzzified: &[Memberships], and_op: AndOp) -> Result<f64> {
    let mut strength = 1.0;
    for a in &rule.antecedents {
        let degree = fuzzified
            .get(a.variable)
            .ok_or(Error::MissingInput(a.variable))?
            .get(a.term)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "term #{} out of range for input #{}",
                    a.term, a.variable
                ))
            })?;
        strength = and_op.combine(strength, degree);
    }
    Ok(strength)
}
