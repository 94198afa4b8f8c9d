use crate::error::{Error, Result};
use crate::inference::Rule;
use crate::ruledsl::DecisionId;
use crate::variable::{label_key, LinguisticVariable};

/// Name and ordered labels of a variable a rule base was resolved against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSignature {
    pub name: String,
    pub labels: Vec<String>,
}

impl VarSignature {
    pub fn of(var: &LinguisticVariable) -> Self {
        VarSignature {
            name: var.name().to_owned(),
            labels: var.labels().map(str::to_owned).collect(),
        }
    }

    fn matches(&self, var: &LinguisticVariable) -> bool {
        self.name == var.name()
            && self.labels.len() == var.terms().len()
            && self
                .labels
                .iter()
                .zip(var.labels())
                .all(|(a, b)| label_key(a) == label_key(b))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleSource {
    Builtin(DecisionId),
    Parsed,
}

/// Ordered rules plus the variable signatures their indices refer to.
///
/// Equality ignores [`RuleSource`].
#[derive(Debug, Clone)]
pub struct RuleBase {
    inputs: Vec<VarSignature>,
    output: VarSignature,
    rules: Vec<Rule>,
    source: RuleSource,
}

impl PartialEq for RuleBase {
    fn eq(&self, other: &Self) -> bool {
        self.inputs == other.inputs && self.output == other.output && self.rules == other.rules
    }
}

impl RuleBase {
    pub(crate) fn new(
        inputs: Vec<VarSignature>,
        output: VarSignature,
        rules: Vec<Rule>,
        source: RuleSource,
    ) -> Self {
        RuleBase {
            inputs,
            output,
            rules,
            source,
        }
    }

    pub fn inputs(&self) -> &[VarSignature] {
        &self.inputs
    }

    pub fn output(&self) -> &VarSignature {
        &self.output
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn source(&self) -> RuleSource {
        self.source
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Checks that `inputs`/`output` have the names and labels this base was
    /// resolved against, so its indices are valid for them.
    pub fn check_binding(
        &self,
        inputs: &[LinguisticVariable],
        output: &LinguisticVariable,
    ) -> Result<()> {
        if inputs.len() != self.inputs.len() {
            return Err(Error::Binding(format!(
                "expected {} inputs, got {}",
                self.inputs.len(),
                inputs.len()
            )));
        }
        for (sig, var) in self
            .inputs
            .iter()
            .chain([&self.output])
            .zip(inputs.iter().chain([output]))
        {
            if !sig.matches(var) {
                return Err(Error::Binding(format!(
                    "expected `{}` with labels {:?}, got {var}",
                    sig.name, sig.labels
                )));
            }
        }
        Ok(())
    }
}
