use std::collections::HashMap;

use crate::catalog::{input_variable, output_variable, MfFamily};
use crate::inference::{Antecedent, Consequent, Rule};
use crate::ruledsl::rulebase::{RuleBase, RuleSource, VarSignature};
use crate::ruledsl::tables;
use crate::ruledsl::DecisionId;
use crate::variable::LinguisticVariable;

/// Rows as printed, antecedent labels first and the consequent last.
pub(crate) fn printed_rows(id: DecisionId) -> Vec<&'static [&'static str]> {
    fn rows<const N: usize>(t: &'static [[&'static str; N]]) -> Vec<&'static [&'static str]> {
        t.iter().map(|r| r.as_slice()).collect()
    }
    match id {
        DecisionId::ChannelSelection => rows(tables::CHANNEL_SELECTION),
        DecisionId::HandoffStatus => rows(tables::HANDOFF_STATUS),
        DecisionId::ChannelGain => rows(tables::CHANNEL_GAIN),
        DecisionId::AccessSpectrum => rows(tables::ACCESS_SPECTRUM),
        DecisionId::AccessLatency => rows(tables::ACCESS_LATENCY),
        DecisionId::BandwidthAllocation => rows(tables::BANDWIDTH_ALLOCATION),
    }
}

/// Catalog variables (triangular family) a decision's rules refer to.
pub fn decision_variables(
    id: DecisionId,
    family: MfFamily,
) -> (Vec<LinguisticVariable>, LinguisticVariable) {
    (
        id.inputs()
            .iter()
            .map(|&i| input_variable(i, family))
            .collect(),
        output_variable(id.output(), family),
    )
}

/// The built-in rule base for a decision, in printed row order.
///
/// Exact duplicate rows are dropped. A duplicated antecedent set with a
/// different consequent would be a transcription error and panics.
pub fn builtin_rulebase(id: DecisionId) -> RuleBase {
    let (inputs, output) = decision_variables(id, MfFamily::Triangular);
    let n = inputs.len();
    let mut seen: HashMap<Vec<Antecedent>, usize> = HashMap::new();
    let mut rules = Vec::new();
    for row in printed_rows(id) {
        let antecedents: Vec<Antecedent> = row[..n]
            .iter()
            .enumerate()
            .map(|(variable, label)| Antecedent {
                variable,
                term: inputs[variable]
                    .term_index(label)
                    .unwrap_or_else(|| panic!("{id}: bad label {label}")),
            })
            .collect();
        let term = output
            .term_index(row[n])
            .unwrap_or_else(|| panic!("{id}: bad output label {}", row[n]));
        if let Some(&prev) = seen.get(&antecedents) {
            assert_eq!(prev, term, "{id}: conflicting duplicate row {row:?}");
            continue;
        }
        seen.insert(antecedents.clone(), term);
        rules.push(
            Rule::new(antecedents, Consequent::Term(term)).expect("table rows are well formed"),
        );
    }
    RuleBase::new(
        inputs.iter().map(VarSignature::of).collect(),
        VarSignature::of(&output),
        rules,
        RuleSource::Builtin(id),
    )
}
