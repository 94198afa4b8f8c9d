//! Rule text format and the six built-in spectrum-decision rule bases.

mod builtin;
mod check;
mod decision;
mod parser;
mod rulebase;
mod tables;

pub use builtin::{builtin_rulebase, decision_variables};
pub use check::{check_rules, DuplicateRule, RuleCheck};
pub use decision::DecisionId;
pub use parser::{parse_rules, serialize_rules};
pub use rulebase::{RuleBase, RuleSource, VarSignature};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::MfFamily;
    use crate::inference::Consequent;

    fn lookup(id: DecisionId, labels: &[&str]) -> String {
        let rb = builtin_rulebase(id);
        let (inputs, output) = decision_variables(id, MfFamily::Triangular);
        let want: Vec<usize> = labels
            .iter()
            .zip(&inputs)
            .map(|(l, v)| v.term_index(l).unwrap())
            .collect();
        let rule = rb
            .rules()
            .iter()
            .find(|r| {
                r.antecedents()
                    .iter()
                    .map(|a| a.term)
                    .eq(want.iter().copied())
            })
            .expect("combination present");
        match rule.consequent() {
            Consequent::Term(t) => output.terms()[*t].label.clone(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn table_rows_spot_checks() {
        assert_eq!(
            lookup(DecisionId::HandoffStatus, &["VeryHigh", "Moderate"]),
            "On"
        );
        assert_eq!(
            lookup(DecisionId::AccessSpectrum, &["Small", "Small", "Small"]),
            "VeryLow"
        );
        assert_eq!(
            lookup(DecisionId::BandwidthAllocation, &["VeryHigh", "Present"]),
            "VeryLow"
        );
        assert_eq!(
            lookup(DecisionId::AccessLatency, &["VeryLow", "Absent"]),
            "VeryLow"
        );
        assert_eq!(
            lookup(
                DecisionId::ChannelSelection,
                &["VeryHigh", "Low", "Moderate"]
            ),
            "High"
        );
        assert_eq!(
            lookup(DecisionId::ChannelSelection, &["Low", "VeryLow", "VeryLow"]),
            "Moderate"
        );
        assert_eq!(
            lookup(DecisionId::ChannelGain, &["VeryLow", "Moderate"]),
            "Low"
        );
    }

    #[test]
    fn channel_selection_printed_with_one_duplicate() {
        let printed = builtin::printed_rows(DecisionId::ChannelSelection);
        assert_eq!(printed.len(), 126);
        let dup = ["Low", "VeryLow", "VeryLow", "Moderate"];
        assert_eq!(printed.iter().filter(|r| **r == dup).count(), 2);
        assert_eq!(builtin_rulebase(DecisionId::ChannelSelection).len(), 125);
    }

    #[test]
    fn builtin_counts_completeness_and_round_trip() {
        for id in DecisionId::ALL {
            let rb = builtin_rulebase(id);
            assert_eq!(rb.len(), id.rule_count(), "{id}");
            assert_eq!(rb.source(), RuleSource::Builtin(id));
            let text = serialize_rules(&rb);
            assert_eq!(text.lines().count(), rb.len());
            let (inputs, output) = decision_variables(id, MfFamily::Gaussian);
            let back = parse_rules(&text, &inputs, &output).unwrap();
            assert_eq!(back, rb, "{id}");
            let report = check_rules(&text, &inputs, &output).unwrap();
            assert!(report.is_clean(), "{id}: {report}");
            rb.check_binding(&inputs, &output).unwrap();
        }
    }

    #[test]
    fn check_reports_gaps_and_conflicts() {
        let id = DecisionId::HandoffStatus;
        let (inputs, output) = decision_variables(id, MfFamily::Triangular);
        let text = serialize_rules(&builtin_rulebase(id));
        let mut lines: Vec<&str> = text.lines().collect();
        let removed = lines.remove(3);
        let report = check_rules(&lines.join("\n"), &inputs, &output).unwrap();
        assert_eq!(report.rule_count, 24);
        assert_eq!(
            report.gaps,
            vec![vec!["VeryHigh".to_string(), "Low".to_string()]]
        );
        assert!(removed.contains("interference IS Low"));

        let conflict = format!(
            "{text}\nIF snr IS VeryHigh AND interference IS VeryHigh THEN handoff_status IS On"
        );
        let report = check_rules(&conflict, &inputs, &output).unwrap();
        assert_eq!(
            report.duplicates,
            vec![DuplicateRule {
                first_line: 1,
                second_line: 26,
                conflicting: true
            }]
        );
        assert!(!report.is_clean());
        assert!(report.to_string().contains("lines 1 and 26"));
    }

    #[test]
    fn binding_rejects_other_variables() {
        let rb = builtin_rulebase(DecisionId::HandoffStatus);
        let (inputs, output) = decision_variables(DecisionId::ChannelGain, MfFamily::Triangular);
        assert!(rb.check_binding(&inputs, &output).is_err());
    }
}
