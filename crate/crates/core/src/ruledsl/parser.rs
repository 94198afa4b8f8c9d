//! Line-oriented rule text:
//!
//! ```text
//! rule   := "IF" clause ("AND" clause)* "THEN" clause
//! clause := IDENT "IS" LABEL
//! ```
//!
//! `#` starts a comment and blank lines are skipped. Keywords are
//! case-insensitive. Labels match case-insensitively with spaces and
//! underscores interchangeable, so a label may span several words.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::inference::{Antecedent, Consequent, Rule};
use crate::ruledsl::rulebase::{RuleBase, RuleSource, VarSignature};
use crate::variable::{label_key, LinguisticVariable};

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct ParsedRule {
    pub line: usize,
    pub rule: Rule,
}

fn is_kw(token: &str, kw: &str) -> bool {
    token.eq_ignore_ascii_case(kw)
}

/// Splits `tokens` into `(variable words, label words)` clauses separated by
/// `AND`.
fn split_clauses(tokens: &[&str], line: usize) -> Result<Vec<(String, String)>> {
    let mut clauses = Vec::new();
    for chunk in tokens.split(|t| is_kw(t, "AND")) {
        let is_at = chunk
            .iter()
            .position(|t| is_kw(t, "IS"))
            .ok_or_else(|| Error::Syntax {
                line,
                message: format!(
                    "expected `<variable> IS <label>`, got `{}`",
                    chunk.join(" ")
                ),
            })?;
        let (var, label) = (&chunk[..is_at], &chunk[is_at + 1..]);
        if var.is_empty() || label.is_empty() || label.iter().any(|t| is_kw(t, "IS")) {
            return Err(Error::Syntax {
                line,
                message: format!("malformed clause `{}`", chunk.join(" ")),
            });
        }
        clauses.push((var.join("_"), label.join(" ")));
    }
    Ok(clauses)
}

fn resolve_label(var: &LinguisticVariable, label: &str, line: usize) -> Result<usize> {
    var.term_index(label).ok_or_else(|| Error::UnknownLabel {
        line,
        variable: var.name().to_owned(),
        label: label.to_owned(),
        valid: var.labels().collect::<Vec<_>>().join(", "),
    })
}

fn parse_line(
    tokens: &[&str],
    line: usize,
    inputs: &[LinguisticVariable],
    output: &LinguisticVariable,
) -> Result<Rule> {
    if !tokens.first().is_some_and(|t| is_kw(t, "IF")) {
        return Err(Error::Syntax {
            line,
            message: "rule must start with IF".into(),
        });
    }
    let then_at = tokens
        .iter()
        .position(|t| is_kw(t, "THEN"))
        .ok_or_else(|| Error::Syntax {
            line,
            message: "missing THEN".into(),
        })?;
    if tokens[then_at + 1..]
        .iter()
        .any(|t| is_kw(t, "THEN") || is_kw(t, "AND"))
    {
        return Err(Error::Syntax {
            line,
            message: "THEN must be followed by a single clause".into(),
        });
    }
    let conditions = split_clauses(&tokens[1..then_at], line)?;
    let conclusion = split_clauses(&tokens[then_at + 1..], line)?;

    let mut antecedents = Vec::with_capacity(conditions.len());
    for (name, label) in &conditions {
        let key = label_key(name);
        let variable = inputs
            .iter()
            .position(|v| label_key(v.name()) == key)
            .ok_or_else(|| Error::UnknownVariable {
                line,
                name: name.clone(),
            })?;
        if antecedents
            .iter()
            .any(|a: &Antecedent| a.variable == variable)
        {
            return Err(Error::Syntax {
                line,
                message: format!("`{name}` appears twice in the antecedent"),
            });
        }
        let term = resolve_label(&inputs[variable], label, line)?;
        antecedents.push(Antecedent { variable, term });
    }

    let (out_name, out_label) = &conclusion[0];
    if label_key(out_name) != label_key(output.name()) {
        return Err(Error::UnknownVariable {
            line,
            name: out_name.clone(),
        });
    }
    let term = resolve_label(output, out_label, line)?;
    Rule::new(antecedents, Consequent::Term(term)).map_err(|e| Error::Syntax {
        line,
        message: e.to_string(),
    })
}

/// Every rule with its 1-based line number; no duplicate checking.
pub(crate) fn parse_lines(
    text: &str,
    inputs: &[LinguisticVariable],
    output: &LinguisticVariable,
) -> Result<Vec<ParsedRule>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        out.push(ParsedRule {
            line,
            rule: parse_line(&tokens, line, inputs, output)?,
        });
    }
    Ok(out)
}

/// Parses rule text against the bound variables.
///
/// Any antecedent set that appears twice is an error, whether or not the
/// consequents agree.
pub fn parse_rules(
    text: &str,
    inputs: &[LinguisticVariable],
    output: &LinguisticVariable,
) -> Result<RuleBase> {
    let parsed = parse_lines(text, inputs, output)?;
    let mut seen: HashMap<&[Antecedent], usize> = HashMap::new();
    for p in &parsed {
        if let Some(&first) = seen.get(p.rule.antecedents()) {
            return Err(Error::DuplicateAntecedent {
                first,
                second: p.line,
            });
        }
        seen.insert(p.rule.antecedents(), p.line);
    }
    Ok(RuleBase::new(
        inputs.iter().map(VarSignature::of).collect(),
        VarSignature::of(output),
        parsed.into_iter().map(|p| p.rule).collect(),
        RuleSource::Parsed,
    ))
}

/// Canonical text: one rule per line, antecedents in input order, labels as
/// declared, no trailing newline.
pub fn serialize_rules(rulebase: &RuleBase) -> String {
    let inputs = rulebase.inputs();
    let output = rulebase.output();
    let mut lines = Vec::with_capacity(rulebase.len());
    for rule in rulebase.rules() {
        let mut line = String::from("IF ");
        for (k, a) in rule.antecedents().iter().enumerate() {
            if k > 0 {
                line.push_str(" AND ");
            }
            let sig = &inputs[a.variable];
            line.push_str(&format!("{} IS {}", sig.name, sig.labels[a.term]));
        }
        let label = match rule.consequent() {
            Consequent::Term(t) => output.labels[*t].as_str(),
            Consequent::Affine(_) => unreachable!("rule bases hold term consequents"),
        };
        line.push_str(&format!(" THEN {} IS {}", output.name, label));
        lines.push(line);
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{input_variable, output_variable, InputId, MfFamily, OutputId};

    fn channel_selection_vars() -> (Vec<LinguisticVariable>, LinguisticVariable) {
        let f = MfFamily::Triangular;
        (
            vec![
                input_variable(InputId::SignalStrength, f),
                input_variable(InputId::SpectrumDemand, f),
                input_variable(InputId::Snr, f),
            ],
            output_variable(OutputId::ChannelSelection, f),
        )
    }

    #[test]
    fn parses_a_table_row() {
        let (inputs, output) = channel_selection_vars();
        let rb = parse_rules(
            "IF signal_strength IS VeryHigh AND spectrum_demand IS Low AND snr IS Moderate THEN channel_selection IS High",
            &inputs,
            &output,
        )
        .unwrap();
        assert_eq!(rb.len(), 1);
        let r = &rb.rules()[0];
        let terms: Vec<usize> = r.antecedents().iter().map(|a| a.term).collect();
        assert_eq!(terms, [4, 1, 2]);
        assert_eq!(r.consequent(), &Consequent::Term(3));
    }

    #[test]
    fn order_case_and_spacing_do_not_matter() {
        let (inputs, output) = channel_selection_vars();
        let a = parse_rules(
            "if SNR is moderate and Signal_Strength is very high and spectrum_demand is LOW then channel_selection is high",
            &inputs,
            &output,
        )
        .unwrap();
        let b = parse_rules(
            "IF signal_strength IS Very_High AND spectrum_demand IS Low AND snr IS Moderate THEN channel_selection IS High  # trailing comment",
            &inputs,
            &output,
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn empty_and_comment_only_text() {
        let (inputs, output) = channel_selection_vars();
        assert!(parse_rules("", &inputs, &output).unwrap().is_empty());
        assert!(parse_rules("# nothing\n\n   \n", &inputs, &output)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn unknown_variable_reports_line() {
        let (inputs, output) = channel_selection_vars();
        let err = parse_rules("IF x IS Foo THEN y IS Low", &inputs, &output).unwrap_err();
        assert_eq!(
            err,
            Error::UnknownVariable {
                line: 1,
                name: "x".into()
            }
        );
    }

    #[test]
    fn unknown_label_lists_valid_ones() {
        let (inputs, output) = channel_selection_vars();
        let err = parse_rules(
            "\nIF snr IS Huge THEN channel_selection IS Low",
            &inputs,
            &output,
        )
        .unwrap_err();
        match err {
            Error::UnknownLabel {
                line,
                variable,
                valid,
                ..
            } => {
                assert_eq!(line, 2);
                assert_eq!(variable, "snr");
                assert_eq!(valid, "VeryLow, Low, Moderate, High, VeryHigh");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn duplicate_antecedents_name_both_lines() {
        let (inputs, output) = channel_selection_vars();
        let text = "IF snr IS Low THEN channel_selection IS Low\n# c\nIF snr IS Low THEN channel_selection IS High";
        assert_eq!(
            parse_rules(text, &inputs, &output).unwrap_err(),
            Error::DuplicateAntecedent {
                first: 1,
                second: 3
            }
        );
    }

    #[test]
    fn syntax_errors() {
        let (inputs, output) = channel_selection_vars();
        for bad in [
            "snr IS Low THEN channel_selection IS Low",
            "IF snr IS Low",
            "IF snr Low THEN channel_selection IS Low",
            "IF snr IS Low THEN channel_selection IS Low AND snr IS High",
            "IF snr IS Low AND snr IS High THEN channel_selection IS Low",
            "IF snr IS THEN channel_selection IS Low",
        ] {
            assert!(
                matches!(
                    parse_rules(bad, &inputs, &output),
                    Err(Error::Syntax { line: 1, .. })
                ),
                "{bad}"
            );
        }
        // An input used as the conclusion.
        assert!(matches!(
            parse_rules("IF snr IS Low THEN snr IS Low", &inputs, &output),
            Err(Error::UnknownVariable { .. })
        ));
    }

    #[test]
    fn single_rule_serializes_without_trailing_newline() {
        let (inputs, output) = channel_selection_vars();
        let text = "IF snr IS low AND signal_strength IS very_high THEN channel_selection IS high";
        let rb = parse_rules(text, &inputs, &output).unwrap();
        assert_eq!(
            serialize_rules(&rb),
            "IF signal_strength IS VeryHigh AND snr IS Low THEN channel_selection IS High"
        );
    }
}
